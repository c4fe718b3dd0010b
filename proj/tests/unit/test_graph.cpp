#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "brute_force.hpp"
#include "builders.hpp"
#include "k4steiner/error.hpp"
#include "k4steiner/graph.hpp"

using namespace k4st;
using namespace k4st::testing;

namespace {

using Parts = std::vector<std::vector<VertexId>>;

Multigraph random_graph(std::mt19937& rng, std::size_t n, std::size_t extra) {
  Multigraph g(n);
  for (VertexId v = 1; v < n; ++v) g.add_edge(static_cast<VertexId>(rng() % v), v, Weight(1 + rng() % 9));
  for (std::size_t i = 0; i < extra; ++i) {
    const auto u = static_cast<VertexId>(rng() % n);
    const auto v = static_cast<VertexId>(rng() % n);
    if (u != v) g.add_edge(u, v, Weight(rng() % 10));
  }
  return g;
}

}  // namespace

TEST(Multigraph, RejectsSelfLoopsAndUnknownVertices) {
  Multigraph g(2);
  EXPECT_THROW(g.add_edge(0, 0, Weight(1)), Error);
  EXPECT_THROW(g.add_edge(0, 2, Weight(1)), Error);
}

TEST(Multigraph, ParallelEdgesKeepIds) {
  Multigraph g(2);
  EXPECT_EQ(g.add_edge(0, 1, Weight(3)), 0u);
  EXPECT_EQ(g.add_edge(1, 0, Weight(5)), 1u);
  EXPECT_EQ(g.incident(0).size(), 2u);
  EXPECT_EQ(g.edge(1).weight, Weight(5));
  EXPECT_EQ(g.add_vertex(), 2u);
}

TEST(ConnectedComponents, EmptyGraph) { EXPECT_TRUE(connected_components(Multigraph(0)).empty()); }

TEST(ConnectedComponents, Path) {
  EXPECT_EQ(connected_components(make_graph(3, {{0, 1}, {1, 2}})), (Parts{{0, 1, 2}}));
}

TEST(ConnectedComponents, IsolatedVertices) {
  EXPECT_EQ(connected_components(Multigraph(2)), (Parts{{0}, {1}}));
  EXPECT_FALSE(is_connected(Multigraph(2)));
}

TEST(FindCutVertex, PathMiddle) {
  const auto cut = find_cut_vertex(make_graph(3, {{0, 1}, {1, 2}}));
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->vertices, std::vector<VertexId>{1});
  EXPECT_EQ(cut->side_a, std::vector<VertexId>{0});
  EXPECT_EQ(cut->side_b, std::vector<VertexId>{2});
}

TEST(FindCutVertex, TriangleHasNone) {
  EXPECT_FALSE(find_cut_vertex(make_graph(3, {{0, 1}, {1, 2}, {2, 0}})));
}

TEST(FindCutVertex, TwoTrianglesSharingVertex) {
  const auto cut = find_cut_vertex(make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}));
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->vertices, std::vector<VertexId>{2});
  EXPECT_EQ(cut->side_a, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(cut->side_b, (std::vector<VertexId>{3, 4}));
}

TEST(FindCutVertex, MatchesBruteForce) {
  std::mt19937 rng(11);
  for (int round = 0; round < 200; ++round) {
    const Multigraph g = random_graph(rng, 3 + rng() % 8, rng() % 6);
    const auto cuts = brute_cut_vertices(g);
    const auto cut = find_cut_vertex(g);
    ASSERT_EQ(cut.has_value(), !cuts.empty());
    if (cut) EXPECT_EQ(cut->vertices.front(), cuts.front());
  }
}

TEST(FindTwoCut, FourCycle) {
  const auto cut = find_two_cut(cycle_graph(4));
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->vertices, (std::vector<VertexId>{0, 2}));
  const std::set<std::vector<VertexId>> sides{cut->side_a, cut->side_b};
  EXPECT_EQ(sides, (std::set<std::vector<VertexId>>{{1}, {3}}));
}

TEST(FindTwoCut, K4HasNone) { EXPECT_FALSE(find_two_cut(complete_graph(4))); }

TEST(FindTwoCut, TrianglesSharingEdge) {
  const auto cut = find_two_cut(make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 1}}));
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->vertices, (std::vector<VertexId>{0, 1}));
}

TEST(FindTwoCut, MatchesBruteForceOnBiconnectedGraphs) {
  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 150) {
    const Multigraph g = random_graph(rng, 4 + rng() % 7, 2 + rng() % 8);
    if (!brute_cut_vertices(g).empty()) continue;
    ++checked;
    const auto cuts = brute_two_cuts(g);
    const auto cut = find_two_cut(g);
    ASSERT_EQ(cut.has_value(), !cuts.empty());
    if (!cut) continue;
    EXPECT_EQ(cut->vertices, (std::vector<VertexId>{cuts.front().first, cuts.front().second}));
    EXPECT_EQ(cut->side_a.size() + cut->side_b.size() + 2, g.vertex_count());
    EXPECT_LE(cut->side_a.size(), cut->side_b.size());
  }
}

TEST(ShortestPath, Basics) {
  const Multigraph path = make_graph(3, {{0, 1, 1}, {1, 2, 1}});
  EXPECT_EQ(shortest_path_distance(path, 1, 1), Weight::zero());
  EXPECT_EQ(shortest_path_distance(path, 0, 2), Weight(2));
  EXPECT_TRUE(shortest_path_distance(Multigraph(2), 0, 1).is_infinite());
}

TEST(ShortestPath, MatchesFloydWarshall) {
  std::mt19937 rng(3);
  for (int round = 0; round < 50; ++round) {
    const Multigraph g = random_graph(rng, 2 + rng() % 9, rng() % 8);
    const auto d = floyd_warshall(g);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      const ShortestPathTree tree = shortest_paths(g, s);
      for (VertexId t = 0; t < g.vertex_count(); ++t) {
        ASSERT_EQ(tree.distance[t], d[s][t]);
        Weight along = Weight::zero();
        for (EdgeId e : path_edges(g, tree, t)) along += g.edge(e).weight;
        EXPECT_EQ(along, d[s][t]);
      }
    }
  }
}

TEST(ShortestPath, AllowedMask) {
  const Multigraph g = make_graph(4, {{0, 1, 1}, {1, 3, 1}, {0, 2, 5}, {2, 3, 5}});
  const std::vector<char> allowed{1, 0, 1, 1};
  EXPECT_EQ(shortest_paths(g, 0, allowed).distance[3], Weight(10));
}

TEST(DisjointPaths, WheelSpokes) {
  const Multigraph g = wheel_graph(5);
  const std::vector<VertexId> rim{1, 2, 3, 4, 5};
  const auto paths = disjoint_paths_to_set(g, 0, rim);
  ASSERT_TRUE(paths);
  ASSERT_EQ(paths->size(), 3u);
  for (const VertexPath& p : *paths) {
    EXPECT_EQ(p.size(), 2u);
    EXPECT_EQ(p.front(), 0u);
  }
}

TEST(DisjointPaths, PathHasOnlyTwo) {
  const Multigraph g = make_graph(3, {{0, 1}, {1, 2}});
  const std::vector<VertexId> targets{0, 2};
  EXPECT_FALSE(disjoint_paths_to_set(g, 1, targets));
}

TEST(DisjointPaths, K4DirectEdges) {
  const std::vector<VertexId> targets{1, 2, 3};
  const auto paths = disjoint_paths_to_set(complete_graph(4), 0, targets);
  ASSERT_TRUE(paths);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ((*paths)[i], (VertexPath{0, targets[i]}));
}

TEST(DisjointPaths, PathsAreInternallyDisjoint) {
  const Multigraph g = grid_graph(4, 4);
  const std::vector<VertexId> targets{0, 3, 15};
  const auto paths = disjoint_paths_to_set(g, 5, targets);
  ASSERT_TRUE(paths);
  std::set<VertexId> seen;
  for (const VertexPath& p : *paths) {
    EXPECT_EQ(p.front(), 5u);
    EXPECT_TRUE(std::find(targets.begin(), targets.end(), p.back()) != targets.end());
    for (std::size_t i = 1; i < p.size(); ++i) EXPECT_TRUE(seen.insert(p[i]).second);
  }
}
