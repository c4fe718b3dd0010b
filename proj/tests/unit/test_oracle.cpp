#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "builders.hpp"
#include "k4steiner/certificate.hpp"
#include "k4steiner/error.hpp"
#include "k4steiner/generators.hpp"
#include "k4steiner/oracle.hpp"

using namespace k4st;
using namespace k4st::testing;

TEST(DreyfusWagner, SingleTerminal) {
  const std::vector<VertexId> t{1};
  const SteinerTree tree = dreyfus_wagner(make_graph(3, {{0, 1}, {1, 2}}), t);
  EXPECT_EQ(tree.cost, Weight::zero());
  EXPECT_TRUE(tree.edges.empty());
  EXPECT_EQ(tree.vertices, std::vector<VertexId>{1});
}

TEST(DreyfusWagner, TwoTerminalsIsShortestPath) {
  const Multigraph g = make_graph(4, {{0, 1, 2}, {1, 3, 2}, {0, 2, 1}, {2, 3, 2}});
  const std::vector<VertexId> t{0, 3};
  EXPECT_EQ(dreyfus_wagner(g, t).cost, shortest_path_distance(g, 0, 3));
  EXPECT_EQ(dreyfus_wagner(g, t).cost, Weight(3));
}

TEST(DreyfusWagner, GridCorners) {
  const std::vector<VertexId> corners{0, 2, 6, 8};
  const SteinerTree tree = dreyfus_wagner(grid_graph(3, 3), corners);
  EXPECT_EQ(tree.cost, Weight(6));
  EXPECT_EQ(tree.edges.size(), 6u);
}

TEST(DreyfusWagner, Errors) {
  const std::vector<VertexId> t{0, 1};
  EXPECT_THROW(dreyfus_wagner(Multigraph(2), t), Error);
  std::vector<VertexId> many(16);
  for (VertexId i = 0; i < 16; ++i) many[i] = i;
  EXPECT_THROW(dreyfus_wagner(cycle_graph(16), many), Error);
}

TEST(DreyfusWagner, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 3 + seed % 7;
    const Instance inst = random_connected(n, 1 + seed % std::min<std::size_t>(5, n), 0, seed);
    const SteinerTree tree = dreyfus_wagner(inst.graph, inst.terminals);
    ASSERT_EQ(tree.cost, brute_force_vest(inst)) << "seed " << seed;
    Weight sum = Weight::zero();
    for (EdgeId e : tree.edges) sum += inst.graph.edge(e).weight;
    EXPECT_EQ(sum, tree.cost);
  }
}

TEST(Reduction, NoVirtualEdgesEqualsDreyfusWagner) {
  const Instance inst = make_instance(5, {{0, 1, 3}, {1, 2, 1}, {2, 3, 4}, {3, 4, 1}, {4, 0, 2}}, {0, 2, 3});
  EXPECT_EQ(solve_vest_by_reduction(inst).cost, dreyfus_wagner(inst.graph, inst.terminals).cost);
}

TEST(Reduction, OneVirtualEdgeTakesBestBranch) {
  // path 0-1-2-3, terminal 0, virtual edge 2-3
  const Instance base = make_instance(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}, {0});
  auto with = [&](std::int64_t wu, std::int64_t wv, std::int64_t wc, std::int64_t wd) {
    Instance inst = base;
    inst.virtual_edges.push_back(make_virtual(2, 3, wu, wv, wc, wd));
    return inst;
  };
  // u: 2 + 5, v: 3 + 1, c: 2 + 2, d: 3 + 0
  EXPECT_EQ(solve_vest_by_reduction(with(5, 1, 2, 0)).cost, Weight(3));
  EXPECT_EQ(solve_vest_by_reduction(with(5, 9, 1, 5)).cost, Weight(3));
  EXPECT_EQ(solve_vest_by_reduction(with(0, 9, 9, 0)).cost, Weight(2));
  const Solution sol = solve_vest_by_reduction(with(5, 9, 1, 5));
  EXPECT_EQ(sol.statuses, std::vector<VeStatus>{VeStatus::Connect});
  EXPECT_EQ(validate_solution(with(5, 9, 1, 5), sol), std::nullopt);
}

TEST(Reduction, ForcedInfiniteBranchIsInfeasible) {
  const Instance inst = make_instance(3, {{0, 1, 1}}, {0}, {make_virtual(1, 2, -1, 1, -1, -1)});
  try {
    solve_vest_by_reduction(inst);
    FAIL() << "expected Infeasible";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
}

TEST(Reduction, TooManyVirtualEdges) {
  const Instance inst = random_connected(6, 1, 3, 1);
  EXPECT_THROW(solve_vest_by_reduction(inst, 2), Error);
}

TEST(Reduction, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Instance inst = random_connected(3 + seed % 6, seed % 4, 1 + seed % 3, seed);
    const Weight want = brute_force_vest(inst);
    Weight got = Weight::infinity();
    try {
      const Solution sol = solve_vest_by_reduction(inst);
      got = sol.cost;
      EXPECT_EQ(validate_solution(inst, sol), std::nullopt) << "seed " << seed;
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::kInfeasible);
    }
    ASSERT_EQ(got, want) << "seed " << seed;
  }
}

TEST(RootedK4, FewRootsNever) {
  const std::vector<VertexId> roots{0, 1, 2};
  EXPECT_FALSE(has_rooted_k4(complete_graph(5), roots));
}

TEST(RootedK4, K4AllRoots) {
  const std::vector<VertexId> roots{0, 1, 2, 3};
  const auto cert = has_rooted_k4(complete_graph(4), roots);
  ASSERT_TRUE(cert);
  for (const auto& set : cert->branch_sets) EXPECT_EQ(set.size(), 1u);
  EXPECT_EQ(check_certificate(complete_graph(4), roots, *cert), std::nullopt);
}

TEST(RootedK4, CycleHasNone) {
  const std::vector<VertexId> roots{0, 1, 2, 3};
  EXPECT_FALSE(has_rooted_k4(cycle_graph(4), roots));
}

TEST(RootedK4, SubdividedK4IsFound) {
  // K4 on 0..3 with every edge subdivided once.
  Multigraph g(10);
  VertexId mid = 4;
  for (VertexId u = 0; u < 4; ++u) {
    for (VertexId v = u + 1; v < 4; ++v) {
      g.add_edge(u, mid, Weight(1));
      g.add_edge(mid, v, Weight(1));
      ++mid;
    }
  }
  const std::vector<VertexId> roots{0, 1, 2, 3};
  const auto cert = has_rooted_k4(g, roots);
  ASSERT_TRUE(cert);
  EXPECT_EQ(check_certificate(g, roots, *cert), std::nullopt);
  // vertex 4 subdivides 0-1 and only sees those two roots
  const std::vector<VertexId> other_roots{0, 1, 2, 4};
  EXPECT_FALSE(has_rooted_k4(g, other_roots));
}

TEST(RootedK4, OuterplanarRootsHaveNone) {
  // roots on the outer face of a planar grid
  const std::vector<VertexId> roots{0, 2, 8, 6, 1};
  EXPECT_FALSE(has_rooted_k4(grid_graph(3, 3), roots));
  // the centre is off the outer face: {0,3,6} {1,2,5} {7,8} {4}
  const std::vector<VertexId> inner{0, 2, 8, 4};
  EXPECT_TRUE(has_rooted_k4(grid_graph(3, 3), inner));
}

TEST(RootedK4, CertificatesOnRandomGraphsAreValid) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = random_connected(7 + seed % 3, 4 + seed % 2, 0, seed);
    const auto cert = has_rooted_k4(inst.graph, inst.terminals);
    if (cert) {
      EXPECT_EQ(check_certificate(inst.graph, inst.terminals, *cert), std::nullopt) << "seed " << seed;
    }
  }
}

TEST(MinorFree, Examples) {
  EXPECT_TRUE(instance_is_minor_free(fix_tri()));
  EXPECT_FALSE(instance_is_minor_free(k4_all_terminals()));
  EXPECT_TRUE(instance_is_minor_free(Instance::from_parts(cycle_graph(4), {0, 1, 2, 3})));
}

TEST(MinorFree, VirtualEdgesCountAsRoots) {
  // K4 with three terminals plus a virtual edge from the fourth vertex to a new vertex.
  Multigraph g = complete_graph(4);
  g.add_vertex();
  g.add_edge(3, 4, Weight(1));
  const Instance three = Instance::from_parts(g, {0, 1, 2});
  EXPECT_TRUE(instance_is_minor_free(three));
  const Instance with_virtual = Instance::from_parts(g, {0, 1, 2}, {make_virtual(3, 4, 1, 1, 1, 1)});
  EXPECT_FALSE(instance_is_minor_free(with_virtual));
}
