#include <gtest/gtest.h>

#include "k4steiner/error.hpp"
#include "k4steiner/generators.hpp"
#include "k4steiner/graph.hpp"
#include "k4steiner/instance.hpp"
#include "k4steiner/instance_io.hpp"
#include "k4steiner/oracle.hpp"

using namespace k4st;

TEST(GridBoundary, ClockwiseFromTopLeft) {
  EXPECT_EQ(grid_boundary(3, 3), (std::vector<VertexId>{0, 1, 2, 5, 8, 7, 6, 3}));
  EXPECT_EQ(grid_boundary(2, 3), (std::vector<VertexId>{0, 1, 2, 5, 4, 3}));
}

TEST(GridOneFace, ThreeByThreeFourTerminals) {
  const Instance inst = grid_one_face(3, 3, 4, 1);
  EXPECT_EQ(inst.vertex_count(), 9u);
  EXPECT_EQ(inst.graph.edge_count(), 12u);
  EXPECT_EQ(inst.terminals, (std::vector<VertexId>{0, 2, 6, 8}));
  EXPECT_THROW(grid_one_face(3, 3, 9, 1), Error);
}

TEST(GridOneFace, WeightsFollowRangeAndSeed) {
  const Instance a = grid_one_face(4, 4, 5, 7, {2, 6});
  const Instance b = grid_one_face(4, 4, 5, 7, {2, 6});
  EXPECT_EQ(render_instance(a), render_instance(b));
  for (const Edge& e : a.graph.edges()) {
    EXPECT_GE(e.weight, Weight(2));
    EXPECT_LE(e.weight, Weight(6));
  }
}

TEST(Figure1Right, K5WithThreeTerminals) {
  const Instance inst = figure1_right();
  EXPECT_EQ(inst.vertex_count(), 5u);
  EXPECT_EQ(inst.graph.edge_count(), 10u);
  EXPECT_EQ(inst.terminals, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_TRUE(instance_is_minor_free(inst));
}

TEST(K4AllTerminals, HasRootedMinor) { EXPECT_FALSE(instance_is_minor_free(k4_all_terminals())); }

TEST(RandomConnected, Shape) {
  const Instance inst = random_connected(9, 5, 2, 3);
  EXPECT_EQ(inst.vertex_count(), 9u);
  EXPECT_EQ(inst.terminals.size(), 5u);
  EXPECT_EQ(inst.virtual_edges.size(), 2u);
  EXPECT_TRUE(is_connected(inst.graph));
  for (const VirtualEdge& ve : inst.virtual_edges) {
    EXPECT_LE(ve.weight_disconnect, min(ve.weight_u, ve.weight_v));
    EXPECT_NE(ve.u, ve.v);
  }
  EXPECT_THROW(random_connected(3, 4, 0, 1), Error);
}

TEST(RandomMinorFree, PassesFilter) {
  const Instance inst = random_minor_free(8, 4, 0, 7);
  EXPECT_TRUE(instance_is_minor_free(inst));
  EXPECT_EQ(render_instance(inst), render_instance(random_minor_free(8, 4, 0, 7)));
}

TEST(StackedWheel, ThreeConnectedAndMinorFree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = stacked_wheel(5 + seed % 3, seed % 3, 3, seed % 3, seed);
    const Multigraph skel = skeleton(inst);
    EXPECT_FALSE(find_cut_vertex(skel));
    EXPECT_FALSE(find_two_cut(skel));
    EXPECT_EQ(inst.virtual_edges.size(), seed % 3);
    EXPECT_TRUE(instance_is_minor_free(inst)) << "seed " << seed;
  }
}
