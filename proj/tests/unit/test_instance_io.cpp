#include <gtest/gtest.h>

#include "builders.hpp"
#include "k4steiner/error.hpp"
#include "k4steiner/generators.hpp"
#include "k4steiner/instance_io.hpp"

using namespace k4st;
using namespace k4st::testing;

namespace {

constexpr const char* kFixTri = R"(VEST 1
# triangle a, b, c inside K5
SECTION Graph
Nodes 5
Edges 10
E 1 2 1
E 1 3 1
E 1 4 1
E 1 5 1
E 2 3 1
E 2 4 1
E 2 5 1
E 3 4 1
E 3 5 1
E 4 5 1
END
SECTION Terminals
Terminals 3
T 1
T 2
T 3
END
EOF
)";

void expect_same(const Instance& a, const Instance& b) {
  ASSERT_EQ(a.vertex_count(), b.vertex_count());
  ASSERT_EQ(a.graph.edge_count(), b.graph.edge_count());
  for (EdgeId e = 0; e < a.graph.edge_count(); ++e) {
    EXPECT_EQ(a.graph.edge(e).u, b.graph.edge(e).u);
    EXPECT_EQ(a.graph.edge(e).v, b.graph.edge(e).v);
    EXPECT_EQ(a.graph.edge(e).weight, b.graph.edge(e).weight);
  }
  EXPECT_EQ(a.terminals, b.terminals);
  ASSERT_EQ(a.virtual_edges.size(), b.virtual_edges.size());
  for (std::size_t i = 0; i < a.virtual_edges.size(); ++i) {
    const VirtualEdge& x = a.virtual_edges[i];
    const VirtualEdge& y = b.virtual_edges[i];
    EXPECT_EQ(x.u, y.u);
    EXPECT_EQ(x.v, y.v);
    for (VeStatus s : kAllStatuses) EXPECT_EQ(x.weight(s), y.weight(s));
  }
}

ErrorCode parse_error(std::string_view text, int scale = 0) {
  try {
    parse_instance(text, scale);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInconsistentTrace;  // parsed without complaint
}

}  // namespace

TEST(ParseInstance, FixTri) {
  const Instance inst = parse_instance(kFixTri);
  EXPECT_EQ(inst.vertex_count(), 5u);
  EXPECT_EQ(inst.graph.edge_count(), 10u);
  EXPECT_EQ(inst.terminals, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(inst.terminals, figure1_right().terminals);
  EXPECT_EQ(inst.graph.edge_count(), figure1_right().graph.edge_count());
}

TEST(ParseInstance, VirtualEdgesAndInfinity) {
  const Instance inst = parse_instance(
      "VEST 1\nSECTION Graph\nNodes 3\nE 1 2 4\nE 2 3 1\nEND\nSECTION VirtualEdges\nVE 1 3 inf 2 5 2\nEND\nEOF\n");
  ASSERT_EQ(inst.virtual_edges.size(), 1u);
  EXPECT_TRUE(inst.virtual_edges[0].weight_u.is_infinite());
  EXPECT_EQ(inst.virtual_edges[0].weight_connect, Weight(5));
  EXPECT_TRUE(inst.terminals.empty());
}

TEST(ParseInstance, OptionalEndLines) {
  const Instance inst = parse_instance("VEST 1\nSECTION Graph\nNodes 2\nE 1 2 3\nSECTION Terminals\nT 2\nEOF\n");
  EXPECT_EQ(inst.terminals, std::vector<VertexId>{1});
}

TEST(ParseInstance, Errors) {
  EXPECT_EQ(parse_error("VEST 2\nEOF\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error("HELLO\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error(""), ErrorCode::kParseError);
  EXPECT_EQ(parse_error("VEST 1\nSECTION Graph\nNodes 2\nE 1 3 1\nEND\nEOF\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error("VEST 1\nSECTION Graph\nNodes 2\nE 1 1 1\nEND\nEOF\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error("VEST 1\nSECTION Graph\nNodes 2\nEdges 2\nE 1 2 1\nEND\nEOF\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error("VEST 1\nSECTION Graph\nNodes 2\nE 1 2 -1\nEND\nEOF\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error("VEST 1\nSECTION Graph\nNodes 2\nE 1 2 inf\nEND\nEOF\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error("VEST 1\nSECTION Graph\nNodes 2\nEND\nSECTION Terminals\nT 1\nT 1\nEND\nEOF\n"),
            ErrorCode::kParseError);
  EXPECT_EQ(parse_error("VEST 1\nSECTION Graph\nNodes 2\nEND\nSECTION VirtualEdges\nVE 1 2 1 1 1 2\nEND\nEOF\n"),
            ErrorCode::kParseError);
  EXPECT_EQ(parse_error("VEST 1\nSECTION Graph\nNodes 2\nEND\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error("VEST 1\nSECTION Terminals\nT 1\nEND\nEOF\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error("VEST 1\nSECTION Graph\nNodes 2\nEND\nEOF\n", 19), ErrorCode::kInvalidArgument);
}

TEST(ParseWeight, Scales) {
  EXPECT_EQ(parse_weight("2.5", 1), Weight(25));
  EXPECT_EQ(parse_weight("2.50", 1), Weight(25));
  EXPECT_EQ(parse_weight("3", 2), Weight(300));
  EXPECT_EQ(parse_weight("0.125", 3), Weight(125));
  EXPECT_THROW(parse_weight("0.125", 2), Error);
  EXPECT_THROW(parse_weight("1.", 2), Error);
  EXPECT_THROW(parse_weight(".5", 2), Error);
  EXPECT_THROW(parse_weight("99999999999999999999", 0), Error);
  EXPECT_TRUE(parse_weight("inf", 0, true).is_infinite());
  EXPECT_THROW(parse_weight("inf", 0, false), Error);
}

TEST(FormatWeight, Scales) {
  EXPECT_EQ(format_weight(Weight(25), 1), "2.5");
  EXPECT_EQ(format_weight(Weight(300), 2), "3");
  EXPECT_EQ(format_weight(Weight(5), 3), "0.005");
  EXPECT_EQ(format_weight(Weight::infinity(), 3), "inf");
}

TEST(RenderInstance, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = random_connected(4 + seed % 6, 1 + seed % 4, seed % 3, seed);
    const std::string text = render_instance(inst);
    expect_same(parse_instance(text), inst);
    EXPECT_EQ(render_instance(parse_instance(text)), text);
  }
}

TEST(RenderInstance, RoundTripWithScale) {
  const Instance inst = normalize(
      Instance::from_parts(make_graph(3, {{0, 1, 25}, {1, 2, 1}}), {0}, {make_virtual(0, 2, 5, 7, 3, 2)}));
  const std::string text = render_instance(inst, 1);
  EXPECT_NE(text.find("E 1 2 2.5"), std::string::npos);
  EXPECT_NE(text.find("inf"), std::string::npos);
  expect_same(parse_instance(text, 1), inst);
}

TEST(ReadInstance, MissingFile) {
  EXPECT_THROW(read_instance("/nonexistent/instance.vest"), Error);
}
