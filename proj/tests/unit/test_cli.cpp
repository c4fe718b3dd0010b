#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "k4st_cli/cli.hpp"
#include "k4steiner/instance_io.hpp"
#include "k4steiner/oracle.hpp"

using namespace k4st;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(K4ST_FIXTURE_DIR) + "/" + name + ".vest"; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

}  // namespace

TEST(CliSolve, FixTri) {
  const Outcome r = run({"solve", fixture("fix_tri")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0], "cost 2");
  EXPECT_EQ(out[1], "edges 2");
  EXPECT_EQ(out[2], "e 1 2");
  EXPECT_EQ(out[3], "e 1 3");
}

TEST(CliSolve, GridCorners) {
  const Outcome r = run({"solve", "--verify", fixture("grid3x3_corners")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(lines(r.out).front(), "cost 6");
  EXPECT_NE(r.out.find("verified yes"), std::string::npos);
}

TEST(CliSolve, CheckMinorRefusesK4) {
  const Outcome r = run({"solve", "--check-minor", fixture("k4_all_terminals")});
  EXPECT_EQ(r.code, cli::kMinorFoundExit);
  EXPECT_EQ(lines(r.out).front(), "rooted K4-minor found");
  EXPECT_NE(r.out.find("cross 3-4"), std::string::npos);
}

TEST(CliSolve, CheckMinorAcceptsMinorFree) {
  EXPECT_EQ(run({"solve", "--check-minor", fixture("fix_tri")}).code, cli::kOk);
}

TEST(CliSolve, MalformedHeader) {
  const std::string path = testing::TempDir() + "k4st_bad_header.vest";
  {
    std::ofstream f(path);
    f << "STP 1\nEOF\n";
  }
  const Outcome r = run({"solve", path});
  EXPECT_EQ(r.code, cli::kParseFailure);
  EXPECT_NE(r.err.find("header"), std::string::npos);
}

TEST(CliSolve, MissingFileAndBadFlags) {
  EXPECT_EQ(run({"solve", "/nonexistent.vest"}).code, cli::kParseFailure);
  EXPECT_EQ(run({"solve", fixture("fix_tri"), "--no-such-flag"}).code, cli::kParseFailure);
  EXPECT_EQ(run({"solve", fixture("fix_tri"), "--scale", "40"}).code, cli::kParseFailure);
}

TEST(CliSolve, VirtualStatusesReported) {
  const Outcome r = run({"solve", "--verify", fixture("virtual_square")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("virtual 1 "), std::string::npos);
}

TEST(CliSolve, ScaleEchoed) {
  const Outcome r = run({"solve", "--scale", "1", fixture("fix_tri")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(lines(r.out)[0], "cost 2");
  EXPECT_EQ(lines(r.out)[1], "scale 10");
}

TEST(CliSolve, JsonSchema) {
  const Outcome r = run({"solve", "--json", "--verify", fixture("grid3x3_corners")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  for (const char* key : {"\"cost\"", "\"scale\"", "\"edges\"", "\"virtual_statuses\"", "\"stats\"",
                          "\"recursion_nodes\"", "\"dp_entries\"", "\"verified\": true"}) {
    EXPECT_NE(r.out.find(key), std::string::npos) << key;
  }
}

TEST(CliSolve, Deterministic) {
  for (const char* name : {"fix_tri", "grid3x3_corners", "two_triangles", "virtual_square"}) {
    const Outcome a = run({"solve", "--json", fixture(name)});
    const Outcome b = run({"solve", "--json", fixture(name)});
    EXPECT_EQ(a.out, b.out) << name;
  }
}

TEST(CliGenerate, GridOneFace) {
  const Outcome r = run({"generate", "grid-one-face", "--rows", "3", "--cols", "3", "--terminals", "4", "--seed", "1"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const Instance inst = parse_instance(r.out);
  EXPECT_EQ(inst.vertex_count(), 9u);
  EXPECT_EQ(inst.terminals, (std::vector<VertexId>{0, 2, 6, 8}));
}

TEST(CliGenerate, Figure1Right) {
  const Outcome r = run({"generate", "figure1-right"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const Instance inst = parse_instance(r.out);
  EXPECT_EQ(inst.vertex_count(), 5u);
  EXPECT_EQ(inst.graph.edge_count(), 10u);
  EXPECT_EQ(inst.terminals.size(), 3u);
}

TEST(CliGenerate, RandomMinorFreeIsDeterministic) {
  const std::vector<std::string> args{"generate", "random-minor-free", "--n", "8", "--k", "4", "--seed", "7"};
  const Outcome a = run(args);
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  EXPECT_EQ(a.out, run(args).out);
  EXPECT_TRUE(instance_is_minor_free(parse_instance(a.out)));
}

TEST(CliGenerate, InvalidParams) {
  EXPECT_EQ(run({"generate", "no-such-family"}).code, cli::kParseFailure);
  EXPECT_EQ(run({"generate", "grid-one-face", "--terminals", "20"}).code, cli::kParseFailure);
  EXPECT_EQ(run({"generate", "random-minor-free", "--n", "3", "--k", "5"}).code, cli::kParseFailure);
}

TEST(CliGenerate, RoundTripsThroughSolve) {
  const Outcome g = run({"generate", "stacked-wheel", "--n", "6", "--inner", "2", "--k", "3", "--virtual", "1"});
  ASSERT_EQ(g.code, cli::kOk) << g.err;
  EXPECT_EQ(render_instance(parse_instance(g.out)), g.out);
}

TEST(CliBench, TwoRows) {
  const Outcome r = run({"bench", "--sizes", "16,36"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0], "n,family,ms,cost");
  EXPECT_TRUE(out[1].starts_with("16,grid-one-face,"));
  EXPECT_TRUE(out[2].starts_with("36,grid-one-face,"));
}

TEST(CliBench, MedianOfRepetitions) {
  const Outcome r = run({"bench", "--sizes", "16", "--reps", "3"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 2u);
  // grid 4x4 with all 12 boundary vertices as terminals: the boundary path of 11 unit edges
  EXPECT_TRUE(out[1].ends_with(",11"));
}

TEST(CliBench, EmptySizeListIsHeaderOnly) {
  const Outcome r = run({"bench"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "n,family,ms,cost\n");
}

TEST(CliBench, RejectsNonSquare) { EXPECT_EQ(run({"bench", "--sizes", "15"}).code, cli::kParseFailure); }
