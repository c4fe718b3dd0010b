#include "k4st_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "k4steiner/certificate.hpp"
#include "k4steiner/error.hpp"
#include "k4steiner/generators.hpp"
#include "k4steiner/instance_io.hpp"
#include "k4steiner/oracle.hpp"
#include "k4steiner/solver.hpp"

namespace k4st::cli {

namespace {

struct SolveOptions {
  std::string path;
  bool verify = false;
  bool check_minor = false;
  bool json = false;
  int scale = 0;
};

struct GenerateOptions {
  std::string family;
  std::size_t rows = 3;
  std::size_t cols = 3;
  std::size_t terminals = 4;
  std::size_t n = 8;
  std::size_t k = 4;
  std::size_t virtual_count = 0;
  std::size_t inner = 0;
  std::uint64_t seed = 1;
  std::int64_t wmin = -1;
  std::int64_t wmax = -1;
};

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::size_t repetitions = 1;
};

std::int64_t pow10(int scale) {
  std::int64_t p = 1;
  for (int i = 0; i < scale; ++i) p *= 10;
  return p;
}

std::string vertex_name(const Instance& inst, const StarGraph& star, VertexId x) {
  if (x < inst.vertex_count()) return std::to_string(x + 1);
  return "ve" + std::to_string(star.virtual_of[x] + 1);
}

void print_certificate(std::ostream& out, const Instance& inst, const K4Certificate& cert) {
  const StarGraph star = build_star_graph(inst);
  out << "rooted K4-minor found\n";
  for (int i = 0; i < 4; ++i) {
    out << "branch " << i + 1 << " root " << vertex_name(inst, star, cert.root_witnesses[i]) << ":";
    for (VertexId x : cert.branch_sets[i]) out << ' ' << vertex_name(inst, star, x);
    out << '\n';
  }
  static constexpr std::array<std::pair<int, int>, 6> kPairs = {{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
  for (std::size_t p = 0; p < 6; ++p) {
    out << "cross " << kPairs[p].first << '-' << kPairs[p].second << ": "
        << vertex_name(inst, star, cert.cross_edges[p].first) << ' '
        << vertex_name(inst, star, cert.cross_edges[p].second) << '\n';
  }
}

// Certificate for the user's instance, if the exhaustive search is in range.
std::optional<K4Certificate> user_certificate(const Instance& inst, std::ostream& err) {
  const StarGraph star = build_star_graph(inst);
  try {
    return has_rooted_k4(star.graph, star.star_roots);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInstanceTooLarge) throw;
    err << "note: instance too large for the exhaustive rooted K4 search\n";
    return std::nullopt;
  }
}

Instance load(const std::string& path, int scale) {
  if (path == "-") return parse_instance(std::cin, scale);
  return read_instance(path, scale);
}

std::vector<std::pair<VertexId, VertexId>> sorted_edges(const Instance& inst, const Solution& sol) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (EdgeId e : sol.edges) {
    const Edge& edge = inst.graph.edge(e);
    edges.emplace_back(std::min(edge.u, edge.v) + 1, std::max(edge.u, edge.v) + 1);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  Instance inst;
  try {
    inst = load(opt.path, opt.scale);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kParseFailure;
  }

  if (opt.check_minor) {
    if (auto cert = user_certificate(inst, err)) {
      print_certificate(out, inst, *cert);
      return kMinorFoundExit;
    }
  }

  SolveResult res;
  try {
    res = solve(inst);
  } catch (const MinorFound&) {
    if (auto cert = user_certificate(inst, err)) {
      print_certificate(out, inst, *cert);
    } else {
      out << "rooted K4-minor found in a derived sub-instance\n";
    }
    return kMinorFoundExit;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInfeasible) {
      out << "infeasible\n";
      return kInfeasibleExit;
    }
    err << e.what() << '\n';
    return kFailure;
  }
  for (const auto& d : res.stats.diagnostics) err << "note: " << d << '\n';

  const Solution& sol = res.solution;
  bool verified = false;
  int status = kOk;
  if (opt.verify) {
    verified = true;
    if (auto bad = validate_solution(inst, sol)) {
      err << "verify: witness invalid: " << *bad << '\n';
      verified = false;
      status = kOracleMismatch;
    }
    if (inst.virtual_edges.size() <= kReductionVirtualCap && inst.terminals.size() <= kDreyfusWagnerTerminalCap) {
      Weight want = Weight::infinity();
      try {
        want = solve_vest_by_reduction(inst).cost;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kInfeasible) {
          err << "verify: oracle failed: " << e.what() << '\n';
          return kFailure;
        }
      }
      if (want != sol.cost) {
        err << "verify: oracle cost " << format_weight(want, opt.scale) << " differs from "
            << format_weight(sol.cost, opt.scale) << '\n';
        verified = false;
        status = kOracleMismatch;
      }
    } else {
      err << "note: oracle comparison skipped (instance above oracle caps)\n";
    }
  }

  const auto edges = sorted_edges(inst, sol);
  if (opt.json) {
    nlohmann::ordered_json j;
    j["cost"] = sol.cost.value();
    j["scale"] = pow10(opt.scale);
    j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : edges) j["edges"].push_back({u, v});
    j["virtual_statuses"] = nlohmann::json::array();
    for (VeStatus s : sol.statuses) j["virtual_statuses"].push_back(std::string(to_string(s)));
    j["stats"] = {{"n", inst.vertex_count()},
                  {"m", inst.graph.edge_count()},
                  {"k", inst.terminals.size()},
                  {"recursion_nodes", res.stats.recursion_nodes},
                  {"dp_entries", res.stats.dp_entries}};
    j["verified"] = verified;
    out << j.dump(2) << '\n';
  } else {
    out << "cost " << format_weight(sol.cost, opt.scale) << '\n';
    if (opt.scale != 0) out << "scale " << pow10(opt.scale) << '\n';
    out << "edges " << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << "e " << u << ' ' << v << '\n';
    for (std::size_t i = 0; i < sol.statuses.size(); ++i) {
      out << "virtual " << i + 1 << ' ' << to_string(sol.statuses[i]) << '\n';
    }
    if (opt.verify) out << "verified " << (verified ? "yes" : "no") << '\n';
  }
  return status;
}

int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
  auto range = [&](WeightRange fallback) {
    WeightRange r = fallback;
    if (opt.wmin >= 0) r.lo = opt.wmin;
    if (opt.wmax >= 0) r.hi = opt.wmax;
    return r;
  };
  try {
    Instance inst;
    if (opt.family == "grid-one-face") {
      inst = grid_one_face(opt.rows, opt.cols, opt.terminals, opt.seed, range({1, 1}));
    } else if (opt.family == "figure1-right") {
      inst = figure1_right();
    } else if (opt.family == "k4-all-terminals") {
      inst = k4_all_terminals();
    } else if (opt.family == "random-minor-free") {
      inst = random_minor_free(opt.n, opt.k, opt.virtual_count, opt.seed, range({0, 8}));
    } else if (opt.family == "stacked-wheel") {
      inst = stacked_wheel(opt.n, opt.inner, opt.k, opt.virtual_count, opt.seed, range({1, 9}));
    } else {
      err << "unknown family '" << opt.family << "'\n";
      return kParseFailure;
    }
    out << render_instance(inst);
    return kOk;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kParseFailure;
  }
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<std::size_t> sides;
  for (std::size_t n : opt.sizes) {
    const auto r = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(n))));
    if (r < 2 || r * r != n) {
      err << "bench sizes must be squares of at least 4, got " << n << '\n';
      return kParseFailure;
    }
    sides.push_back(r);
  }
  out << "n,family,ms,cost\n";
  for (std::size_t r : sides) {
    const Instance inst = grid_one_face(r, r, 4 * r - 4, 1);
    std::vector<double> times;
    Weight cost;
    for (std::size_t rep = 0; rep < std::max<std::size_t>(opt.repetitions, 1); ++rep) {
      const auto start = std::chrono::steady_clock::now();
      cost = solve(inst).solution.cost;
      times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    }
    std::sort(times.begin(), times.end());
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << times[times.size() / 2];
    out << r * r << ",grid-one-face," << ms.str() << ',' << cost.to_string() << '\n';
  }
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Steiner trees on graphs without terminal-rooted K4-minors", "k4st"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("path", solve_opt.path, "Instance file, or - for standard input")->required();
  solve_cmd->add_flag("--verify", solve_opt.verify, "Validate the witness and compare with the oracle");
  solve_cmd->add_flag("--check-minor", solve_opt.check_minor, "Refuse instances with a rooted K4-minor");
  solve_cmd->add_flag("--json", solve_opt.json, "Print a JSON report");
  solve_cmd->add_option("--scale", solve_opt.scale, "Weights are multiplied by 10^POW")->check(CLI::Range(0, 18));

  GenerateOptions gen_opt;
  auto* gen_cmd = app.add_subcommand("generate", "Print a generated instance");
  gen_cmd
      ->add_option("family", gen_opt.family,
                   "grid-one-face | figure1-right | k4-all-terminals | random-minor-free | stacked-wheel")
      ->required();
  gen_cmd->add_option("--rows", gen_opt.rows, "Grid rows");
  gen_cmd->add_option("--cols", gen_opt.cols, "Grid columns");
  gen_cmd->add_option("--terminals", gen_opt.terminals, "Grid boundary terminals");
  gen_cmd->add_option("--n", gen_opt.n, "Vertices (random) or rim size (wheel)");
  gen_cmd->add_option("--k", gen_opt.k, "Terminals (random, wheel)");
  gen_cmd->add_option("--virtual", gen_opt.virtual_count, "Virtual edges (random, wheel)");
  gen_cmd->add_option("--inner", gen_opt.inner, "Stacked inner vertices (wheel)");
  gen_cmd->add_option("--seed", gen_opt.seed, "Random seed");
  gen_cmd->add_option("--wmin", gen_opt.wmin, "Smallest weight");
  gen_cmd->add_option("--wmax", gen_opt.wmax, "Largest weight");

  BenchOptions bench_opt;
  auto* bench_cmd = app.add_subcommand("bench", "Time unit grids with boundary terminals; CSV output");
  bench_cmd->add_option("--sizes", bench_opt.sizes, "Vertex counts (squares), comma separated")->delimiter(',');
  bench_cmd->add_option("--reps", bench_opt.repetitions, "Repetitions; the median is reported");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseFailure;
  }
  if (*solve_cmd) return cmd_solve(solve_opt, out, err);
  if (*gen_cmd) return cmd_generate(gen_opt, out, err);
  return cmd_bench(bench_opt, out, err);
}

}  // namespace k4st::cli
