#include "k4steiner/solver.hpp"

#include <algorithm>

#include "k4steiner/certificate.hpp"
#include "k4steiner/cycle.hpp"
#include "k4steiner/error.hpp"
#include "k4steiner/interval_dp.hpp"
#include "k4steiner/oracle.hpp"

namespace k4st {

namespace {

void add_terminal(Instance& inst, VertexId t) {
  auto it = std::lower_bound(inst.terminals.begin(), inst.terminals.end(), t);
  if (it == inst.terminals.end() || *it != t) inst.terminals.insert(it, t);
}

std::vector<VertexId> with(std::vector<VertexId> side, std::initializer_list<VertexId> extra) {
  side.insert(side.end(), extra.begin(), extra.end());
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  return side;
}

// True if some root other than the cut vertices lives on `side`.
bool side_has_root(const Instance& inst, std::span<const VertexId> side) {
  std::vector<char> in(inst.vertex_count(), 0);
  for (VertexId x : side) in[x] = 1;
  for (VertexId t : inst.terminals) {
    if (in[t]) return true;
  }
  for (const VirtualEdge& ve : inst.virtual_edges) {
    if (in[ve.u] || in[ve.v]) return true;
  }
  return false;
}

// Component of the skeleton holding every root, or nullopt if the roots are
// spread over several components. Empty when there are no roots.
std::optional<std::vector<VertexId>> root_component(const Instance& inst) {
  const auto comps = connected_components(skeleton(inst));
  const auto incident = root_incident_mask(inst);
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const bool has = std::any_of(comps[i].begin(), comps[i].end(), [&](VertexId x) { return incident[x] != 0; });
    if (!has) continue;
    if (found) return std::nullopt;
    found = i;
  }
  if (!found) return std::vector<VertexId>{};
  return comps[*found];
}

Realized solve_cut_vertex(const Instance& inst, const VertexCut& cut, SolveStats& stats) {
  const VertexId v = cut.vertices.front();
  const bool a_roots = side_has_root(inst, cut.side_a);
  const bool b_roots = side_has_root(inst, cut.side_b);
  Realized total{Weight::zero(), {}};
  for (int side = 0; side < 2; ++side) {
    const auto& part = side == 0 ? cut.side_a : cut.side_b;
    if (!(side == 0 ? a_roots : b_roots)) continue;
    Induced sub = induce(inst, with(part, {v}));
    if (a_roots && b_roots) add_terminal(sub.instance, sub.local[v]);
    const Realized r = solve_recursive(sub.instance, stats);
    if (r.cost.is_infinite()) return Realized{};
    total.cost += r.cost;
    total.parts.append(r.parts);
  }
  return total;
}

Realized solve_two_cut(const Instance& inst, const VertexCut& cut, SolveStats& stats) {
  const VertexId u = cut.vertices[0];
  const VertexId v = cut.vertices[1];
  const Induced a = induce(inst, with(cut.side_a, {u, v}));
  const SideSolver recurse = [&stats](const Instance& sub) { return solve_recursive(sub, stats); };
  VirtualEdge ve = summarize_side(a.instance, a.local[u], a.local[v], recurse);

  Induced b = induce(inst, with(cut.side_b, {u, v}));
  ve.u = b.local[u];
  ve.v = b.local[v];
  b.instance.virtual_edges.push_back(std::move(ve));
  return solve_recursive(b.instance, stats);
}

Realized fallback(const Instance& inst, const Error& err, SolveStats& stats) {
  ++stats.fallbacks;
  stats.diagnostics.push_back(std::string("cycle/DP step failed (") + err.what() +
                              "); falling back to exhaustive search");
  const StarGraph star = build_star_graph(inst);
  try {
    if (auto cert = has_rooted_k4(star.graph, star.star_roots)) throw MinorFound(*cert);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInstanceTooLarge) throw;
  }
  return solve_by_oracle(inst);
}

Realized solve_three_connected(const Instance& inst, SolveStats& stats) {
  ++stats.cycle_nodes;
  try {
    const RootCycle rc = find_root_cycle(inst);
    DpStats dp_stats;
    const Solution sol = solve_on_cycle(inst, rc, &dp_stats);
    stats.dp_entries += dp_stats.entries;
    return Realized{sol.cost, realize(inst, sol)};
  } catch (const MinorFound&) {
    throw;
  } catch (const Error& err) {
    switch (err.code()) {
      case ErrorCode::kInfeasible:
        return Realized{};
      case ErrorCode::kPatternViolation:
      case ErrorCode::kNotThreeConnected:
      case ErrorCode::kInconsistentTrace:
      case ErrorCode::kInvalidArgument:
        return fallback(inst, err, stats);
      default:
        throw;
    }
  }
}

}  // namespace

Realized solve_recursive(const Instance& input, SolveStats& stats) {
  ++stats.recursion_nodes;
  Instance inst = preprocess(input);

  const auto comp = root_component(inst);
  if (!comp) return Realized{};
  if (comp->empty()) return Realized{Weight::zero(), {}};
  if (comp->size() < inst.vertex_count()) inst = induce(inst, *comp).instance;

  if (inst.root_count() <= kRootThreshold) {
    ++stats.base_cases;
    return solve_by_oracle(inst);
  }
  const Multigraph skel = skeleton(inst);
  if (auto cut = find_cut_vertex(skel)) {
    ++stats.cut_vertex_splits;
    return solve_cut_vertex(inst, *cut, stats);
  }
  if (auto cut = find_two_cut(skel)) {
    ++stats.two_cut_splits;
    return solve_two_cut(inst, *cut, stats);
  }
  return solve_three_connected(inst, stats);
}

SolveResult solve(const Instance& inst) {
  SolveResult out;
  const Realized r = solve_recursive(inst, out.stats);
  if (r.cost.is_infinite()) throw Error(ErrorCode::kInfeasible, "instance has no feasible solution");
  Solution sol = canonicalize(inst, r.parts.vertices, r.parts.edges, r.parts.connected);
  if (sol.cost > r.cost) {
    throw Error(ErrorCode::kInconsistentTrace,
                "reconstructed tree costs " + sol.cost.to_string() + ", expected " + r.cost.to_string());
  }
  out.solution = std::move(sol);
  return out;
}

}  // namespace k4st
