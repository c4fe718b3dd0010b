#include "k4steiner/reduce.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "k4steiner/error.hpp"
#include "k4steiner/oracle.hpp"

namespace k4st {

namespace {

using Pair = std::pair<VertexId, VertexId>;

Pair key(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

// Copy of `inst` whose real edges are those with keep[e] set.
Instance with_edges(const Instance& inst, const std::vector<char>& keep) {
  Instance out;
  out.graph = Multigraph(inst.vertex_count());
  out.terminals = inst.terminals;
  out.virtual_edges = inst.virtual_edges;
  out.origin_vertex = inst.origin_vertex;
  for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
    if (!keep[e]) continue;
    const Edge& edge = inst.graph.edge(e);
    out.add_edge(edge.u, edge.v, edge.weight, inst.edge_origin[e]);
  }
  return out;
}

VirtualEdge oriented_like(const VirtualEdge& e, VertexId u) {
  if (e.u == u) return e;
  VirtualEdge flipped = e;
  std::swap(flipped.u, flipped.v);
  std::swap(flipped.weight_u, flipped.weight_v);
  std::swap(flipped.expand[0], flipped.expand[1]);
  return flipped;
}

Realization joined(const Realization& a, const Realization& b) {
  Realization out = a;
  out.append(b);
  return out;
}

std::vector<VertexId> complement(std::size_t n, const std::vector<VertexId>& removed) {
  std::vector<char> gone(n, 0);
  for (VertexId v : removed) gone[v] = 1;
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < n; ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return keep;
}

// Neighbourhood of a vertex set in the skeleton.
std::vector<VertexId> neighbourhood(const Multigraph& skel, const std::vector<VertexId>& part) {
  std::vector<char> inside(skel.vertex_count(), 0);
  for (VertexId v : part) inside[v] = 1;
  std::vector<VertexId> out;
  for (VertexId v : part) {
    for (EdgeId e : skel.incident(v)) {
      const VertexId w = skel.edge(e).other(v);
      if (!inside[w]) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Roots touching `part`: terminals inside it and virtual edges with an
// endpoint inside it.
std::size_t roots_touching(const Instance& inst, const std::vector<VertexId>& part) {
  std::vector<char> inside(inst.vertex_count(), 0);
  for (VertexId v : part) inside[v] = 1;
  std::size_t count = 0;
  for (VertexId t : inst.terminals) count += inside[t];
  for (const auto& ve : inst.virtual_edges) count += (inside[ve.u] || inside[ve.v]) ? 1 : 0;
  return count;
}

struct TwoCutSide {
  VertexId u;
  VertexId v;
  std::vector<VertexId> side;
};

// First (u,v) in lexicographic order with a component A of G - {u,v} such
// that N(A) = {u,v} and pred(A) holds.
template <typename Pred>
std::optional<TwoCutSide> find_hanging(const Instance& inst, Pred pred) {
  const Multigraph skel = skeleton(inst);
  const std::size_t n = skel.vertex_count();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const VertexId removed[] = {u, v};
      auto parts = components_without(skel, removed);
      if (parts.size() < 2) continue;
      for (auto& part : parts) {
        const auto nbrs = neighbourhood(skel, part);
        if (nbrs.size() == 2 && nbrs[0] == u && nbrs[1] == v && pred(part)) {
          return TwoCutSide{u, v, std::move(part)};
        }
      }
    }
  }
  return std::nullopt;
}

Instance without_pair(const Instance& inst, VertexId u, VertexId v) {
  std::vector<char> keep(inst.graph.edge_count(), 1);
  for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) keep[e] = !inst.graph.edge(e).joins(u, v);
  Instance out = with_edges(inst, keep);
  std::erase_if(out.virtual_edges, [&](const VirtualEdge& ve) { return ve.joins(u, v); });
  std::erase_if(out.terminals, [&](VertexId t) { return t == u || t == v; });
  return out;
}

void add_terminal(Instance& inst, VertexId t) {
  auto it = std::lower_bound(inst.terminals.begin(), inst.terminals.end(), t);
  if (it == inst.terminals.end() || *it != t) inst.terminals.insert(it, t);
}

}  // namespace

Instance prune_parallel_real(const Instance& inst) {
  std::map<Pair, EdgeId> best;
  for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
    const Edge& edge = inst.graph.edge(e);
    auto [it, fresh] = best.emplace(key(edge.u, edge.v), e);
    if (!fresh && edge.weight < inst.graph.edge(it->second).weight) it->second = e;
  }
  std::vector<char> keep(inst.graph.edge_count(), 0);
  for (const auto& [pair, e] : best) keep[e] = 1;
  return with_edges(inst, keep);
}

VirtualEdge merge_parallel_virtual(const VirtualEdge& e1, const VirtualEdge& other) {
  if (!e1.joins(other.u, other.v)) throw Error(ErrorCode::kInvalidArgument, "virtual edges are not parallel");
  const VirtualEdge e2 = oriented_like(other, e1.u);
  VirtualEdge out;
  out.u = e1.u;
  out.v = e1.v;
  out.weight_u = e1.weight_u + e2.weight_u;
  out.weight_v = e1.weight_v + e2.weight_v;
  const Weight c12 = e1.weight_connect + e2.weight_disconnect;
  const Weight c21 = e1.weight_disconnect + e2.weight_connect;
  out.weight_connect = min(c12, c21);
  out.weight_disconnect = e1.weight_disconnect + e2.weight_disconnect;
  out.expand[0] = joined(e1.expand[0], e2.expand[0]);
  out.expand[1] = joined(e1.expand[1], e2.expand[1]);
  out.expand[2] = c12 <= c21 ? joined(e1.expand[2], e2.expand[3]) : joined(e1.expand[3], e2.expand[2]);
  out.expand[3] = joined(e1.expand[3], e2.expand[3]);
  return out;
}

VirtualEdge fold_real_into_virtual(const Edge& e, std::span<const EdgeId> origin,
                                   const VirtualEdge& e_star) {
  if (!e_star.joins(e.u, e.v)) throw Error(ErrorCode::kInvalidArgument, "edge not parallel to virtual edge");
  VirtualEdge out = e_star;
  const Weight via_edge = e_star.weight_disconnect + e.weight;
  if (via_edge < e_star.weight_connect) {
    out.weight_connect = via_edge;
    out.expand[2] = e_star.expand[3];
    out.expand[2].edges.insert(out.expand[2].edges.end(), origin.begin(), origin.end());
  }
  return out;
}

Instance prune_edges(const Instance& inst) {
  Instance out = prune_parallel_real(inst);
  std::map<Pair, std::size_t> slot;
  std::vector<VirtualEdge> merged;
  for (const auto& ve : out.virtual_edges) {
    auto [it, fresh] = slot.emplace(key(ve.u, ve.v), merged.size());
    if (fresh) {
      merged.push_back(ve);
    } else {
      merged[it->second] = merge_parallel_virtual(merged[it->second], ve);
    }
  }
  std::vector<char> keep(out.graph.edge_count(), 1);
  for (EdgeId e = 0; e < out.graph.edge_count(); ++e) {
    const Edge& edge = out.graph.edge(e);
    auto it = slot.find(key(edge.u, edge.v));
    if (it == slot.end()) continue;
    merged[it->second] = fold_real_into_virtual(edge, out.edge_origin[e], merged[it->second]);
    keep[e] = 0;
  }
  out.virtual_edges = std::move(merged);
  return with_edges(out, keep);
}

Instance prune_rootless_1cut(const Instance& inst) {
  Instance cur = inst;
  for (bool changed = true; changed;) {
    changed = false;
    const Multigraph skel = skeleton(cur);
    const auto touched = root_incident_mask(cur);
    auto rootless = [&](const std::vector<VertexId>& part) {
      return std::none_of(part.begin(), part.end(), [&](VertexId v) { return touched[v] != 0; });
    };
    std::vector<VertexId> doomed;
    for (const auto& part : connected_components(skel)) {
      if (rootless(part)) doomed.insert(doomed.end(), part.begin(), part.end());
    }
    for (VertexId v = 0; v < skel.vertex_count() && doomed.empty(); ++v) {
      const VertexId removed[] = {v};
      const auto parts = components_without(skel, removed);
      if (parts.size() < 2) continue;
      for (const auto& part : parts) {
        if (rootless(part) && neighbourhood(skel, part) == std::vector<VertexId>{v}) {
          doomed.insert(doomed.end(), part.begin(), part.end());
        }
      }
    }
    if (!doomed.empty()) {
      cur = induce(cur, complement(cur.vertex_count(), doomed)).instance;
      changed = true;
    }
  }
  return cur;
}

std::optional<Instance> prune_rootless_2cut(const Instance& inst) {
  auto found = find_hanging(inst, [&](const std::vector<VertexId>& part) {
    return roots_touching(inst, part) == 0;
  });
  if (!found) return std::nullopt;
  const auto& [u, v, part] = *found;
  std::vector<char> allowed(inst.vertex_count(), 0);
  for (VertexId x : part) allowed[x] = 1;
  allowed[u] = allowed[v] = 1;
  // Paths through A only; a direct uv edge is not part of A.
  Multigraph local(inst.vertex_count());
  std::vector<EdgeId> back;
  for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
    const Edge& edge = inst.graph.edge(e);
    if (!allowed[edge.u] || !allowed[edge.v] || edge.joins(u, v)) continue;
    local.add_edge(edge.u, edge.v, edge.weight);
    back.push_back(e);
  }
  const auto tree = shortest_paths(local, u, allowed);
  std::vector<EdgeId> origin;
  for (EdgeId e : path_edges(local, tree, v)) {
    const auto& o = inst.edge_origin[back[e]];
    origin.insert(origin.end(), o.begin(), o.end());
  }
  auto rest = induce(inst, complement(inst.vertex_count(), part));
  if (tree.distance[v].is_finite()) {
    rest.instance.add_edge(rest.local[u], rest.local[v], tree.distance[v], std::move(origin));
  }
  return std::move(rest.instance);
}

Realized solve_by_oracle(const Instance& inst) {
  try {
    const Solution sol = solve_vest_by_reduction(inst);
    return Realized{sol.cost, realize(inst, sol)};
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kInfeasible) return Realized{};
    throw;
  }
}

std::array<Instance, 4> side_cases(const Instance& side, VertexId u, VertexId v) {
  const Instance base = without_pair(side, u, v);
  std::array<Instance, 4> cases;
  Instance only_u = base;
  add_terminal(only_u, u);
  cases[0] = forbid_vertex(only_u, v);
  Instance only_v = base;
  add_terminal(only_v, v);
  cases[1] = forbid_vertex(only_v, u);
  cases[2] = base;
  add_terminal(cases[2], u);
  add_terminal(cases[2], v);
  cases[3] = cases[2];
  cases[3].add_edge(u, v, Weight::zero(), {});
  return cases;
}

VirtualEdge summarize_side(const Instance& side, VertexId u, VertexId v, const SideSolver& solve) {
  std::vector<VertexId> inner;
  for (VertexId x = 0; x < side.vertex_count(); ++x) {
    if (x != u && x != v) inner.push_back(x);
  }
  if (roots_touching(side, inner) == 0) throw Error(ErrorCode::kInvalidArgument, "2-cut side without roots");
  const auto cases = side_cases(side, u, v);
  VirtualEdge ve;
  ve.u = u;
  ve.v = v;
  for (VeStatus s : kAllStatuses) {
    Realized r = solve(cases[static_cast<std::size_t>(s)]);
    ve.weight(s) = r.cost;
    ve.expand[static_cast<std::size_t>(s)] = std::move(r.parts);
  }
  return ve;
}

std::optional<Instance> fold_single_root_2cut(const Instance& inst) {
  auto found = find_hanging(inst, [&](const std::vector<VertexId>& part) {
    return roots_touching(inst, part) == 1;
  });
  if (!found) return std::nullopt;
  auto& [u, v, part] = *found;
  part.push_back(u);
  part.push_back(v);
  const auto side = induce(inst, part);
  VirtualEdge ve = summarize_side(side.instance, side.local[u], side.local[v], solve_by_oracle);
  part.resize(part.size() - 2);
  auto rest = induce(inst, complement(inst.vertex_count(), part));
  ve.u = rest.local[u];
  ve.v = rest.local[v];
  rest.instance.virtual_edges.push_back(std::move(ve));
  return std::move(rest.instance);
}

Instance preprocess(const Instance& inst, PreprocessStats* stats) {
  PreprocessStats local;
  PreprocessStats& st = stats ? *stats : local;
  Instance cur = inst;
  // Every change removes a vertex, so n + 1 rounds always suffice.
  const std::size_t round_cap = inst.vertex_count() + 2;
  while (true) {
    if (++st.rounds > round_cap) throw Error(ErrorCode::kInconsistentTrace, "preprocess failed to converge");
    cur = normalize(prune_edges(cur));
    Instance pruned = prune_rootless_1cut(cur);
    if (pruned.vertex_count() != cur.vertex_count()) {
      ++st.rootless_1cut;
      cur = std::move(pruned);
      continue;
    }
    if (auto next = prune_rootless_2cut(cur)) {
      ++st.rootless_2cut;
      cur = std::move(*next);
      continue;
    }
    if (auto next = fold_single_root_2cut(cur)) {
      ++st.folds;
      cur = std::move(*next);
      continue;
    }
    return cur;
  }
}

}  // namespace k4st
