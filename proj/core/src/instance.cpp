#include "k4steiner/instance.hpp"

#include <algorithm>
#include <numeric>

#include "k4steiner/error.hpp"

namespace k4st {

namespace {

void sort_unique(std::vector<VertexId>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

std::string_view to_string(VeStatus s) {
  switch (s) {
    case VeStatus::EndU: return "u";
    case VeStatus::EndV: return "v";
    case VeStatus::Connect: return "c";
    case VeStatus::Disconnect: return "d";
  }
  return "?";
}

void Realization::append(const Realization& other) {
  vertices.insert(vertices.end(), other.vertices.begin(), other.vertices.end());
  edges.insert(edges.end(), other.edges.begin(), other.edges.end());
  connected.insert(connected.end(), other.connected.begin(), other.connected.end());
}

Weight VirtualEdge::weight(VeStatus s) const noexcept {
  switch (s) {
    case VeStatus::EndU: return weight_u;
    case VeStatus::EndV: return weight_v;
    case VeStatus::Connect: return weight_connect;
    case VeStatus::Disconnect: return weight_disconnect;
  }
  return Weight::infinity();
}

Weight& VirtualEdge::weight(VeStatus s) noexcept {
  switch (s) {
    case VeStatus::EndU: return weight_u;
    case VeStatus::EndV: return weight_v;
    case VeStatus::Connect: return weight_connect;
    case VeStatus::Disconnect: break;
  }
  return weight_disconnect;
}

Weight& VirtualEdge::weight_at(VertexId x) {
  if (x != u && x != v) throw Error(ErrorCode::kInvalidArgument, "vertex not on virtual edge");
  return x == u ? weight_u : weight_v;
}

Weight VirtualEdge::weight_at(VertexId x) const {
  if (x != u && x != v) throw Error(ErrorCode::kInvalidArgument, "vertex not on virtual edge");
  return x == u ? weight_u : weight_v;
}

Instance Instance::from_parts(Multigraph graph, std::vector<VertexId> terminals,
                              std::vector<VirtualEdge> virtual_edges) {
  Instance inst;
  const std::size_t n = graph.vertex_count();
  for (VertexId t : terminals) {
    if (t >= n) throw Error(ErrorCode::kInvalidArgument, "terminal out of range");
  }
  sort_unique(terminals);
  inst.origin_vertex.resize(n);
  std::iota(inst.origin_vertex.begin(), inst.origin_vertex.end(), 0);
  inst.edge_origin.resize(graph.edge_count());
  for (EdgeId e = 0; e < graph.edge_count(); ++e) inst.edge_origin[e] = {e};
  for (VirtualIndex i = 0; i < virtual_edges.size(); ++i) {
    auto& ve = virtual_edges[i];
    if (ve.u >= n || ve.v >= n || ve.u == ve.v) {
      throw Error(ErrorCode::kInvalidArgument, "bad virtual edge endpoints");
    }
    ve.expand[0] = Realization{{ve.u}, {}, {}};
    ve.expand[1] = Realization{{ve.v}, {}, {}};
    ve.expand[2] = Realization{{ve.u, ve.v}, {}, {i}};
    ve.expand[3] = Realization{{ve.u, ve.v}, {}, {}};
  }
  inst.graph = std::move(graph);
  inst.terminals = std::move(terminals);
  inst.virtual_edges = std::move(virtual_edges);
  return inst;
}

bool Instance::is_terminal(VertexId v) const {
  return std::binary_search(terminals.begin(), terminals.end(), v);
}

EdgeId Instance::add_edge(VertexId u, VertexId v, Weight w, std::vector<EdgeId> origin) {
  const EdgeId e = graph.add_edge(u, v, w);
  edge_origin.push_back(std::move(origin));
  return e;
}

std::vector<Root> roots_of(const Instance& inst) {
  std::vector<Root> roots;
  for (VertexId t : inst.terminals) roots.push_back({Root::Kind::Terminal, t});
  for (VirtualIndex i = 0; i < inst.virtual_edges.size(); ++i) {
    roots.push_back({Root::Kind::Virtual, i});
  }
  return roots;
}

std::vector<char> root_incident_mask(const Instance& inst) {
  std::vector<char> mask(inst.vertex_count(), 0);
  for (VertexId t : inst.terminals) mask[t] = 1;
  for (const auto& ve : inst.virtual_edges) mask[ve.u] = mask[ve.v] = 1;
  return mask;
}

VeStatus status_of(const VirtualEdge& e, bool in_solution, std::span<const char> covered) {
  const bool cu = covered[e.u] != 0;
  const bool cv = covered[e.v] != 0;
  if (in_solution) return VeStatus::Connect;
  if (cu && cv) return VeStatus::Disconnect;
  if (cu) return VeStatus::EndU;
  if (cv) return VeStatus::EndV;
  throw Error(ErrorCode::kNeitherEndpointCovered, "virtual edge with no covered endpoint");
}

namespace {

std::vector<char> coverage(const Instance& inst, const Solution& sol) {
  std::vector<char> covered(inst.vertex_count(), 0);
  for (VertexId v : sol.vertices) covered.at(v) = 1;
  return covered;
}

}  // namespace

Weight evaluate_cost(const Instance& inst, const Solution& sol) {
  const auto covered = coverage(inst, sol);
  for (VertexId t : inst.terminals) {
    if (!covered[t]) throw Error(ErrorCode::kInfeasible, "uncovered terminal");
  }
  Weight total;
  for (EdgeId e : sol.edges) total += inst.graph.edge(e).weight;
  std::vector<char> chosen(inst.virtual_edges.size(), 0);
  for (VirtualIndex i : sol.virtual_edges) chosen.at(i) = 1;
  for (VirtualIndex i = 0; i < inst.virtual_edges.size(); ++i) {
    const auto& ve = inst.virtual_edges[i];
    VeStatus s{};
    try {
      s = status_of(ve, chosen[i] != 0, covered);
    } catch (const Error&) {
      throw Error(ErrorCode::kInfeasible, "virtual edge with no covered endpoint");
    }
    total += ve.weight(s);
  }
  return total;
}

std::optional<std::string> validate_solution(const Instance& inst, const Solution& sol) {
  const std::size_t n = inst.vertex_count();
  if (!std::is_sorted(sol.vertices.begin(), sol.vertices.end()) ||
      std::adjacent_find(sol.vertices.begin(), sol.vertices.end()) != sol.vertices.end()) {
    return "vertex list not sorted and unique";
  }
  for (VertexId v : sol.vertices) {
    if (v >= n) return "vertex out of range";
  }
  const auto covered = coverage(inst, sol);
  DisjointSets sets(n);
  std::size_t links = 0;
  auto link = [&](VertexId a, VertexId b) -> std::optional<std::string> {
    if (!covered[a] || !covered[b]) return "edge endpoint outside the vertex set";
    if (!sets.unite(a, b)) return "not a tree";
    ++links;
    return std::nullopt;
  };
  for (EdgeId e : sol.edges) {
    if (e >= inst.graph.edge_count()) return "edge out of range";
    const Edge& edge = inst.graph.edge(e);
    if (auto bad = link(edge.u, edge.v)) return bad;
  }
  for (VirtualIndex i : sol.virtual_edges) {
    if (i >= inst.virtual_edges.size()) return "virtual edge out of range";
    if (auto bad = link(inst.virtual_edges[i].u, inst.virtual_edges[i].v)) return bad;
  }
  if (!sol.vertices.empty() && links + 1 != sol.vertices.size()) return "not a tree";
  for (VertexId t : inst.terminals) {
    if (!covered[t]) return "uncovered terminal";
  }
  if (sol.statuses.size() != inst.virtual_edges.size()) return "status list size mismatch";
  std::vector<char> chosen(inst.virtual_edges.size(), 0);
  for (VirtualIndex i : sol.virtual_edges) chosen[i] = 1;
  for (VirtualIndex i = 0; i < inst.virtual_edges.size(); ++i) {
    const auto& ve = inst.virtual_edges[i];
    if (!covered[ve.u] && !covered[ve.v]) return "uncovered virtual edge";
    if (status_of(ve, chosen[i] != 0, covered) != sol.statuses[i]) return "status mismatch";
  }
  if (evaluate_cost(inst, sol) != sol.cost) return "cost mismatch";
  return std::nullopt;
}

Solution canonicalize(const Instance& inst, std::vector<VertexId> vertices,
                      std::vector<EdgeId> edges, std::vector<VirtualIndex> connected) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::sort(connected.begin(), connected.end());
  connected.erase(std::unique(connected.begin(), connected.end()), connected.end());
  for (EdgeId e : edges) {
    vertices.push_back(inst.graph.edge(e).u);
    vertices.push_back(inst.graph.edge(e).v);
  }
  for (VirtualIndex i : connected) {
    vertices.push_back(inst.virtual_edges.at(i).u);
    vertices.push_back(inst.virtual_edges.at(i).v);
  }
  sort_unique(vertices);

  Solution sol;
  DisjointSets sets(inst.vertex_count());
  for (VirtualIndex i : connected) {
    if (sets.unite(inst.virtual_edges[i].u, inst.virtual_edges[i].v)) sol.virtual_edges.push_back(i);
  }
  std::stable_sort(edges.begin(), edges.end(), [&](EdgeId a, EdgeId b) {
    return inst.graph.edge(a).weight < inst.graph.edge(b).weight;
  });
  for (EdgeId e : edges) {
    if (sets.unite(inst.graph.edge(e).u, inst.graph.edge(e).v)) sol.edges.push_back(e);
  }
  std::sort(sol.edges.begin(), sol.edges.end());
  if (!vertices.empty()) {
    const auto head = sets.find(vertices.front());
    for (VertexId v : vertices) {
      if (sets.find(v) != head) throw Error(ErrorCode::kInconsistentTrace, "solution pieces are disconnected");
    }
  }
  sol.vertices = std::move(vertices);
  const auto covered = coverage(inst, sol);
  std::vector<char> chosen(inst.virtual_edges.size(), 0);
  for (VirtualIndex i : sol.virtual_edges) chosen[i] = 1;
  for (VirtualIndex i = 0; i < inst.virtual_edges.size(); ++i) {
    try {
      sol.statuses.push_back(status_of(inst.virtual_edges[i], chosen[i] != 0, covered));
    } catch (const Error&) {
      throw Error(ErrorCode::kInconsistentTrace, "reconstructed solution misses a virtual edge");
    }
  }
  sol.cost = evaluate_cost(inst, sol);
  return sol;
}

Realization realize(const Instance& inst, const Solution& sol) {
  Realization out;
  for (VertexId v : sol.vertices) out.vertices.push_back(inst.origin_vertex.at(v));
  for (EdgeId e : sol.edges) {
    const auto& origin = inst.edge_origin.at(e);
    out.edges.insert(out.edges.end(), origin.begin(), origin.end());
  }
  for (VirtualIndex i = 0; i < inst.virtual_edges.size(); ++i) {
    out.append(inst.virtual_edges[i].expand[static_cast<std::size_t>(sol.statuses.at(i))]);
  }
  return out;
}

Instance normalize(Instance inst) {
  std::vector<VertexId> kept;
  for (VertexId t : inst.terminals) {
    bool touched = false;
    for (auto& ve : inst.virtual_edges) {
      if (ve.u == t || ve.v == t) {
        ve.weight_at(ve.other(t)) = Weight::infinity();
        touched = true;
      }
    }
    if (!touched) kept.push_back(t);
  }
  inst.terminals = std::move(kept);
  return inst;
}

StarGraph build_star_graph(const Instance& inst) {
  StarGraph star;
  star.graph = Multigraph(inst.vertex_count());
  for (const Edge& e : inst.graph.edges()) star.graph.add_edge(e.u, e.v, e.weight);
  star.virtual_of.assign(inst.vertex_count(), static_cast<VirtualIndex>(-1));
  star.star_roots = inst.terminals;
  for (VirtualIndex i = 0; i < inst.virtual_edges.size(); ++i) {
    const auto& ve = inst.virtual_edges[i];
    const VertexId s = star.graph.add_vertex();
    star.graph.add_edge(ve.u, s, Weight::zero());
    star.graph.add_edge(s, ve.v, Weight::zero());
    star.subdivision.push_back(s);
    star.virtual_of.push_back(i);
    star.star_roots.push_back(s);
  }
  sort_unique(star.star_roots);
  return star;
}

Induced induce(const Instance& inst, std::span<const VertexId> keep) {
  Induced out;
  out.local.assign(inst.vertex_count(), kNoVertex);
  out.parent.assign(keep.begin(), keep.end());
  sort_unique(out.parent);
  Instance& sub = out.instance;
  sub.graph = Multigraph(out.parent.size());
  for (VertexId i = 0; i < out.parent.size(); ++i) {
    out.local[out.parent[i]] = i;
    sub.origin_vertex.push_back(inst.origin_vertex.at(out.parent[i]));
  }
  for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
    const Edge& edge = inst.graph.edge(e);
    const VertexId a = out.local[edge.u];
    const VertexId b = out.local[edge.v];
    if (a != kNoVertex && b != kNoVertex) sub.add_edge(a, b, edge.weight, inst.edge_origin[e]);
  }
  for (VertexId t : inst.terminals) {
    if (out.local[t] != kNoVertex) sub.terminals.push_back(out.local[t]);
  }
  sort_unique(sub.terminals);
  for (const auto& ve : inst.virtual_edges) {
    const VertexId a = out.local[ve.u];
    const VertexId b = out.local[ve.v];
    if (a == kNoVertex || b == kNoVertex) continue;
    VirtualEdge copy = ve;
    copy.u = a;
    copy.v = b;
    sub.virtual_edges.push_back(std::move(copy));
  }
  return out;
}

Instance forbid_vertex(const Instance& inst, VertexId x) {
  bool has_virtual = false;
  for (const auto& ve : inst.virtual_edges) has_virtual = has_virtual || ve.u == x || ve.v == x;
  if (!has_virtual) {
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < inst.vertex_count(); ++v) {
      if (v != x) keep.push_back(v);
    }
    auto sub = induce(inst, keep).instance;
    return sub;
  }
  Instance out;
  out.graph = Multigraph(inst.vertex_count());
  out.origin_vertex = inst.origin_vertex;
  out.terminals = inst.terminals;
  for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
    const Edge& edge = inst.graph.edge(e);
    if (edge.u != x && edge.v != x) out.add_edge(edge.u, edge.v, edge.weight, inst.edge_origin[e]);
  }
  out.virtual_edges = inst.virtual_edges;
  for (auto& ve : out.virtual_edges) {
    if (ve.u != x && ve.v != x) continue;
    ve.weight_at(x) = Weight::infinity();
    ve.weight_connect = Weight::infinity();
    ve.weight_disconnect = Weight::infinity();
  }
  return out;
}

Multigraph skeleton(const Instance& inst) {
  const std::size_t n = inst.vertex_count();
  Multigraph g(n);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : inst.graph.edges()) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  for (const auto& ve : inst.virtual_edges) pairs.emplace_back(std::min(ve.u, ve.v), std::max(ve.u, ve.v));
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (auto [a, b] : pairs) g.add_edge(a, b, Weight(1));
  return g;
}

}  // namespace k4st
