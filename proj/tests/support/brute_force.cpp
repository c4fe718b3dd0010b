#include "brute_force.hpp"

#include <algorithm>
#include <numeric>

#include "k4steiner/graph.hpp"

namespace k4st::testing {

namespace {

struct Dsu {
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

Weight brute_force_vest(const Instance& inst) {
  const std::size_t n = inst.vertex_count();
  const std::size_t l = inst.virtual_edges.size();
  std::vector<std::size_t> order(inst.graph.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.graph.edge(static_cast<EdgeId>(a)).weight < inst.graph.edge(static_cast<EdgeId>(b)).weight;
  });

  Weight best = Weight::infinity();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    auto in = [&](VertexId x) { return ((mask >> x) & 1) != 0; };
    if (!std::all_of(inst.terminals.begin(), inst.terminals.end(), in)) continue;
    const std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t cmask = 0; cmask < (std::size_t{1} << l); ++cmask) {
      Weight cost = Weight::zero();
      Dsu dsu(n);
      std::size_t joined = 0;
      bool ok = true;
      for (std::size_t i = 0; i < l && ok; ++i) {
        const VirtualEdge& ve = inst.virtual_edges[i];
        const bool cu = in(ve.u);
        const bool cv = in(ve.v);
        if ((cmask >> i) & 1) {
          if (!cu || !cv || !dsu.unite(ve.u, ve.v)) ok = false;
          ++joined;
          cost += ve.weight_connect;
        } else if (cu && cv) {
          cost += ve.weight_disconnect;
        } else if (cu) {
          cost += ve.weight_u;
        } else if (cv) {
          cost += ve.weight_v;
        } else {
          ok = false;
        }
      }
      if (!ok || cost.is_infinite()) continue;
      for (std::size_t e : order) {
        const Edge& edge = inst.graph.edge(static_cast<EdgeId>(e));
        if (!in(edge.u) || !in(edge.v) || edge.weight.is_infinite()) continue;
        if (dsu.unite(edge.u, edge.v)) {
          cost += edge.weight;
          ++joined;
        }
      }
      if (joined + 1 == size) best = min(best, cost);
    }
  }
  return best;
}

std::vector<std::vector<Weight>> floyd_warshall(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Weight>> d(n, std::vector<Weight>(n, Weight::infinity()));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = Weight::zero();
  for (const Edge& e : g.edges()) {
    d[e.u][e.v] = min(d[e.u][e.v], e.weight);
    d[e.v][e.u] = min(d[e.v][e.u], e.weight);
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) d[a][b] = min(d[a][b], d[a][m] + d[m][b]);
    }
  }
  return d;
}

bool connected_without(const Multigraph& g, const std::vector<VertexId>& removed) {
  const std::size_t n = g.vertex_count();
  std::vector<char> gone(n, 0);
  for (VertexId x : removed) gone[x] = 1;
  Dsu dsu(n);
  for (const Edge& e : g.edges()) {
    if (!gone[e.u] && !gone[e.v]) dsu.unite(e.u, e.v);
  }
  std::size_t roots = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!gone[v] && dsu.find(v) == v) ++roots;
  }
  return roots == 1;
}

std::vector<std::pair<VertexId, VertexId>> brute_two_cuts(const Multigraph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (n > 2 && !connected_without(g, {u, v})) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<VertexId> brute_cut_vertices(const Multigraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.vertex_count() > 1 && !connected_without(g, {v})) out.push_back(v);
  }
  return out;
}

}  // namespace k4st::testing
