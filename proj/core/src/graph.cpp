#include "k4steiner/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "k4steiner/error.hpp"

namespace k4st {

VertexId Multigraph::add_vertex() {
  adjacency_.emplace_back();
  return static_cast<VertexId>(adjacency_.size() - 1);
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v, Weight weight) {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
  }
  if (u == v) throw Error(ErrorCode::kInvalidArgument, "self-loop at vertex " + std::to_string(u));
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{u, v, weight});
  adjacency_[u].push_back(id);
  adjacency_[v].push_back(id);
  return id;
}

namespace {

std::vector<std::vector<VertexId>> components_masked(const Multigraph& g,
                                                     const std::vector<char>& removed) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(removed);
  std::vector<std::vector<VertexId>> parts;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    auto& part = parts.emplace_back();
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      part.push_back(x);
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.edge(e).other(x);
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(part.begin(), part.end());
  }
  return parts;
}

}  // namespace

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
  return components_masked(g, std::vector<char>(g.vertex_count(), 0));
}

std::vector<std::vector<VertexId>> components_without(const Multigraph& g,
                                                      std::span<const VertexId> removed) {
  std::vector<char> mask(g.vertex_count(), 0);
  for (VertexId v : removed) mask.at(v) = 1;
  return components_masked(g, mask);
}

bool is_connected(const Multigraph& g) { return connected_components(g).size() <= 1; }

std::optional<VertexCut> find_cut_vertex(const Multigraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnectedInput, "find_cut_vertex");
  const std::size_t n = g.vertex_count();
  if (n < 3) return std::nullopt;
  for (VertexId v = 0; v < n; ++v) {
    const VertexId removed[] = {v};
    auto parts = components_without(g, removed);
    if (parts.size() < 2) continue;
    VertexCut cut;
    cut.vertices = {v};
    cut.side_a = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
      cut.side_b.insert(cut.side_b.end(), parts[i].begin(), parts[i].end());
    }
    std::sort(cut.side_b.begin(), cut.side_b.end());
    return cut;
  }
  return std::nullopt;
}

std::optional<VertexCut> find_two_cut(const Multigraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnectedInput, "find_two_cut");
  const std::size_t n = g.vertex_count();
  if (n < 4) return std::nullopt;
  if (find_cut_vertex(g)) throw Error(ErrorCode::kHasCutVertex, "find_two_cut precondition");
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const VertexId removed[] = {u, v};
      auto parts = components_without(g, removed);
      if (parts.size() < 2) continue;
      // Parts are ordered by smallest member, so stable_sort keeps the
      // id tie-break among equally sized parts.
      std::stable_sort(parts.begin(), parts.end(),
                       [](const auto& a, const auto& b) { return a.size() < b.size(); });
      VertexCut cut;
      cut.vertices = {u, v};
      cut.side_a = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) {
        cut.side_b.insert(cut.side_b.end(), parts[i].begin(), parts[i].end());
      }
      std::sort(cut.side_b.begin(), cut.side_b.end());
      return cut;
    }
  }
  return std::nullopt;
}

ShortestPathTree shortest_paths(const Multigraph& g, VertexId source, std::span<const char> allowed) {
  const std::size_t n = g.vertex_count();
  ShortestPathTree tree{std::vector<Weight>(n, Weight::infinity()), std::vector<EdgeId>(n, kNoEdge)};
  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  tree.distance.at(source) = Weight::zero();
  heap.emplace(Weight::zero(), source);
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (d != tree.distance[x]) continue;
    for (EdgeId e : g.incident(x)) {
      const Edge& edge = g.edge(e);
      const VertexId y = edge.other(x);
      if (!allowed.empty() && !allowed[y]) continue;
      const Weight nd = d + edge.weight;
      if (nd < tree.distance[y]) {
        tree.distance[y] = nd;
        tree.parent_edge[y] = e;
        heap.emplace(nd, y);
      }
    }
  }
  return tree;
}

Weight shortest_path_distance(const Multigraph& g, VertexId u, VertexId v) {
  return shortest_paths(g, u).distance.at(v);
}

std::vector<EdgeId> path_edges(const Multigraph& g, const ShortestPathTree& tree, VertexId target) {
  std::vector<EdgeId> path;
  if (tree.distance.at(target).is_infinite()) return path;
  VertexId x = target;
  while (tree.parent_edge[x] != kNoEdge) {
    const EdgeId e = tree.parent_edge[x];
    path.push_back(e);
    x = g.edge(e).other(x);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

// Unit-capacity residual network over split vertices (in = 2v, out = 2v+1).
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : arcs_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, int capacity) {
    arcs_[from].push_back(Arc{to, capacity, arcs_[to].size()});
    arcs_[to].push_back(Arc{from, 0, arcs_[from].size() - 1});
  }

  bool augment(std::size_t source, std::size_t sink) {
    std::vector<std::pair<std::size_t, std::size_t>> parent(arcs_.size(), {SIZE_MAX, 0});
    std::queue<std::size_t> queue;
    queue.push(source);
    parent[source] = {source, 0};
    while (!queue.empty() && parent[sink].first == SIZE_MAX) {
      const std::size_t x = queue.front();
      queue.pop();
      for (std::size_t i = 0; i < arcs_[x].size(); ++i) {
        const Arc& a = arcs_[x][i];
        if (a.capacity > 0 && parent[a.to].first == SIZE_MAX) {
          parent[a.to] = {x, i};
          queue.push(a.to);
        }
      }
    }
    if (parent[sink].first == SIZE_MAX) return false;
    for (std::size_t x = sink; x != source;) {
      auto [p, i] = parent[x];
      Arc& a = arcs_[p][i];
      a.capacity -= 1;
      arcs_[x][a.reverse].capacity += 1;
      x = p;
    }
    return true;
  }

  struct Arc {
    std::size_t to;
    int capacity;
    std::size_t reverse;
  };
  std::vector<std::vector<Arc>> arcs_;
};

}  // namespace

std::optional<std::vector<VertexPath>> disjoint_paths_to_set(const Multigraph& g, VertexId r,
                                                             std::span<const VertexId> targets,
                                                             std::size_t count) {
  const std::size_t n = g.vertex_count();
  std::vector<char> is_target(n, 0);
  for (VertexId t : targets) is_target.at(t) = 1;
  if (is_target.at(r)) throw Error(ErrorCode::kInvalidArgument, "root lies in the target set");
  if (targets.size() < count) return std::nullopt;

  const std::size_t sink = 2 * n;
  FlowNetwork net(2 * n + 1);
  for (VertexId v = 0; v < n; ++v) {
    if (v == r) continue;
    net.add_arc(2 * v, 2 * v + 1, 1);
    if (is_target[v]) net.add_arc(2 * v + 1, sink, 1);
  }
  std::vector<char> seen_pair;
  for (const Edge& e : g.edges()) {
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (is_target[a] || b == r) continue;  // paths stop at the first target
      net.add_arc(2 * a + 1, 2 * b, 1);
    }
  }
  const std::size_t source = 2 * r + 1;
  for (std::size_t i = 0; i < count; ++i) {
    if (!net.augment(source, sink)) return std::nullopt;
  }

  // Decompose: follow saturated forward arcs from the source.
  std::vector<VertexPath> paths;
  auto used = [](const FlowNetwork::Arc& a) { return a.capacity == 0; };
  for (auto& first : net.arcs_[source]) {
    if (first.to >= 2 * n || first.to % 2 != 0) continue;
    // Forward arcs were added with capacity 1; a saturated one carries flow.
    if (!used(first)) continue;
    const auto& back = net.arcs_[first.to][first.reverse];
    if (back.capacity != 1) continue;
    VertexPath path{r};
    std::size_t node = first.to;
    while (true) {
      const auto v = static_cast<VertexId>(node / 2);
      path.push_back(v);
      if (is_target[v]) break;
      // in -> out is forced; then pick the saturated out arc.
      std::size_t next = SIZE_MAX;
      for (auto& a : net.arcs_[2 * v + 1]) {
        if (a.to < 2 * n && a.to % 2 == 0 && a.capacity == 0 &&
            net.arcs_[a.to][a.reverse].capacity == 1) {
          next = a.to;
          a.capacity = -1;  // consume so cycles in the flow are not revisited
          break;
        }
      }
      if (next == SIZE_MAX) break;
      node = next;
    }
    if (is_target[path.back()]) paths.push_back(std::move(path));
  }
  if (paths.size() < count) return std::nullopt;
  paths.resize(count);
  std::sort(paths.begin(), paths.end(),
            [](const VertexPath& a, const VertexPath& b) { return a.back() < b.back(); });
  return paths;
}

}  // namespace k4st
