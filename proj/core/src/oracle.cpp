#include "k4steiner/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>

#include "k4steiner/error.hpp"

namespace k4st {

namespace {

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

// Back pointer of a Dreyfus-Wagner state: a split into two submasks or the
// last edge of a grow step.
struct Step {
  enum Kind : std::uint8_t { kNone, kSplit, kGrow } kind = kNone;
  std::uint32_t value = 0;
};

}  // namespace

SteinerTree dreyfus_wagner(const Multigraph& g, std::span<const VertexId> terminals,
                           std::size_t terminal_cap) {
  std::vector<VertexId> terms(terminals.begin(), terminals.end());
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  const std::size_t k = terms.size();
  const std::size_t n = g.vertex_count();
  for (VertexId t : terms) {
    if (t >= n) throw Error(ErrorCode::kInvalidArgument, "terminal out of range");
  }
  if (k == 0) return SteinerTree{Weight::zero(), {}, {}};
  if (k == 1) return SteinerTree{Weight::zero(), {}, {terms[0]}};
  if (k > terminal_cap) throw Error(ErrorCode::kInstanceTooLarge, "too many terminals for Dreyfus-Wagner");

  const std::uint32_t full = (1u << k) - 1;
  std::vector<Weight> dp(static_cast<std::size_t>(full + 1) * n, Weight::infinity());
  std::vector<Step> back(dp.size());
  auto at = [n](std::uint32_t mask, VertexId v) { return static_cast<std::size_t>(mask) * n + v; };
  for (std::size_t i = 0; i < k; ++i) dp[at(1u << i, terms[i])] = Weight::zero();

  using Item = std::pair<Weight, VertexId>;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) > 1) {
      const std::uint32_t low = mask & (~mask + 1);
      for (VertexId v = 0; v < n; ++v) {
        Weight best = dp[at(mask, v)];
        Step step = back[at(mask, v)];
        for (std::uint32_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
          if (!(sub & low)) continue;
          const Weight cand = dp[at(sub, v)] + dp[at(mask ^ sub, v)];
          if (cand < best) {
            best = cand;
            step = {Step::kSplit, sub};
          }
        }
        dp[at(mask, v)] = best;
        back[at(mask, v)] = step;
      }
    }
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (VertexId v = 0; v < n; ++v) {
      if (dp[at(mask, v)].is_finite()) heap.emplace(dp[at(mask, v)], v);
    }
    while (!heap.empty()) {
      const auto [d, x] = heap.top();
      heap.pop();
      if (d != dp[at(mask, x)]) continue;
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.edge(e).other(x);
        const Weight nd = d + g.edge(e).weight;
        if (nd < dp[at(mask, y)]) {
          dp[at(mask, y)] = nd;
          back[at(mask, y)] = {Step::kGrow, e};
          heap.emplace(nd, y);
        }
      }
    }
  }
  if (dp[at(full, terms[0])].is_infinite()) {
    throw Error(ErrorCode::kUnreachable, "terminals lie in different components");
  }

  std::vector<EdgeId> used;
  std::vector<std::pair<std::uint32_t, VertexId>> stack{{full, terms[0]}};
  while (!stack.empty()) {
    const auto [mask, v] = stack.back();
    stack.pop_back();
    const Step step = back[at(mask, v)];
    if (step.kind == Step::kSplit) {
      stack.emplace_back(step.value, v);
      stack.emplace_back(mask ^ step.value, v);
    } else if (step.kind == Step::kGrow) {
      used.push_back(step.value);
      stack.emplace_back(mask, g.edge(step.value).other(v));
    }
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::stable_sort(used.begin(), used.end(),
                   [&](EdgeId a, EdgeId b) { return g.edge(a).weight < g.edge(b).weight; });
  SteinerTree tree;
  DisjointSets sets(n);
  tree.vertices = terms;
  for (EdgeId e : used) {
    if (!sets.unite(g.edge(e).u, g.edge(e).v)) continue;
    tree.edges.push_back(e);
    tree.cost += g.edge(e).weight;
    tree.vertices.push_back(g.edge(e).u);
    tree.vertices.push_back(g.edge(e).v);
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  std::sort(tree.vertices.begin(), tree.vertices.end());
  tree.vertices.erase(std::unique(tree.vertices.begin(), tree.vertices.end()), tree.vertices.end());
  return tree;
}

Solution solve_vest_by_reduction(const Instance& inst, std::size_t virtual_cap) {
  const std::size_t l = inst.virtual_edges.size();
  if (l > virtual_cap) throw Error(ErrorCode::kTooManyVirtualEdges, "reduction oracle cap exceeded");
  const std::size_t n = inst.vertex_count();
  std::uint64_t branches = 1;
  for (std::size_t i = 0; i < l; ++i) branches *= 4;

  Solution best;
  std::vector<VeStatus> status(l);
  for (std::uint64_t code = 0; code < branches; ++code) {
    std::uint64_t rest = code;
    for (std::size_t i = l; i-- > 0;) {
      status[i] = static_cast<VeStatus>(rest % 4);
      rest /= 4;
    }
    std::vector<char> required(n, 0);
    std::vector<char> forbidden(n, 0);
    for (VertexId t : inst.terminals) required[t] = 1;
    DisjointSets merged(n);
    Weight base;
    bool ok = true;
    std::vector<VirtualIndex> connected;
    for (std::size_t i = 0; i < l && ok; ++i) {
      const auto& ve = inst.virtual_edges[i];
      base += ve.weight(status[i]);
      switch (status[i]) {
        case VeStatus::EndU: required[ve.u] = 1; forbidden[ve.v] = 1; break;
        case VeStatus::EndV: required[ve.v] = 1; forbidden[ve.u] = 1; break;
        case VeStatus::Connect:
          required[ve.u] = required[ve.v] = 1;
          ok = merged.unite(ve.u, ve.v);
          connected.push_back(static_cast<VirtualIndex>(i));
          break;
        case VeStatus::Disconnect: required[ve.u] = required[ve.v] = 1; break;
      }
    }
    if (!ok || base.is_infinite() || base >= best.cost) continue;
    for (VertexId v = 0; v < n && ok; ++v) ok = !(required[v] && forbidden[v]);
    if (!ok) continue;

    std::vector<VertexId> cls(n, kNoVertex);
    std::vector<std::vector<VertexId>> members;
    for (VertexId v = 0; v < n; ++v) {
      if (forbidden[v]) continue;
      const auto r = merged.find(v);
      if (cls[r] == kNoVertex) {
        cls[r] = static_cast<VertexId>(members.size());
        members.emplace_back();
      }
      cls[v] = cls[r];
      members[cls[v]].push_back(v);
    }
    Multigraph h(members.size());
    std::vector<EdgeId> lift;
    for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
      const Edge& edge = inst.graph.edge(e);
      if (forbidden[edge.u] || forbidden[edge.v] || cls[edge.u] == cls[edge.v]) continue;
      h.add_edge(cls[edge.u], cls[edge.v], edge.weight);
      lift.push_back(e);
    }
    std::vector<VertexId> terms;
    for (VertexId v = 0; v < n; ++v) {
      if (required[v]) terms.push_back(cls[v]);
    }
    SteinerTree tree;
    try {
      tree = dreyfus_wagner(h, terms);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::kUnreachable) continue;
      throw;
    }
    if (base + tree.cost >= best.cost) continue;
    std::vector<VertexId> vertices;
    for (VertexId c : tree.vertices) vertices.insert(vertices.end(), members[c].begin(), members[c].end());
    std::vector<EdgeId> edges;
    for (EdgeId e : tree.edges) edges.push_back(lift[e]);
    Solution sol = canonicalize(inst, std::move(vertices), std::move(edges), connected);
    if (sol.cost < best.cost) best = std::move(sol);
  }
  if (best.cost.is_infinite()) throw Error(ErrorCode::kInfeasible, "no feasible status assignment");
  return best;
}

namespace {

// Search over partitions of a small connected graph into four connected,
// rooted, pairwise adjacent parts. Adjacency is kept as bit masks.
class PartitionSearch {
 public:
  PartitionSearch(std::vector<std::uint32_t> adj, std::size_t root_count)
      : adj_(std::move(adj)), roots_(root_count), label_(adj_.size(), -1) {}

  bool run() { return assign(0, 0); }
  const std::vector<int>& labels() const { return label_; }

 private:
  bool connected(std::uint32_t set) const {
    std::uint32_t seen = set & (~set + 1);
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      next &= set & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == set;
  }

  bool complete() const {
    std::array<std::uint32_t, 4> nbr{};
    for (int i = 0; i < 4; ++i) {
      if (!connected(sets_[i])) return false;
      for (std::uint32_t f = sets_[i]; f; f &= f - 1) nbr[i] |= adj_[std::countr_zero(f)];
    }
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (!(nbr[i] & sets_[j])) return false;
      }
    }
    return true;
  }

  bool assign(std::size_t idx, int used) {
    if (idx == adj_.size()) return used == 4 && complete();
    // Every part needs a root, and roots come first.
    if (idx <= roots_ && static_cast<std::size_t>(4 - used) > roots_ - idx) return false;
    const int limit = idx < roots_ ? std::min(used, 3) : 3;
    for (int lab = 0; lab <= limit; ++lab) {
      label_[idx] = lab;
      sets_[lab] |= 1u << idx;
      const bool found = assign(idx + 1, std::max(used, lab + 1));
      if (found) return true;
      sets_[lab] &= ~(1u << idx);
    }
    label_[idx] = -1;
    return false;
  }

  std::vector<std::uint32_t> adj_;
  std::size_t roots_;
  std::vector<int> label_;
  std::array<std::uint32_t, 4> sets_{};
};

}  // namespace

std::optional<K4Certificate> has_rooted_k4(const Multigraph& g, std::span<const VertexId> roots,
                                           std::size_t vertex_cap) {
  const std::size_t n = g.vertex_count();
  std::vector<char> is_root(n, 0);
  for (VertexId r : roots) is_root.at(r) = 1;
  if (std::count(is_root.begin(), is_root.end(), 1) < 4) return std::nullopt;

  // Suppress non-root vertices of degree <= 2: deleting a leaf and
  // contracting a degree-2 vertex into a neighbour keep rooted K4-minors.
  enum State : std::uint8_t { kAlive, kDeleted, kMerged };
  std::vector<State> state(n, kAlive);
  std::vector<VertexId> merged_into(n, kNoVertex);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexId v = 0; v < n; ++v) {
      if (state[v] != kAlive || is_root[v]) continue;
      std::vector<VertexId> nbrs;
      for (VertexId w = 0; w < n && nbrs.size() < 3; ++w) {
        if (adj[v][w] && state[w] == kAlive) nbrs.push_back(w);
      }
      if (nbrs.size() >= 3) continue;
      if (nbrs.size() == 2) {
        adj[nbrs[0]][nbrs[1]] = adj[nbrs[1]][nbrs[0]] = 1;
        state[v] = kMerged;
        merged_into[v] = nbrs[0];
      } else {
        state[v] = kDeleted;
      }
      changed = true;
    }
  }

  std::vector<int> final_label(n, -1);
  std::vector<char> seen(n, 0);
  bool found = false;
  for (VertexId s = 0; s < n && !found; ++s) {
    if (state[s] != kAlive || seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (VertexId w = 0; w < n; ++w) {
        if (adj[comp[i]][w] && state[w] == kAlive && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::stable_partition(comp.begin(), comp.end(), [&](VertexId v) { return is_root[v] != 0; });
    const auto root_count = static_cast<std::size_t>(
        std::count_if(comp.begin(), comp.end(), [&](VertexId v) { return is_root[v] != 0; }));
    if (root_count < 4 || comp.size() < 4) continue;
    if (comp.size() > vertex_cap || comp.size() > 32) {
      throw Error(ErrorCode::kInstanceTooLarge, "rooted K4 search above the vertex cap");
    }
    std::vector<std::uint32_t> local_adj(comp.size(), 0);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = 0; j < comp.size(); ++j) {
        if (adj[comp[i]][comp[j]]) local_adj[i] |= 1u << j;
      }
    }
    PartitionSearch search(std::move(local_adj), root_count);
    if (search.run()) {
      found = true;
      for (std::size_t i = 0; i < comp.size(); ++i) final_label[comp[i]] = search.labels()[i];
    }
  }
  if (!found) return std::nullopt;

  std::function<int(VertexId)> resolve = [&](VertexId v) -> int {
    if (state[v] == kAlive) return final_label[v];
    if (state[v] == kDeleted) return -1;
    return resolve(merged_into[v]);
  };
  std::array<std::vector<VertexId>, 4> sets;
  for (VertexId v = 0; v < n; ++v) {
    const int lab = resolve(v);
    if (lab >= 0) sets[lab].push_back(v);
  }
  auto cert = certificate_from_branch_sets(g, roots, std::move(sets));
  if (!cert) throw Error(ErrorCode::kInconsistentTrace, "rooted K4 lift failed");
  return cert;
}

bool instance_is_minor_free(const Instance& inst, std::size_t vertex_cap) {
  const StarGraph star = build_star_graph(inst);
  return !has_rooted_k4(star.graph, star.star_roots, vertex_cap).has_value();
}

}  // namespace k4st
