#include "k4steiner/certificate.hpp"

#include <algorithm>
#include <unordered_map>

namespace k4st {

namespace {

constexpr std::array<std::pair<int, int>, 6> kPairs = {
    std::pair{0, 1}, std::pair{0, 2}, std::pair{0, 3},
    std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}};

bool has_edge(const Multigraph& g, VertexId a, VertexId b) {
  if (a >= g.vertex_count() || b >= g.vertex_count()) return false;
  for (EdgeId e : g.incident(a)) {
    if (g.edge(e).other(a) == b) return true;
  }
  return false;
}

bool induces_connected(const Multigraph& g, const std::vector<VertexId>& set,
                       const std::vector<int>& label, int want) {
  if (set.empty()) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{set.front()};
  seen[set.front()] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    ++reached;
    for (EdgeId e : g.incident(x)) {
      const VertexId y = g.edge(e).other(x);
      if (!seen[y] && label[y] == want) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return reached == set.size();
}

}  // namespace

std::optional<std::string> check_certificate(const Multigraph& g, std::span<const VertexId> roots,
                                             const K4Certificate& cert) {
  const std::size_t n = g.vertex_count();
  std::vector<int> label(n, -1);
  for (int i = 0; i < 4; ++i) {
    if (cert.branch_sets[i].empty()) return "empty branch set";
    for (VertexId v : cert.branch_sets[i]) {
      if (v >= n) return "branch vertex out of range";
      if (label[v] != -1) return "branch sets overlap";
      label[v] = i;
    }
  }
  for (int i = 0; i < 4; ++i) {
    const VertexId r = cert.root_witnesses[i];
    if (r >= n || label[r] != i) return "root witness outside its branch set";
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) return "root witness is not a root";
    if (!induces_connected(g, cert.branch_sets[i], label, i)) return "branch set not connected";
  }
  for (std::size_t p = 0; p < kPairs.size(); ++p) {
    const auto [i, j] = kPairs[p];
    const auto [a, b] = cert.cross_edges[p];
    if (a >= n || b >= n) return "cross edge out of range";
    const bool oriented = (label[a] == i && label[b] == j) || (label[a] == j && label[b] == i);
    if (!oriented) return "cross edge does not join its branch sets";
    if (!has_edge(g, a, b)) return "cross edge missing from graph";
  }
  return std::nullopt;
}

std::optional<K4Certificate> certificate_from_branch_sets(
    const Multigraph& g, std::span<const VertexId> roots,
    std::array<std::vector<VertexId>, 4> branch_sets) {
  const std::size_t n = g.vertex_count();
  K4Certificate cert;
  std::vector<int> label(n, -1);
  for (int i = 0; i < 4; ++i) {
    auto& set = branch_sets[i];
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (VertexId v : set) {
      if (v >= n || label[v] != -1) return std::nullopt;
      label[v] = i;
    }
    auto witness = std::find_if(set.begin(), set.end(), [&](VertexId v) {
      return std::find(roots.begin(), roots.end(), v) != roots.end();
    });
    if (witness == set.end()) return std::nullopt;
    cert.root_witnesses[i] = *witness;
  }
  std::array<bool, 6> found{};
  for (const Edge& e : g.edges()) {
    const int a = label[e.u];
    const int b = label[e.v];
    if (a < 0 || b < 0 || a == b) continue;
    for (std::size_t p = 0; p < kPairs.size(); ++p) {
      if (found[p]) continue;
      if ((kPairs[p].first == a && kPairs[p].second == b) ||
          (kPairs[p].first == b && kPairs[p].second == a)) {
        cert.cross_edges[p] = {e.u, e.v};
        found[p] = true;
      }
    }
  }
  if (!std::all_of(found.begin(), found.end(), [](bool f) { return f; })) return std::nullopt;
  cert.branch_sets = std::move(branch_sets);
  if (check_certificate(g, roots, cert)) return std::nullopt;
  return cert;
}

K4Certificate certificate_from_cycle_and_paths(std::span<const VertexId> cycle,
                                               std::array<VertexId, 4> v,
                                               std::span<const VertexId> p1,
                                               std::span<const VertexId> p2) {
  auto fail = [](const char* why) { return Error(ErrorCode::kPatternViolation, why); };
  const std::size_t len = cycle.size();
  std::unordered_map<VertexId, std::size_t> position;
  for (std::size_t i = 0; i < len; ++i) {
    if (!position.emplace(cycle[i], i).second) throw fail("cycle repeats a vertex");
  }
  std::array<std::size_t, 4> pos{};
  for (int i = 0; i < 4; ++i) {
    auto it = position.find(v[i]);
    if (it == position.end()) throw fail("marked vertex not on the cycle");
    pos[i] = it->second;
  }
  auto offset = [&](std::size_t p) { return (p + len - pos[0]) % len; };
  if (!(offset(pos[1]) < offset(pos[2]) && offset(pos[2]) < offset(pos[3]) && offset(pos[1]) > 0)) {
    throw fail("marked vertices out of cyclic order");
  }
  auto oriented = [&](std::span<const VertexId> p, VertexId a, VertexId b) {
    std::vector<VertexId> out(p.begin(), p.end());
    if (out.size() < 2) throw fail("path too short");
    if (out.front() == b && out.back() == a) std::reverse(out.begin(), out.end());
    if (out.front() != a || out.back() != b) throw fail("path endpoints do not match");
    return out;
  };
  const auto q1 = oriented(p1, v[0], v[2]);
  const auto q2 = oriented(p2, v[1], v[3]);
  std::unordered_map<VertexId, int> owner;
  for (VertexId x : cycle) owner[x] = 0;
  for (const auto* q : {&q1, &q2}) {
    for (std::size_t i = 1; i + 1 < q->size(); ++i) {
      if (!owner.emplace((*q)[i], 1).second) throw fail("paths intersect each other or the cycle");
    }
  }
  K4Certificate cert;
  std::array<VertexId, 4> arc_last{};
  for (int i = 0; i < 4; ++i) {
    const std::size_t end = pos[(i + 1) % 4];
    for (std::size_t p = pos[i]; p != end; p = (p + 1) % len) {
      cert.branch_sets[i].push_back(cycle[p]);
      arc_last[i] = cycle[p];
    }
    cert.root_witnesses[i] = v[i];
  }
  cert.branch_sets[0].insert(cert.branch_sets[0].end(), q1.begin() + 1, q1.end() - 1);
  cert.branch_sets[1].insert(cert.branch_sets[1].end(), q2.begin() + 1, q2.end() - 1);
  for (auto& set : cert.branch_sets) std::sort(set.begin(), set.end());
  cert.cross_edges[0] = {arc_last[0], v[1]};
  cert.cross_edges[1] = {q1[q1.size() - 2], v[2]};
  cert.cross_edges[2] = {arc_last[3], v[0]};
  cert.cross_edges[3] = {arc_last[1], v[2]};
  cert.cross_edges[4] = {q2[q2.size() - 2], v[3]};
  cert.cross_edges[5] = {arc_last[2], v[3]};
  return cert;
}

}  // namespace k4st
