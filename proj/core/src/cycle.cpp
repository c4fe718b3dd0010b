#include "k4steiner/cycle.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "k4steiner/certificate.hpp"
#include "k4steiner/error.hpp"

namespace k4st {

namespace {

constexpr std::size_t kNpos = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> positions(std::size_t n, const Cycle& c) {
  std::vector<std::size_t> pos(n, kNpos);
  for (std::size_t i = 0; i < c.size(); ++i) pos[c[i]] = i;
  return pos;
}

// Vertices strictly between positions i and j walking forward.
std::vector<VertexId> open_arc(const Cycle& c, std::size_t i, std::size_t j) {
  std::vector<VertexId> out;
  for (std::size_t p = (i + 1) % c.size(); p != j; p = (p + 1) % c.size()) out.push_back(c[p]);
  return out;
}

// Forward walk from position i to position j, both included.
std::vector<VertexId> closed_walk(const Cycle& c, std::size_t i, std::size_t j) {
  std::vector<VertexId> out{c[i]};
  for (std::size_t p = i; p != j;) {
    p = (p + 1) % c.size();
    out.push_back(c[p]);
  }
  return out;
}

std::vector<char> mask_of(std::size_t n, std::span<const VertexId> xs) {
  std::vector<char> m(n, 0);
  for (VertexId x : xs) m.at(x) = 1;
  return m;
}

bool any_marked(const std::vector<VertexId>& xs, const std::vector<char>& mask) {
  return std::any_of(xs.begin(), xs.end(), [&](VertexId x) { return mask[x] != 0; });
}

// Cycle-plus-crossing-chords certificate with flexible arc splits: p0..p3 lie on the
// cycle in this order, chord_a joins p0 and p2, chord_b joins p1 and p3.
std::optional<K4Certificate> crossing_chords(const Multigraph& g, std::span<const VertexId> roots,
                                             const Cycle& c, std::array<std::size_t, 4> p,
                                             const std::vector<VertexId>& chord_a,
                                             const std::vector<VertexId>& chord_b) {
  const auto is_root = mask_of(g.vertex_count(), roots);
  std::array<std::vector<VertexId>, 4> arcs;
  std::array<std::vector<std::size_t>, 4> cuts;
  for (int i = 0; i < 4; ++i) {
    arcs[i] = open_arc(c, p[i], p[(i + 1) % 4]);
    const auto& arc = arcs[i];
    cuts[i] = {0, arc.size()};
    auto first = std::find_if(arc.begin(), arc.end(), [&](VertexId x) { return is_root[x] != 0; });
    if (first != arc.end()) cuts[i].push_back(static_cast<std::size_t>(first - arc.begin()) + 1);
  }
  const std::vector<VertexId> inner_a(chord_a.begin() + 1, chord_a.end() - 1);
  const std::vector<VertexId> inner_b(chord_b.begin() + 1, chord_b.end() - 1);
  std::array<std::size_t, 4> pick{};
  for (int mode = 0; mode < 4; ++mode) {
    for (pick[0] = 0; pick[0] < cuts[0].size(); ++pick[0]) {
      for (pick[1] = 0; pick[1] < cuts[1].size(); ++pick[1]) {
        for (pick[2] = 0; pick[2] < cuts[2].size(); ++pick[2]) {
          for (pick[3] = 0; pick[3] < cuts[3].size(); ++pick[3]) {
            std::array<std::vector<VertexId>, 4> sets;
            for (int i = 0; i < 4; ++i) {
              sets[i].push_back(c[p[i]]);
              const std::size_t t = cuts[i][pick[i]];
              sets[i].insert(sets[i].end(), arcs[i].begin(), arcs[i].begin() + static_cast<std::ptrdiff_t>(t));
              sets[(i + 1) % 4].insert(sets[(i + 1) % 4].end(), arcs[i].begin() + static_cast<std::ptrdiff_t>(t), arcs[i].end());
            }
            auto& ga = sets[(mode & 1) ? 2 : 0];
            ga.insert(ga.end(), inner_a.begin(), inner_a.end());
            auto& gb = sets[(mode & 2) ? 3 : 1];
            gb.insert(gb.end(), inner_b.begin(), inner_b.end());
            if (auto cert = certificate_from_branch_sets(g, roots, std::move(sets))) return cert;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Cycle initial_cycle(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<VertexId> parent(n, kNoVertex);
  for (VertexId root = 0; root < n; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      const auto inc = g.incident(x);
      if (next == inc.size()) {
        state[x] = 2;
        stack.pop_back();
        continue;
      }
      const VertexId y = g.edge(inc[next++]).other(x);
      if (y == parent[x]) continue;
      if (state[y] == 1) {
        Cycle cyc;
        for (VertexId z = x; z != y; z = parent[z]) cyc.push_back(z);
        cyc.push_back(y);
        std::reverse(cyc.begin(), cyc.end());
        return cyc;
      }
      if (state[y] == 0) {
        state[y] = 1;
        parent[y] = x;
        stack.emplace_back(y, 0);
      }
    }
  }
  throw Error(ErrorCode::kAcyclic, "graph has no cycle");
}

Cycle absorb_vertex(const Multigraph& g, std::span<const VertexId> roots, const Cycle& c,
                    VertexId target, std::span<const VertexId> protected_vertices, VertexId partner,
                    VertexId partner_sub) {
  const std::size_t n = g.vertex_count();
  const auto pos = positions(n, c);
  if (pos.at(target) != kNpos) return c;
  const auto is_protected = mask_of(n, protected_vertices);
  const auto is_root = mask_of(n, roots);
  auto paths = disjoint_paths_to_set(g, target, c, 3);
  if (!paths) paths = disjoint_paths_to_set(g, target, c, 2);
  if (!paths) throw Error(ErrorCode::kNotThreeConnected, "fewer than two paths to the cycle");
  std::sort(paths->begin(), paths->end(), [&](const VertexPath& a, const VertexPath& b) {
    return pos[a.back()] < pos[b.back()];
  });
  const auto& ps = *paths;
  const int count = static_cast<int>(ps.size());
  std::array<std::size_t, 3> at{};
  for (int i = 0; i < count; ++i) at[i] = pos[ps[i].back()];

  // New cycle: forward from at[j] round to at[i], then P_i back to target
  // and P_j out to at[j]. Drops the open arc from at[i] to at[j].
  auto reroute = [&](int i, int j) {
    Cycle out = closed_walk(c, at[j], at[i]);
    for (auto it = ps[i].rbegin() + 1; it != ps[i].rend(); ++it) out.push_back(*it);
    for (std::size_t k = 1; k + 1 < ps[j].size(); ++k) out.push_back(ps[j][k]);
    return out;
  };

  int best = -1;
  std::pair<VertexId, VertexId> best_key{};
  for (int i = 0; i < count; ++i) {
    const int j = (i + 1) % count;
    if (any_marked(open_arc(c, at[i], at[j]), is_protected)) continue;
    const VertexId a = c[at[i]];
    const VertexId b = c[at[j]];
    const std::pair key{std::min(a, b), std::max(a, b)};
    if (best < 0 || key < best_key) {
      best = i;
      best_key = key;
    }
  }
  if (best >= 0) return reroute(best, (best + 1) % count);
  if (count < 3) throw Error(ErrorCode::kNotThreeConnected, "two paths to the cycle and both arcs protected");

  if (partner != kNoVertex && partner_sub != kNoVertex && pos[partner] != kNpos &&
      pos[partner_sub] == kNpos) {
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      const auto arc = open_arc(c, at[i], at[j]);
      if (std::find(arc.begin(), arc.end(), partner) == arc.end() || any_marked(arc, is_root)) continue;
      // target, s, partner, back along C to at[i], round to at[j], P_j home.
      Cycle out{target, partner_sub};
      for (std::size_t p = pos[partner];; p = (p + c.size() - 1) % c.size()) {
        out.push_back(c[p]);
        if (p == at[j]) break;
      }
      for (std::size_t k = ps[j].size() - 1; k-- > 1;) out.push_back(ps[j][k]);
      return out;
    }
  }

  std::array<std::vector<VertexId>, 4> sets;
  sets[3].push_back(target);
  for (const auto& path : ps) sets[3].insert(sets[3].end(), path.begin() + 1, path.end() - 1);
  if (partner_sub != kNoVertex && pos[partner_sub] == kNpos &&
      std::find(sets[3].begin(), sets[3].end(), partner_sub) == sets[3].end()) {
    sets[3].push_back(partner_sub);
  }
  for (int i = 0; i < 3; ++i) {
    sets[i] = open_arc(c, at[i], at[(i + 1) % 3]);
    sets[i].insert(sets[i].begin(), c[at[i]]);
  }
  if (auto cert = certificate_from_branch_sets(g, roots, std::move(sets))) throw MinorFound(*cert);
  throw Error(ErrorCode::kPatternViolation,
              "absorbing vertex " + std::to_string(target) + ": all arcs protected but no certificate");
}

Cycle absorb_subdivision(const Multigraph& g, std::span<const VertexId> roots, const Cycle& c,
                         VertexId s) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> nbrs;
  for (EdgeId e : g.incident(s)) nbrs.push_back(g.edge(e).other(s));
  std::sort(nbrs.begin(), nbrs.end());
  nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  if (nbrs.size() != 2) throw Error(ErrorCode::kInvalidArgument, "subdivision vertex must have two neighbours");
  const auto is_root = mask_of(n, roots);
  Cycle cur = c;
  auto on = [&](VertexId x) { return std::find(cur.begin(), cur.end(), x) != cur.end(); };
  auto protect = [&](VertexId extra) {
    std::vector<VertexId> keep;
    for (VertexId x : cur) {
      if (is_root[x]) keep.push_back(x);
    }
    if (extra != kNoVertex && on(extra)) keep.push_back(extra);
    return keep;
  };
  if (on(s)) return cur;
  for (int side = 0; side < 2; ++side) {
    const VertexId x = nbrs[side];
    const VertexId y = nbrs[1 - side];
    if (on(x)) continue;
    cur = absorb_vertex(g, roots, cur, x, protect(y), y, s);
    if (on(s)) return cur;
  }

  const auto pos = positions(n, cur);
  const VertexId u = nbrs[0];
  const VertexId v = nbrs[1];
  const auto arc_uv = open_arc(cur, pos[u], pos[v]);
  const auto arc_vu = open_arc(cur, pos[v], pos[u]);
  const bool free_uv = !any_marked(arc_uv, is_root);
  const bool free_vu = !any_marked(arc_vu, is_root);
  // With both arcs free, drop the shorter so the kept arc is not a bare edge.
  if (free_uv && (!free_vu || arc_uv.size() <= arc_vu.size())) {
    Cycle out{s};
    const auto rest = closed_walk(cur, pos[v], pos[u]);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  if (free_vu) {
    Cycle out{s};
    const auto rest = closed_walk(cur, pos[u], pos[v]);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }

  // Both arcs hold roots: a path Q from the u->v arc to the v->u arc that
  // avoids the cycle crosses the chord u-s-v.
  std::vector<char> in_far(n, 0);
  for (VertexId x : arc_vu) in_far[x] = 1;
  const std::vector<VertexId> chord_s{u, s, v};
  for (VertexId a : arc_uv) {
    std::vector<VertexId> parent(n, kNoVertex);
    std::vector<char> seen(n, 0);
    std::queue<VertexId> queue;
    queue.push(a);
    seen[a] = 1;
    VertexId hit = kNoVertex;
    while (!queue.empty() && hit == kNoVertex) {
      const VertexId x = queue.front();
      queue.pop();
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.edge(e).other(x);
        if (seen[y] || y == s) continue;
        if (in_far[y]) {
          parent[y] = x;
          hit = y;
          break;
        }
        if (pos[y] != kNpos) continue;
        seen[y] = 1;
        parent[y] = x;
        queue.push(y);
      }
    }
    if (hit == kNoVertex) continue;
    std::vector<VertexId> q;
    for (VertexId x = hit; x != a; x = parent[x]) q.push_back(x);
    q.push_back(a);
    std::reverse(q.begin(), q.end());
    const std::array<std::size_t, 4> p{pos[u], pos[a], pos[v], pos[hit]};
    if (auto cert = crossing_chords(g, roots, cur, p, chord_s, q)) throw MinorFound(*cert);
  }
  throw Error(ErrorCode::kPatternViolation,
              "splicing subdivision vertex " + std::to_string(s) + ": no free arc and no certificate");
}

namespace {

// G* without subdivision vertices that duplicate an adjacency already
// present, so every cycle passes through at least three branch vertices.
Multigraph branch_graph(const Instance& inst, const StarGraph& star) {
  std::set<std::pair<VertexId, VertexId>> joined;
  for (const Edge& e : inst.graph.edges()) joined.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
  std::vector<char> dropped(star.graph.vertex_count(), 0);
  for (std::size_t i = 0; i < inst.virtual_edges.size(); ++i) {
    const auto& ve = inst.virtual_edges[i];
    if (!joined.emplace(std::min(ve.u, ve.v), std::max(ve.u, ve.v)).second) {
      dropped[star.subdivision[i]] = 1;
    }
  }
  Multigraph h(star.graph.vertex_count());
  for (const Edge& e : star.graph.edges()) {
    if (!dropped[e.u] && !dropped[e.v]) h.add_edge(e.u, e.v, e.weight);
  }
  return h;
}

// A chord of C or a component of G - V(C), with its feet on C.
struct Bridge {
  std::vector<VertexId> inner;    // empty for a chord
  std::vector<std::size_t> feet;  // cycle positions, sorted
};

std::vector<Bridge> bridges_of(const Multigraph& g, const Cycle& c, const std::vector<std::size_t>& pos) {
  const std::size_t len = c.size();
  std::vector<Bridge> out;
  std::set<std::pair<std::size_t, std::size_t>> chords;
  for (const Edge& e : g.edges()) {
    if (pos[e.u] == kNpos || pos[e.v] == kNpos) continue;
    const std::size_t a = std::min(pos[e.u], pos[e.v]);
    const std::size_t b = std::max(pos[e.u], pos[e.v]);
    if (b - a == 1 || (a == 0 && b == len - 1)) continue;
    if (chords.emplace(a, b).second) out.push_back({{}, {a, b}});
  }
  for (auto& part : components_without(g, c)) {
    Bridge bridge;
    for (VertexId x : part) {
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.edge(e).other(x);
        if (pos[y] != kNpos) bridge.feet.push_back(pos[y]);
      }
    }
    std::sort(bridge.feet.begin(), bridge.feet.end());
    bridge.feet.erase(std::unique(bridge.feet.begin(), bridge.feet.end()), bridge.feet.end());
    bridge.inner = std::move(part);
    out.push_back(std::move(bridge));
  }
  return out;
}

// Path from c[a] to c[b] through the bridge's inner vertices.
std::vector<VertexId> bridge_path(const Multigraph& g, const Cycle& c, const Bridge& bridge, std::size_t a,
                                  std::size_t b) {
  if (bridge.inner.empty()) return {c[a], c[b]};
  const std::size_t n = g.vertex_count();
  std::vector<char> inside(n, 0);
  for (VertexId x : bridge.inner) inside[x] = 1;
  std::vector<VertexId> parent(n, kNoVertex);
  std::queue<VertexId> queue;
  queue.push(c[a]);
  parent[c[a]] = c[a];
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop();
    for (EdgeId e : g.incident(x)) {
      const VertexId y = g.edge(e).other(x);
      if (parent[y] != kNoVertex) continue;
      if (y == c[b] && x != c[a]) {
        std::vector<VertexId> path{y};
        for (VertexId z = x; z != c[a]; z = parent[z]) path.push_back(z);
        path.push_back(c[a]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (!inside[y]) continue;
      parent[y] = x;
      queue.push(y);
    }
  }
  return {};
}

// Two bridges with interleaving feet give disjoint crossing paths; throws
// MinorFound when the roots on C split so as to root the K4 they span.
void reject_crossing_bridges(const Multigraph& g, std::span<const VertexId> roots, const Cycle& c) {
  const std::size_t len = c.size();
  const auto pos = positions(g.vertex_count(), c);
  const auto bridges = bridges_of(g, c, pos);
  if (bridges.size() < 2) return;
  const auto is_root = mask_of(g.vertex_count(), roots);
  std::vector<std::size_t> prefix(2 * len + 1, 0);
  for (std::size_t i = 0; i < 2 * len; ++i) prefix[i + 1] = prefix[i] + (is_root[c[i % len]] ? 1 : 0);
  // roots at positions i, i+1, ..., j-1 walking forward
  auto has_root = [&](std::size_t i, std::size_t j) {
    const std::size_t end = j > i ? j : j + len;
    return prefix[end] > prefix[i];
  };
  auto rooted = [&](const std::array<std::size_t, 4>& p) {
    bool head = true;
    bool tail = true;
    for (int i = 0; i < 4; ++i) {
      head = head && has_root(p[i], p[(i + 1) % 4]);
      tail = tail && has_root((p[i] + 1) % len, (p[(i + 1) % 4] + 1) % len);
    }
    return head || tail;
  };
  for (std::size_t i = 0; i < bridges.size(); ++i) {
    for (std::size_t j = 0; j < bridges.size(); ++j) {
      if (i == j) continue;
      const auto& fi = bridges[i].feet;
      const auto& fj = bridges[j].feet;
      for (std::size_t x = 0; x < fi.size(); ++x) {
        for (std::size_t y = x + 1; y < fi.size(); ++y) {
          const std::size_t a = fi[x];
          const std::size_t b = fi[y];
          auto in_j = std::find_if(fj.begin(), fj.end(), [&](std::size_t q) { return a < q && q < b; });
          auto out_j = std::find_if(fj.begin(), fj.end(), [&](std::size_t q) { return q > b; });
          if (in_j == fj.end() || out_j == fj.end()) continue;
          const std::array<std::size_t, 4> p{a, *in_j, b, *out_j};
          if (!rooted(p)) continue;
          const auto pa = bridge_path(g, c, bridges[i], a, b);
          const auto pb = bridge_path(g, c, bridges[j], *in_j, *out_j);
          if (pa.empty() || pb.empty()) continue;
          if (auto cert = crossing_chords(g, roots, c, p, pa, pb)) throw MinorFound(*cert);
        }
      }
    }
  }
}

}  // namespace

RootCycle find_root_cycle(const Instance& inst) {
  if (inst.root_count() < 3) throw Error(ErrorCode::kNotThreeConnected, "fewer than three roots");
  const Multigraph skel = skeleton(inst);
  if (skel.vertex_count() < 3 || !is_connected(skel) || find_cut_vertex(skel)) {
    throw Error(ErrorCode::kNotThreeConnected, "skeleton is not 2-connected");
  }
  const StarGraph star = build_star_graph(inst);
  const auto& roots = star.star_roots;
  const auto is_root = mask_of(star.graph.vertex_count(), roots);
  Cycle c = initial_cycle(branch_graph(inst, star));
  for (VertexId t : inst.terminals) {
    std::vector<VertexId> keep;
    for (VertexId x : c) {
      if (is_root[x]) keep.push_back(x);
    }
    c = absorb_vertex(star.graph, roots, c, t, keep);
  }
  for (VertexId s : star.subdivision) c = absorb_subdivision(star.graph, roots, c, s);
  reject_crossing_bridges(star.graph, roots, c);

  // Start at the smallest root for a canonical reading.
  auto first = std::min_element(c.begin(), c.end(), [&](VertexId a, VertexId b) {
    if (is_root[a] != is_root[b]) return is_root[a] > is_root[b];
    return a < b;
  });
  std::rotate(c.begin(), first, c.end());
  RootCycle rc;
  rc.position.assign(star.graph.vertex_count(), kNpos);
  for (VertexId x : c) {
    if (!is_root[x]) continue;
    rc.position[x] = rc.root_order.size();
    if (x < inst.vertex_count()) {
      rc.root_order.push_back({Root::Kind::Terminal, x});
    } else {
      rc.root_order.push_back({Root::Kind::Virtual, star.virtual_of[x]});
    }
  }
  rc.cycle_vertices = std::move(c);
  if (auto bad = check_root_cycle(inst, rc)) throw Error(ErrorCode::kPatternViolation, *bad);
  return rc;
}

std::optional<std::string> check_root_cycle(const Instance& inst, const RootCycle& rc) {
  const StarGraph star = build_star_graph(inst);
  const std::size_t n = star.graph.vertex_count();
  const auto& c = rc.cycle_vertices;
  if (c.size() < 3) return "cycle shorter than three vertices";
  std::vector<char> seen(n, 0);
  for (VertexId x : c) {
    if (x >= n) return "cycle vertex out of range";
    if (seen[x]) return "cycle repeats a vertex";
    seen[x] = 1;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    const VertexId a = c[i];
    const VertexId b = c[(i + 1) % c.size()];
    const auto inc = star.graph.incident(a);
    if (std::none_of(inc.begin(), inc.end(), [&](EdgeId e) { return star.graph.edge(e).other(a) == b; })) {
      return "consecutive cycle vertices not adjacent";
    }
  }
  for (VertexId r : star.star_roots) {
    if (!seen[r]) return "root missing from cycle";
  }
  if (rc.root_order.size() != star.star_roots.size()) return "root order has wrong length";
  std::size_t k = 0;
  for (VertexId x : c) {
    if (!std::binary_search(star.star_roots.begin(), star.star_roots.end(), x)) continue;
    const Root expected = x < inst.vertex_count() ? Root{Root::Kind::Terminal, x}
                                                   : Root{Root::Kind::Virtual, star.virtual_of[x]};
    if (!(rc.root_order[k] == expected)) return "root order disagrees with cycle";
    ++k;
  }
  return std::nullopt;
}

}  // namespace k4st
