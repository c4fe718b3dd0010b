#include "k4steiner/interval_dp.hpp"

#include <array>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

#include "k4steiner/error.hpp"

namespace k4st {

namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

struct TablePair {
  std::uint8_t first;
  std::uint8_t second;
};

constexpr std::array<TablePair, 1> kPlainPairs = {{{0, 0}}};
constexpr std::array<TablePair, 2> kRootPairs = {{{0, 1}, {1, 0}}};

std::span<const TablePair> pairs_at(bool root_incident) {
  if (root_incident) return kRootPairs;
  return kPlainPairs;
}

}  // namespace

IntervalDp::IntervalDp(const Instance& inst, const RootCycle& rc)
    : inst_(inst), k_(rc.root_order.size()), n_(inst.vertex_count()), roots_(rc.root_order) {
  if (k_ < 5) throw Error(ErrorCode::kInvalidArgument, "interval DP needs at least five roots");
  ns_.resize(k_);
  incident_.assign(n_, 0);
  vroots_at_.resize(n_);
  terminal_root_.assign(n_, kNpos);
  for (std::size_t r = 0; r < k_; ++r) {
    if (roots_[r].kind == Root::Kind::Terminal) {
      ns_[r] = 1;
      incident_[roots_[r].index] = 1;
      terminal_root_[roots_[r].index] = r;
    } else {
      ns_[r] = 4;
      const auto& ve = inst_.virtual_edges.at(roots_[r].index);
      incident_[ve.u] = 1;
      incident_[ve.v] = 1;
      vroots_at_[ve.u].push_back(r);
      vroots_at_[ve.v].push_back(r);
    }
  }
  for (VertexId v = 0; v < n_; ++v) {
    if (terminal_root_[v] != kNpos && !vroots_at_[v].empty()) {
      throw Error(ErrorCode::kInvalidArgument, "interval DP expects a normalized instance");
    }
    if (vroots_at_[v].size() > 2) {
      throw Error(ErrorCode::kInvalidArgument, "vertex with more than two virtual edges on the cycle");
    }
  }

  offset_.assign(k_ * (k_ + 1), 0);
  std::size_t total = 0;
  for (std::size_t a = 0; a < k_; ++a) {
    for (std::size_t len = 1; len <= k_; ++len) {
      offset_[a * (k_ + 1) + len] = total;
      const std::size_t nsb = len == 1 ? 1 : ns_[end_of(a, len)];
      total += n_ * ns_[a] * nsb;
    }
  }
  if (total >= std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kInstanceTooLarge, "interval DP table too large");
  }
  dp_.assign(total, Weight::infinity());
  ext_.assign(total, Weight::infinity());
  dback_.assign(total, Back{});
  eback_.assign(total, Back{});
}

std::size_t IntervalDp::index(std::size_t a, std::size_t len, VertexId v, StatusIndex sa,
                              StatusIndex sb) const {
  const std::size_t nsa = ns_[a];
  if (len == 1) return offset_[a * (k_ + 1) + 1] + static_cast<std::size_t>(v) * nsa + sa;
  const std::size_t nsb = ns_[end_of(a, len)];
  return offset_[a * (k_ + 1) + len] + (static_cast<std::size_t>(v) * nsa + sa) * nsb + sb;
}

int IntervalDp::level(std::size_t a, std::size_t len, StatusIndex sa, StatusIndex sb) const {
  int l = (is_virtual(a) && sa >= 2) ? 1 : 0;
  if (len > 1 && is_virtual(end_of(a, len)) && sb >= 2) ++l;
  return l;
}

bool IntervalDp::is_virtual(std::size_t root) const {
  return roots_[root].kind == Root::Kind::Virtual;
}

const VirtualEdge& IntervalDp::virtual_of(std::size_t root) const {
  return inst_.virtual_edges[roots_[root].index];
}

Weight IntervalDp::status_weight(std::size_t root, StatusIndex s) const {
  if (!is_virtual(root)) return Weight::zero();
  return virtual_of(root).weight(static_cast<VeStatus>(s));
}

StatusIndex IntervalDp::at_status(std::size_t root, VertexId x) const {
  return static_cast<StatusIndex>(virtual_of(root).end_at(x));
}

Weight IntervalDp::entry(std::size_t a, std::size_t len, VertexId v, StatusIndex sa,
                         StatusIndex sb) const {
  if (a >= k_ || len == 0 || len > k_ || v >= n_ || sa >= ns_[a]) {
    throw Error(ErrorCode::kInvalidArgument, "DP entry out of range");
  }
  if (len == 1) sb = sa;
  if (sb >= ns_[end_of(a, len)]) throw Error(ErrorCode::kInvalidArgument, "DP entry out of range");
  return dp_[index(a, len, v, sa, sb)];
}

bool IntervalDp::improve(std::size_t idx, Weight cand, Back back) {
  if (!(cand < dp_[idx])) return false;
  dp_[idx] = cand;
  dback_[idx] = back;
  return true;
}

void IntervalDp::seed_base_cases() {
  seeded_ = true;
  for (VertexId v = 0; v < n_; ++v) {
    const Back seed{Back::kSeed, 0, 0, 0, v};
    if (terminal_root_[v] != kNpos) {
      improve(index(terminal_root_[v], 1, v, 0, 0), Weight::zero(), seed);
      continue;
    }
    const auto& vr = vroots_at_[v];
    if (vr.size() == 1) {
      const StatusIndex s = at_status(vr[0], v);
      improve(index(vr[0], 1, v, s, s), Weight::zero(), seed);
    } else if (vr.size() == 2) {
      std::size_t a = kNpos;
      if ((vr[0] + 1) % k_ == vr[1]) a = vr[0];
      else if ((vr[1] + 1) % k_ == vr[0]) a = vr[1];
      if (a == kNpos) continue;
      const std::size_t b = (a + 1) % k_;
      improve(index(a, 2, v, at_status(a, v), at_status(b, v)), Weight::zero(), seed);
    }
  }
}

void IntervalDp::cross_disjoint(std::size_t a, std::size_t len, std::size_t l1) {
  const std::size_t l2 = len - l1;
  const std::size_t a2 = (a + l1) % k_;
  const std::size_t b = end_of(a, len);
  const std::size_t b1 = end_of(a, l1);
  for (VertexId v = 0; v < n_; ++v) {
    for (const TablePair& tp : pairs_at(incident_[v] != 0)) {
      const auto& t1 = table(static_cast<Table>(tp.first));
      const auto& t2 = table(static_cast<Table>(tp.second));
      std::array<Weight, 4> left;
      std::array<std::uint32_t, 4> left_at{};
      left.fill(Weight::infinity());
      for (StatusIndex sa = 0; sa < ns_[a]; ++sa) {
        const std::size_t inner = l1 == 1 ? 1 : ns_[b1];
        for (StatusIndex s = 0; s < inner; ++s) {
          const std::size_t i = index(a, l1, v, sa, l1 == 1 ? sa : s);
          const Weight c = l1 == 1 ? t1[i] : t1[i] + status_weight(b1, s);
          if (c < left[sa]) {
            left[sa] = c;
            left_at[sa] = static_cast<std::uint32_t>(i);
          }
        }
      }
      std::array<Weight, 4> right;
      std::array<std::uint32_t, 4> right_at{};
      right.fill(Weight::infinity());
      for (StatusIndex sb = 0; sb < ns_[b]; ++sb) {
        const std::size_t inner = l2 == 1 ? 1 : ns_[a2];
        for (StatusIndex s = 0; s < inner; ++s) {
          const std::size_t i = l2 == 1 ? index(a2, 1, v, sb, sb) : index(a2, l2, v, s, sb);
          const Weight c = l2 == 1 ? t2[i] : t2[i] + status_weight(a2, s);
          if (c < right[sb]) {
            right[sb] = c;
            right_at[sb] = static_cast<std::uint32_t>(i);
          }
        }
      }
      const std::uint8_t mask = static_cast<std::uint8_t>(tp.first | (tp.second << 1));
      for (StatusIndex sa = 0; sa < ns_[a]; ++sa) {
        if (left[sa].is_infinite()) continue;
        for (StatusIndex sb = 0; sb < ns_[b]; ++sb) {
          if (right[sb].is_infinite()) continue;
          improve(index(a, len, v, sa, sb), left[sa] + right[sb],
                  Back{Back::kGlue, mask, left_at[sa], right_at[sb], 0});
        }
      }
    }
  }
}

void IntervalDp::cross_shared(std::size_t a, std::size_t len, std::size_t l1) {
  const std::size_t m = end_of(a, l1);
  if (!is_virtual(m)) return;
  const std::size_t l2 = len - l1 + 1;
  const std::size_t b = end_of(a, len);
  const VirtualEdge& ve = virtual_of(m);
  const auto vidx = roots_[m].index;
  for (int o = 0; o < 2; ++o) {
    const VertexId x = o == 0 ? ve.u : ve.v;
    const VertexId xp = ve.other(x);
    const StatusIndex sx = at_status(m, x);
    const StatusIndex sxp = at_status(m, xp);

    auto combine = [&](VertexId v1, VertexId v2, Table t1, Table t2, Weight plus, Back::Tag tag,
                       std::initializer_list<VertexId> targets) {
      const auto& x1 = table(t1);
      const auto& x2 = table(t2);
      const std::uint8_t mask = static_cast<std::uint8_t>(t1 | (t2 << 1));
      for (StatusIndex sa = 0; sa < ns_[a]; ++sa) {
        const std::size_t i1 = index(a, l1, v1, sa, sx);
        if (x1[i1].is_infinite()) continue;
        for (StatusIndex sb = 0; sb < ns_[b]; ++sb) {
          const std::size_t i2 = index(m, l2, v2, sxp, sb);
          const Weight cand = x1[i1] + x2[i2] + plus;
          if (cand.is_infinite()) continue;
          const Back back{tag, mask, static_cast<std::uint32_t>(i1), static_cast<std::uint32_t>(i2),
                          tag == Back::kConnect ? vidx : 0};
          for (VertexId t : targets) improve(index(a, len, t, sa, sb), cand, back);
        }
      }
    };

    for (VertexId v = 0; v < n_; ++v) {
      for (const TablePair& tp : pairs_at(incident_[v] != 0)) {
        combine(v, v, static_cast<Table>(tp.first), static_cast<Table>(tp.second),
                ve.weight_disconnect, Back::kGlue, {v});
      }
    }
    combine(x, xp, kDp, kDp, ve.weight_connect, Back::kConnect, {x, xp});
  }
}

void IntervalDp::same_interval(std::size_t a, std::size_t len, int lvl) {
  const std::size_t b = end_of(a, len);
  constexpr StatusIndex kC = static_cast<StatusIndex>(VeStatus::Connect);
  constexpr StatusIndex kD = static_cast<StatusIndex>(VeStatus::Disconnect);

  // Joins a part on `outer` (with status s_outer on its far boundary, or the
  // same root when len == 1) with a single-root part on `shared`.
  auto join = [&](std::size_t shared, bool shared_is_b) {
    if (!is_virtual(shared)) return;
    const VirtualEdge& ve = virtual_of(shared);
    const auto vidx = roots_[shared].index;
    const std::size_t far = shared_is_b ? a : b;
    const std::size_t far_count = len == 1 ? 1 : ns_[far];
    for (int o = 0; o < 2; ++o) {
      const VertexId x = o == 0 ? ve.u : ve.v;
      const VertexId xp = ve.other(x);
      const StatusIndex sx = at_status(shared, x);
      const StatusIndex sxp = at_status(shared, xp);
      for (StatusIndex sf = 0; sf < far_count; ++sf) {
        if (len > 1 && (is_virtual(far) && sf >= 2 ? 1 : 0) != lvl - 1) continue;
        // Index of the long part with status `s` on the shared root.
        auto long_index = [&](VertexId v, StatusIndex s) {
          if (len == 1) return index(a, 1, v, s, s);
          return shared_is_b ? index(a, len, v, sf, s) : index(a, len, v, s, sf);
        };
        auto result_index = [&](VertexId v, StatusIndex s) {
          if (len == 1) return index(a, 1, v, s, s);
          return shared_is_b ? index(a, len, v, sf, s) : index(a, len, v, s, sf);
        };
        auto run = [&](VertexId v1, VertexId v2, Table t1, Table t2, Back::Tag tag,
                       StatusIndex result, std::initializer_list<VertexId> targets) {
          const std::size_t i1 = long_index(v1, sx);
          const std::size_t i2 = index(shared, 1, v2, sxp, sxp);
          const Weight cand = table(t1)[i1] + table(t2)[i2];
          if (cand.is_infinite()) return;
          const std::uint8_t mask = static_cast<std::uint8_t>(t1 | (t2 << 1));
          const Back back{tag, mask, static_cast<std::uint32_t>(i1), static_cast<std::uint32_t>(i2),
                          tag == Back::kConnect ? vidx : 0};
          for (VertexId t : targets) improve(result_index(t, result), cand, back);
        };
        for (VertexId v = 0; v < n_; ++v) {
          for (const TablePair& tp : pairs_at(incident_[v] != 0)) {
            run(v, v, static_cast<Table>(tp.first), static_cast<Table>(tp.second), Back::kGlue, kD, {v});
          }
        }
        run(x, xp, kDp, kDp, Back::kConnect, kC, {x, xp});
      }
    }
  };

  if (len == 1) {
    if (lvl == 1) join(a, true);
    return;
  }
  join(b, true);
  join(a, false);
}

void IntervalDp::extend(std::size_t a, std::size_t len, StatusIndex sa, StatusIndex sb) {
  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (VertexId v = 0; v < n_; ++v) {
    const Weight d = dp_[index(a, len, v, sa, sb)];
    if (d.is_finite()) queue.emplace(d, v);
  }
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    const std::size_t iu = index(a, len, u, sa, sb);
    if (d != dp_[iu]) continue;
    for (EdgeId e : inst_.graph.incident(u)) {
      const Edge& edge = inst_.graph.edge(e);
      const VertexId w = edge.other(u);
      if (incident_[w]) continue;
      const Weight cand = d + edge.weight;
      if (improve(index(a, len, w, sa, sb), cand,
                  Back{Back::kEdge, 0, static_cast<std::uint32_t>(iu), 0, e})) {
        queue.emplace(cand, w);
      }
    }
  }
}

void IntervalDp::fill_ext(std::size_t a, std::size_t len, StatusIndex sa, StatusIndex sb) {
  const auto edges = inst_.graph.edges();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    for (int dir = 0; dir < 2; ++dir) {
      const VertexId u = dir == 0 ? edges[e].u : edges[e].v;
      const VertexId w = edges[e].other(u);
      if (!incident_[w]) continue;
      const std::size_t iu = index(a, len, u, sa, sb);
      const Weight cand = dp_[iu] + edges[e].weight;
      const std::size_t iw = index(a, len, w, sa, sb);
      if (cand < ext_[iw]) {
        ext_[iw] = cand;
        eback_[iw] = Back{Back::kEdge, 0, static_cast<std::uint32_t>(iu), 0, e};
      }
    }
  }
}

void IntervalDp::process(std::size_t a, std::size_t len) {
  for (std::size_t l1 = 1; l1 < len; ++l1) cross_disjoint(a, len, l1);
  for (std::size_t l1 = 2; l1 < len; ++l1) cross_shared(a, len, l1);
  const std::size_t b = end_of(a, len);
  const std::size_t sb_count = len == 1 ? 1 : ns_[b];
  for (int lvl = 0; lvl <= 2; ++lvl) {
    if (lvl > 0) same_interval(a, len, lvl);
    for (StatusIndex sa = 0; sa < ns_[a]; ++sa) {
      for (StatusIndex s = 0; s < sb_count; ++s) {
        const StatusIndex sb = len == 1 ? sa : s;
        if (level(a, len, sa, sb) != lvl) continue;
        extend(a, len, sa, sb);
        fill_ext(a, len, sa, sb);
      }
    }
  }
}

void IntervalDp::finish() {
  best_ = Weight::infinity();
  best_back_ = Back{};
  auto offer = [&](Weight cand, Back back) {
    if (cand < best_) {
      best_ = cand;
      best_back_ = back;
    }
  };
  for (std::size_t a = 0; a < k_; ++a) {
    const std::size_t b = end_of(a, k_);
    for (VertexId v = 0; v < n_; ++v) {
      for (StatusIndex sa = 0; sa < ns_[a]; ++sa) {
        for (StatusIndex sb = 0; sb < ns_[b]; ++sb) {
          const std::size_t i = index(a, k_, v, sa, sb);
          offer(dp_[i] + status_weight(a, sa) + status_weight(b, sb), Back{Back::kEntry, 0, static_cast<std::uint32_t>(i), 0, 0});
        }
      }
    }
  }

  // Two parts covering the circle and sharing both boundary roots.
  for (std::size_t a1 = 0; a1 < k_; ++a1) {
    if (!is_virtual(a1)) continue;
    const VirtualEdge& ea = virtual_of(a1);
    for (std::size_t l1 = 2; l1 <= k_; ++l1) {
      const std::size_t b1 = end_of(a1, l1);
      if (!is_virtual(b1)) continue;
      const std::size_t l2 = k_ + 2 - l1;
      const VirtualEdge& eb = virtual_of(b1);
      for (int oa = 0; oa < 2; ++oa) {
        const VertexId x = oa == 0 ? ea.u : ea.v;
        const VertexId xp = ea.other(x);
        const StatusIndex sx = at_status(a1, x);
        const StatusIndex sxp = at_status(a1, xp);
        for (int ob = 0; ob < 2; ++ob) {
          const VertexId y = ob == 0 ? eb.u : eb.v;
          const VertexId yp = eb.other(y);
          const StatusIndex sy = at_status(b1, y);
          const StatusIndex syp = at_status(b1, yp);
          auto run = [&](VertexId v1, VertexId v2, Table t1, Table t2, Weight plus_a, Weight plus_b,
                         Back::Tag tag, std::uint32_t vidx) {
            const std::size_t i1 = index(a1, l1, v1, sx, sy);
            const std::size_t i2 = index(b1, l2, v2, syp, sxp);
            const Weight cand = table(t1)[i1] + table(t2)[i2] + plus_a + plus_b;
            const std::uint8_t mask = static_cast<std::uint8_t>(t1 | (t2 << 1));
            offer(cand, Back{tag, mask, static_cast<std::uint32_t>(i1), static_cast<std::uint32_t>(i2), vidx});
          };
          for (VertexId v = 0; v < n_; ++v) {
            for (const TablePair& tp : pairs_at(incident_[v] != 0)) {
              run(v, v, static_cast<Table>(tp.first), static_cast<Table>(tp.second), ea.weight_disconnect,
                  eb.weight_disconnect, Back::kGlue, 0);
            }
          }
          run(x, xp, kDp, kDp, ea.weight_connect, eb.weight_disconnect, Back::kConnect, roots_[a1].index);
          run(y, yp, kDp, kDp, ea.weight_disconnect, eb.weight_connect, Back::kConnect, roots_[b1].index);
        }
      }
    }
  }
}

void IntervalDp::run() {
  if (!seeded_) seed_base_cases();
  for (std::size_t len = 1; len <= k_; ++len) {
    for (std::size_t a = 0; a < k_; ++a) process(a, len);
  }
  finish();
}

Solution IntervalDp::solution() const {
  if (best_.is_infinite()) throw Error(ErrorCode::kInfeasible, "no solution on the root cycle");
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::vector<VirtualIndex> connected;
  std::vector<std::pair<Table, std::uint32_t>> stack;
  auto push_ops = [&](const Back& bk) {
    stack.emplace_back((bk.ext_mask & 1) ? kExt : kDp, bk.op1);
    stack.emplace_back((bk.ext_mask & 2) ? kExt : kDp, bk.op2);
  };
  switch (best_back_.tag) {
    case Back::kEntry:
      stack.emplace_back(kDp, best_back_.op1);
      break;
    case Back::kGlue:
      push_ops(best_back_);
      break;
    case Back::kConnect:
      push_ops(best_back_);
      connected.push_back(best_back_.extra);
      break;
    default:
      throw Error(ErrorCode::kInconsistentTrace, "optimum has no witness");
  }
  while (!stack.empty()) {
    const auto [t, i] = stack.back();
    stack.pop_back();
    const Back& bk = t == kDp ? dback_[i] : eback_[i];
    switch (bk.tag) {
      case Back::kSeed:
        vertices.push_back(bk.extra);
        break;
      case Back::kEdge:
        edges.push_back(bk.extra);
        stack.emplace_back(kDp, bk.op1);
        break;
      case Back::kGlue:
        push_ops(bk);
        break;
      case Back::kConnect:
        push_ops(bk);
        connected.push_back(bk.extra);
        break;
      default:
        throw Error(ErrorCode::kInconsistentTrace, "DP entry without witness");
    }
  }
  Solution sol = canonicalize(inst_, std::move(vertices), std::move(edges), std::move(connected));
  if (sol.cost > best_) throw Error(ErrorCode::kInconsistentTrace, "reconstructed tree costs more than the DP value");
  return sol;
}

DpStats IntervalDp::stats() const {
  DpStats s;
  s.entries = dp_.size();
  for (Weight w : dp_) {
    if (w.is_finite()) ++s.finite_entries;
  }
  return s;
}

Solution solve_on_cycle(const Instance& inst, const RootCycle& rc, DpStats* stats) {
  IntervalDp dp(inst, rc);
  dp.run();
  if (stats != nullptr) *stats = dp.stats();
  return dp.solution();
}

}  // namespace k4st
