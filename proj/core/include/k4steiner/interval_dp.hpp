#pragma once

#include <cstdint>
#include <vector>

#include "k4steiner/cycle.hpp"
#include "k4steiner/instance.hpp"

namespace k4st {

/// Boundary status index of a root: 0 for terminals (Unit); the VeStatus
/// value for virtual roots.
using StatusIndex = std::uint8_t;

struct DpStats {
  std::size_t entries = 0;
  std::size_t finite_entries = 0;
};

/// Table DP[a, len, v, s_a, s_b] over intervals of the root cycle.
///
/// An entry is the cheapest tree T containing v whose touched roots are
/// exactly r_a..r_{a+len-1}, with the given statuses on the two boundary
/// roots. Its cost counts real edges plus the status weights of the
/// interior roots; boundary roots are charged once they become interior
/// or when the circle is closed.
class IntervalDp {
 public:
  IntervalDp(const Instance& inst, const RootCycle& rc);

  /// Single-vertex trees: terminals, and endpoints of one or two
  /// consecutive virtual edges.
  void seed_base_cases();
  /// Fills every interval by increasing length, then the full circle.
  void run();

  Weight entry(std::size_t a, std::size_t len, VertexId v, StatusIndex sa, StatusIndex sb) const;
  Weight optimum() const { return best_; }
  /// Witness of the optimum; throws Error(kInfeasible) if it is infinite.
  Solution solution() const;
  DpStats stats() const;

  std::size_t root_count() const noexcept { return k_; }

 private:
  struct Back {
    enum Tag : std::uint8_t { kNone, kSeed, kEdge, kGlue, kConnect, kEntry } tag = kNone;
    std::uint8_t ext_mask = 0;  // bit 0: op1 lives in Ext, bit 1: op2 lives in Ext
    std::uint32_t op1 = 0;
    std::uint32_t op2 = 0;
    std::uint32_t extra = 0;  // vertex for seeds, edge id, or virtual index
  };
  enum Table : std::uint8_t { kDp = 0, kExt = 1 };

  std::size_t status_count(std::size_t root) const { return ns_[root]; }
  std::size_t end_of(std::size_t a, std::size_t len) const { return (a + len - 1) % k_; }
  std::size_t index(std::size_t a, std::size_t len, VertexId v, StatusIndex sa, StatusIndex sb) const;
  int level(std::size_t a, std::size_t len, StatusIndex sa, StatusIndex sb) const;
  bool is_virtual(std::size_t root) const;
  const VirtualEdge& virtual_of(std::size_t root) const;
  StatusIndex at_status(std::size_t root, VertexId x) const;
  Weight status_weight(std::size_t root, StatusIndex s) const;
  const std::vector<Weight>& table(Table t) const { return t == kDp ? dp_ : ext_; }
  bool improve(std::size_t idx, Weight cand, Back back);

  void process(std::size_t a, std::size_t len);
  void cross_disjoint(std::size_t a, std::size_t len, std::size_t l1);
  void cross_shared(std::size_t a, std::size_t len, std::size_t l1);
  void same_interval(std::size_t a, std::size_t len, int level);
  void extend(std::size_t a, std::size_t len, StatusIndex sa, StatusIndex sb);
  void fill_ext(std::size_t a, std::size_t len, StatusIndex sa, StatusIndex sb);
  void finish();

  const Instance& inst_;
  std::size_t k_ = 0;
  std::size_t n_ = 0;
  std::vector<Root> roots_;
  std::vector<std::uint8_t> ns_;
  std::vector<char> incident_;
  std::vector<std::vector<std::size_t>> vroots_at_;
  std::vector<std::size_t> terminal_root_;
  std::vector<std::size_t> offset_;
  std::vector<Weight> dp_;
  std::vector<Weight> ext_;
  std::vector<Back> dback_;
  std::vector<Back> eback_;
  Weight best_ = Weight::infinity();
  Back best_back_;
  bool seeded_ = false;
};

/// Optimal solution of a normalized instance whose roots (at least five)
/// lie on `rc`. Throws Error(kInfeasible) when no solution exists.
Solution solve_on_cycle(const Instance& inst, const RootCycle& rc, DpStats* stats = nullptr);

}  // namespace k4st
