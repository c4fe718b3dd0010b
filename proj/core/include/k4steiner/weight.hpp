#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>

namespace k4st {

/// Exact nonnegative integer weight with a +infinity sentinel.
///
/// Addition saturates at infinity; infinity compares greater than every
/// finite value. Finite arithmetic never rounds.
class Weight {
 public:
  using Rep = std::int64_t;

  constexpr Weight() noexcept = default;
  constexpr explicit Weight(Rep value) noexcept : value_(value < 0 ? 0 : value) {}

  static constexpr Weight infinity() noexcept {
    Weight w;
    w.value_ = kInfRep;
    return w;
  }
  static constexpr Weight zero() noexcept { return Weight{}; }

  constexpr bool is_finite() const noexcept { return value_ != kInfRep; }
  constexpr bool is_infinite() const noexcept { return value_ == kInfRep; }

  /// Raw magnitude; equals the sentinel for infinity.
  constexpr Rep value() const noexcept { return value_; }

  friend constexpr Weight operator+(Weight a, Weight b) noexcept {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    Rep sum = 0;
    if (__builtin_add_overflow(a.value_, b.value_, &sum) || sum >= kInfRep) return infinity();
    Weight w;
    w.value_ = sum;
    return w;
  }
  constexpr Weight& operator+=(Weight other) noexcept { return *this = *this + other; }

  friend constexpr auto operator<=>(Weight, Weight) noexcept = default;
  friend constexpr bool operator==(Weight, Weight) noexcept = default;

  std::string to_string() const;

 private:
  static constexpr Rep kInfRep = std::numeric_limits<Rep>::max();
  Rep value_ = 0;
};

std::ostream& operator<<(std::ostream& os, Weight w);

inline Weight min(Weight a, Weight b) noexcept { return b < a ? b : a; }

/// `total - minus_a - minus_b + plus` where `total` is finite and already
/// contains both subtracted terms. Used when two partial solutions that each
/// paid for a shared virtual edge are merged into one.
Weight rebalance(Weight total, Weight minus_a, Weight minus_b, Weight plus);

}  // namespace k4st
