#pragma once

#include <string>
#include <vector>

#include "k4steiner/instance.hpp"
#include "k4steiner/reduce.hpp"

namespace k4st {

/// Instances with at most this many roots go straight to the oracle.
inline constexpr std::size_t kRootThreshold = 4;

struct SolveStats {
  std::size_t recursion_nodes = 0;
  std::size_t base_cases = 0;
  std::size_t cut_vertex_splits = 0;
  std::size_t two_cut_splits = 0;
  std::size_t cycle_nodes = 0;
  std::size_t dp_entries = 0;
  std::size_t fallbacks = 0;
  std::vector<std::string> diagnostics;
};

struct SolveResult {
  Solution solution;  // in the ids of the instance passed to solve()
  SolveStats stats;
};

/// Full solve: preprocess, split at 1- and 2-cuts, cycle DP on 3-connected parts.
///
/// Throws Error(kInfeasible) when no solution exists (including roots spread
/// over several components) and MinorFound when the cycle construction
/// exposes a rooted K4-minor.
SolveResult solve(const Instance& inst);

/// One recursion step on an already derived instance; the result is in
/// user-instance terms. Infinite cost when infeasible.
Realized solve_recursive(const Instance& inst, SolveStats& stats);

}  // namespace k4st
