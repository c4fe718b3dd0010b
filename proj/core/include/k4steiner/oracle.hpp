#pragma once

#include <optional>
#include <span>
#include <vector>

#include "k4steiner/certificate.hpp"
#include "k4steiner/graph.hpp"
#include "k4steiner/instance.hpp"

namespace k4st {

struct SteinerTree {
  Weight cost;
  std::vector<EdgeId> edges;       // sorted
  std::vector<VertexId> vertices;  // sorted; the lone terminal for k = 1
};

inline constexpr std::size_t kDreyfusWagnerTerminalCap = 14;
inline constexpr std::size_t kReductionVirtualCap = 12;
inline constexpr std::size_t kRootedK4VertexCap = 14;

/// Exact minimum Steiner tree by the subset DP.
/// Throws Error(kUnreachable) when the terminals are not in one component
/// and Error(kInstanceTooLarge) above `terminal_cap`.
SteinerTree dreyfus_wagner(const Multigraph& g, std::span<const VertexId> terminals,
                           std::size_t terminal_cap = kDreyfusWagnerTerminalCap);

/// Exact VEST optimum by trying all 4^l status assignments.
/// Throws Error(kTooManyVirtualEdges) above `virtual_cap` and
/// Error(kInfeasible) when no assignment admits a solution.
Solution solve_vest_by_reduction(const Instance& inst,
                                 std::size_t virtual_cap = kReductionVirtualCap);

/// Exhaustive search for a `roots`-rooted K4-minor. Non-root vertices of
/// degree at most two are suppressed first; the cap applies to what is left.
/// Throws Error(kInstanceTooLarge) above `vertex_cap`.
std::optional<K4Certificate> has_rooted_k4(const Multigraph& g, std::span<const VertexId> roots,
                                           std::size_t vertex_cap = kRootedK4VertexCap);

/// True iff G* has no R*-rooted K4-minor.
bool instance_is_minor_free(const Instance& inst, std::size_t vertex_cap = kRootedK4VertexCap);

}  // namespace k4st
