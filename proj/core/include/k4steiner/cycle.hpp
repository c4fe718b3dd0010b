#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "k4steiner/graph.hpp"
#include "k4steiner/instance.hpp"

namespace k4st {

using Cycle = std::vector<VertexId>;

/// Cyclic order of the roots along a cycle of G*.
struct RootCycle {
  Cycle cycle_vertices;            // in G*
  std::vector<Root> root_order;    // r_1..r_k as met along the cycle
  std::vector<std::size_t> position;  // per G* vertex: index in root_order or npos
};

/// Fundamental cycle of the first non-tree edge met by a DFS from vertex 0.
/// Parallel edges are ignored. Throws Error(kAcyclic).
Cycle initial_cycle(const Multigraph& g_star);

/// Reroutes `c` through `target` keeping every protected vertex of `c`.
///
/// `roots` are the roots of g_star, used for certificates. When `partner`
/// is given it is the other endpoint of the virtual edge whose subdivision
/// vertex `partner_sub` is adjacent to target; if the only obstruction is an
/// arc holding `partner`, the cycle detours through partner_sub instead.
/// Uses three disjoint paths from target to `c` when they exist, otherwise
/// two. Throws MinorFound with a verified certificate when every arc between
/// three attachment points is protected, Error(kNotThreeConnected) when
/// fewer than two paths exist or both arcs between two attachment points are
/// protected, and Error(kPatternViolation) when no certificate could be
/// verified.
Cycle absorb_vertex(const Multigraph& g_star, std::span<const VertexId> roots, const Cycle& c,
                    VertexId target, std::span<const VertexId> protected_vertices,
                    VertexId partner = kNoVertex, VertexId partner_sub = kNoVertex);

/// Puts the degree-2 subdivision vertex s on the cycle, keeping every root
/// already on it. Errors as for absorb_vertex.
Cycle absorb_subdivision(const Multigraph& g_star, std::span<const VertexId> roots, const Cycle& c,
                         VertexId s);

/// A cycle of G* through every terminal and subdivision vertex.
/// Throws Error(kNotThreeConnected) when the skeleton is not 2-connected,
/// has fewer than 3 roots, or a root cannot be routed onto the cycle;
/// MinorFound when construction is blocked or two bridges of the final
/// cycle cross between roots; and Error(kPatternViolation) when
/// construction fails without a certificate.
RootCycle find_root_cycle(const Instance& inst);

/// Structural check of a root cycle against the instance.
std::optional<std::string> check_root_cycle(const Instance& inst, const RootCycle& rc);

}  // namespace k4st
