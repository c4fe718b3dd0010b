#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "k4steiner/graph.hpp"
#include "k4steiner/weight.hpp"

namespace k4st {

using VirtualIndex = std::uint32_t;

enum class VeStatus : std::uint8_t { EndU = 0, EndV = 1, Connect = 2, Disconnect = 3 };

inline constexpr std::array<VeStatus, 4> kAllStatuses = {VeStatus::EndU, VeStatus::EndV,
                                                         VeStatus::Connect, VeStatus::Disconnect};

std::string_view to_string(VeStatus s);

/// A piece of a solution expressed in the ids of the user's instance.
///
/// Virtual edges of derived instances stand for regions that were cut
/// away; each one keeps, per status, the part of the original graph that
/// realizes it. Expanding a solution concatenates these pieces.
struct Realization {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::vector<VirtualIndex> connected;  // user virtual edges taken with status Connect

  void append(const Realization& other);
};

struct VirtualEdge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  Weight weight_u;
  Weight weight_v;
  Weight weight_connect;
  Weight weight_disconnect;
  std::array<Realization, 4> expand;

  Weight weight(VeStatus s) const noexcept;
  Weight& weight(VeStatus s) noexcept;
  Weight& weight_at(VertexId x);
  Weight weight_at(VertexId x) const;
  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
  bool joins(VertexId a, VertexId b) const noexcept {
    return (u == a && v == b) || (u == b && v == a);
  }
  /// Status meaning "only x is covered".
  VeStatus end_at(VertexId x) const noexcept { return x == u ? VeStatus::EndU : VeStatus::EndV; }
};

/// Virtual Edge Steiner Tree instance.
///
/// `origin_vertex` and `edge_origin` map the instance back to the user's
/// instance it was derived from; for a user instance they are identities.
struct Instance {
  Multigraph graph;
  std::vector<VertexId> terminals;  // sorted, unique
  std::vector<VirtualEdge> virtual_edges;
  std::vector<VertexId> origin_vertex;
  std::vector<std::vector<EdgeId>> edge_origin;

  /// Builds a user instance: identity origins, one-piece realizations.
  static Instance from_parts(Multigraph graph, std::vector<VertexId> terminals,
                             std::vector<VirtualEdge> virtual_edges = {});

  std::size_t vertex_count() const noexcept { return graph.vertex_count(); }
  std::size_t root_count() const noexcept { return terminals.size() + virtual_edges.size(); }
  bool is_terminal(VertexId v) const;
  /// Adds a real edge together with its origin list.
  EdgeId add_edge(VertexId u, VertexId v, Weight w, std::vector<EdgeId> origin);
};

struct Root {
  enum class Kind : std::uint8_t { Terminal, Virtual };
  Kind kind = Kind::Terminal;
  std::uint32_t index = 0;  // vertex id for terminals, virtual index otherwise

  friend bool operator==(const Root&, const Root&) = default;
};

std::vector<Root> roots_of(const Instance& inst);

/// Per-vertex mask of "terminal or endpoint of a virtual edge".
std::vector<char> root_incident_mask(const Instance& inst);

struct Solution {
  std::vector<VertexId> vertices;             // V(S), sorted
  std::vector<EdgeId> edges;                  // real edges, sorted
  std::vector<VirtualIndex> virtual_edges;    // virtual edges in S, sorted
  std::vector<VeStatus> statuses;             // one per virtual edge of the instance
  Weight cost = Weight::infinity();
};

/// Status of a virtual edge given membership in S and the covered vertices.
/// Throws Error(kNeitherEndpointCovered).
VeStatus status_of(const VirtualEdge& e, bool in_solution, std::span<const char> covered);

/// Eq. (1) recomputed from sol.vertices, sol.edges and sol.virtual_edges.
/// Throws Error(kInfeasible) if a terminal or a virtual edge is uncovered.
Weight evaluate_cost(const Instance& inst, const Solution& sol);

/// Full consistency check; returns the first violated clause or nullopt.
std::optional<std::string> validate_solution(const Instance& inst, const Solution& sol);

/// Spanning tree over the given pieces (Connect virtual edges first, then
/// real edges by weight), with statuses and cost recomputed.
/// Throws Error(kInconsistentTrace) if the pieces are not connected.
Solution canonicalize(const Instance& inst, std::vector<VertexId> vertices,
                      std::vector<EdgeId> edges, std::vector<VirtualIndex> connected);

/// Expresses a solution of `inst` in terms of the user's instance.
Realization realize(const Instance& inst, const Solution& sol);

/// Drops terminals incident with virtual edges, setting the far weights to
/// infinity. Idempotent.
Instance normalize(Instance inst);

struct StarGraph {
  Multigraph graph;                      // real edges keep their ids
  std::vector<VertexId> subdivision;     // per virtual edge
  std::vector<VertexId> star_roots;      // terminals and subdivision vertices, sorted
  std::vector<VirtualIndex> virtual_of;  // per G* vertex, owning virtual edge or -1
};

StarGraph build_star_graph(const Instance& inst);

/// Sub-instance on `keep`; real and virtual edges with both ends kept.
struct Induced {
  Instance instance;
  std::vector<VertexId> local;   // parent id -> local id or kNoVertex
  std::vector<VertexId> parent;  // local id -> parent id
};

Induced induce(const Instance& inst, std::span<const VertexId> keep);

/// Removes x from play: its real edges go, every virtual edge at x may
/// only be used with x uncovered, and x is dropped when nothing remains.
Instance forbid_vertex(const Instance& inst, VertexId x);

/// Simple skeleton of (V, E u E*) as a graph with unit weights.
Multigraph skeleton(const Instance& inst);

}  // namespace k4st
