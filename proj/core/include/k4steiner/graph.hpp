#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "k4steiner/weight.hpp"

namespace k4st {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

struct Edge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  Weight weight;

  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
  bool joins(VertexId a, VertexId b) const noexcept {
    return (u == a && v == b) || (u == b && v == a);
  }
};

/// Weighted undirected multigraph without self-loops.
///
/// Vertices are 0..n-1. Every edge has a stable EdgeId (its insertion index)
/// and appears in exactly the adjacency lists of its two endpoints.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  VertexId add_vertex();
  /// Throws Error(kInvalidArgument) for self-loops or unknown endpoints.
  EdgeId add_edge(VertexId u, VertexId v, Weight weight);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const { return adjacency_.at(v); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adjacency_;
};

/// A 1- or 2-vertex separator with the two sides it splits the graph into.
struct VertexCut {
  std::vector<VertexId> vertices;
  std::vector<VertexId> side_a;
  std::vector<VertexId> side_b;
};

/// Parts sorted by smallest member; members sorted ascending.
std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);

/// Components of g minus `removed` (removed vertices belong to no part).
std::vector<std::vector<VertexId>> components_without(const Multigraph& g,
                                                      std::span<const VertexId> removed);

bool is_connected(const Multigraph& g);

/// Smallest-id cut vertex; side_a is the component holding the smallest
/// remaining vertex id, side_b the union of the others.
std::optional<VertexCut> find_cut_vertex(const Multigraph& g);

/// Lexicographically first 2-vertex cut {u,v}; side_a is the smallest
/// component of g - {u,v}, side_b everything else.
std::optional<VertexCut> find_two_cut(const Multigraph& g);

struct ShortestPathTree {
  std::vector<Weight> distance;
  std::vector<EdgeId> parent_edge;  // kNoEdge at the source and at unreachable vertices
};

/// Dijkstra from `source`. When `allowed` is non-empty only vertices with
/// allowed[v] set are entered.
ShortestPathTree shortest_paths(const Multigraph& g, VertexId source,
                                std::span<const char> allowed = {});

Weight shortest_path_distance(const Multigraph& g, VertexId u, VertexId v);

/// Edge ids along the tree path from the source to `target` (empty when
/// target is the source or unreachable).
std::vector<EdgeId> path_edges(const Multigraph& g, const ShortestPathTree& tree, VertexId target);

using VertexPath = std::vector<VertexId>;

/// `count` paths from r to `targets`, pairwise sharing only r, each meeting
/// `targets` only in its last vertex. Found by unit vertex-capacity
/// augmenting paths; std::nullopt when fewer exist. Paths are ordered by
/// their endpoint id.
std::optional<std::vector<VertexPath>> disjoint_paths_to_set(const Multigraph& g, VertexId r,
                                                             std::span<const VertexId> targets,
                                                             std::size_t count = 3);

}  // namespace k4st
