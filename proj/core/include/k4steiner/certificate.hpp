#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "k4steiner/error.hpp"
#include "k4steiner/graph.hpp"

namespace k4st {

/// Four disjoint connected branch sets, each holding a root, pairwise
/// joined by an edge: a rooted K4-minor.
struct K4Certificate {
  std::array<std::vector<VertexId>, 4> branch_sets;
  std::array<VertexId, 4> root_witnesses{};
  std::array<std::pair<VertexId, VertexId>, 6> cross_edges{};  // pairs 01,02,03,12,13,23
};

/// Independent checker; returns the first violated clause or nullopt.
std::optional<std::string> check_certificate(const Multigraph& g, std::span<const VertexId> roots,
                                             const K4Certificate& cert);

/// Fills root witnesses and cross edges from branch sets alone; returns
/// nullopt when the sets do not form a rooted K4-minor.
std::optional<K4Certificate> certificate_from_branch_sets(
    const Multigraph& g, std::span<const VertexId> roots,
    std::array<std::vector<VertexId>, 4> branch_sets);

/// Cycle plus two crossing chords: v1..v4 appear on `cycle` in this cyclic order, p1
/// joins v1 and v3, p2 joins v2 and v4, and the paths are disjoint from each
/// other and internally disjoint from the cycle.
/// Throws Error(kPatternViolation) when these preconditions fail.
K4Certificate certificate_from_cycle_and_paths(std::span<const VertexId> cycle,
                                               std::array<VertexId, 4> v,
                                               std::span<const VertexId> p1,
                                               std::span<const VertexId> p2);

/// Raised when an instance turns out to contain a rooted K4-minor.
class MinorFound : public Error {
 public:
  explicit MinorFound(K4Certificate cert)
      : Error(ErrorCode::kMinorFound, "instance contains a rooted K4-minor"),
        certificate_(std::move(cert)) {}

  const K4Certificate& certificate() const noexcept { return certificate_; }

 private:
  K4Certificate certificate_;
};

}  // namespace k4st
