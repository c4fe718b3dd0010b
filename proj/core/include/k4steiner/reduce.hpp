#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>

#include "k4steiner/instance.hpp"

namespace k4st {

/// Keeps one minimum-weight real edge per vertex pair (ties: smallest id).
Instance prune_parallel_real(const Instance& inst);

/// Combines two virtual edges on the same endpoint pair.
VirtualEdge merge_parallel_virtual(const VirtualEdge& e1, const VirtualEdge& e2);

/// Absorbs a real edge parallel to a virtual edge: w(c) = min(w(c), w(d) + w_e).
VirtualEdge fold_real_into_virtual(const Edge& e, std::span<const EdgeId> origin,
                                   const VirtualEdge& e_star);

/// Edge pruning to fixpoint: no parallel real/real, virtual/virtual or
/// real/virtual pairs remain.
Instance prune_edges(const Instance& inst);

/// Deletes components without roots, then every rootless component hanging
/// off a cut vertex, until none is left.
Instance prune_rootless_1cut(const Instance& inst);

/// Replaces one rootless component behind a 2-cut {u,v} by an edge uv of
/// weight dist over G[A + {u,v}]. Returns nullopt when no such component.
std::optional<Instance> prune_rootless_2cut(const Instance& inst);

/// Folds one component behind a 2-cut that touches exactly one root into a
/// new virtual edge uv. Returns nullopt when no such component.
std::optional<Instance> fold_single_root_2cut(const Instance& inst);

/// Optimum of a sub-instance in user-instance terms; infinite cost when
/// infeasible.
struct Realized {
  Weight cost = Weight::infinity();
  Realization parts;
};

using SideSolver = std::function<Realized(const Instance&)>;

/// Realized optimum from the exhaustive status-assignment oracle.
Realized solve_by_oracle(const Instance& inst);

/// The four sub-instances of a 2-cut side, in VeStatus order: u only
/// (v forbidden), v only (u forbidden), both as terminals, and both as
/// terminals joined by a free edge. `side` holds u, v and A; real and
/// virtual uv edges are left out. Terminals of the result are those of
/// `side` other than u and v, plus the case's own.
std::array<Instance, 4> side_cases(const Instance& side, VertexId u, VertexId v);

/// Virtual edge uv summarizing a 2-cut side by solving its four cases.
/// Throws Error(kInvalidArgument) when no root touches the side beyond u, v.
VirtualEdge summarize_side(const Instance& side, VertexId u, VertexId v, const SideSolver& solve);

struct PreprocessStats {
  std::size_t rounds = 0;
  std::size_t rootless_1cut = 0;
  std::size_t rootless_2cut = 0;
  std::size_t folds = 0;
};

/// Steps 1-4 to fixpoint, returning to edge pruning after every change.
Instance preprocess(const Instance& inst, PreprocessStats* stats = nullptr);

}  // namespace k4st
