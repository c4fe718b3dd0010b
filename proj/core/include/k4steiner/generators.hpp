#pragma once

#include <cstdint>
#include <vector>

#include "k4steiner/instance.hpp"

namespace k4st {

/// Inclusive range for integer edge and status weights.
struct WeightRange {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
};

/// Boundary of an r x c grid, clockwise from the top-left corner.
/// Vertex (i, j) has id i * cols + j.
std::vector<VertexId> grid_boundary(std::size_t rows, std::size_t cols);

/// r x c grid with `terminals` evenly spaced along the boundary cycle,
/// starting at the top-left corner. All roots lie on the outer face.
Instance grid_one_face(std::size_t rows, std::size_t cols, std::size_t terminals, std::uint64_t seed,
                       WeightRange weights = {});

/// K5 on a, b, c, x1, x2 (ids 0..4) with terminals a, b, c and unit weights.
Instance figure1_right();

/// K4 with every vertex a terminal and unit weights.
Instance k4_all_terminals();

/// Random connected multigraph: a random tree plus up to n + 1 extra
/// edges, k distinct terminals, and `virtual_count` virtual edges with
/// w(d) <= min(w(u), w(v)).
Instance random_connected(std::size_t n, std::size_t k, std::size_t virtual_count, std::uint64_t seed,
                          WeightRange weights = {0, 8});

/// random_connected() resampled until instance_is_minor_free() holds.
/// Throws Error(kInvalidArgument) after `max_attempts` rejections.
Instance random_minor_free(std::size_t n, std::size_t k, std::size_t virtual_count, std::uint64_t seed,
                           WeightRange weights = {0, 8}, std::size_t max_attempts = 10000);

/// Wheel with `rim` outer vertices whose inner triangles receive `inner`
/// stacked vertices. The result is 3-connected and planar with every root
/// on the rim, so it has no rooted K4-minor. Virtual edges sit on rim
/// edges; each one keeps its parallel real edge with probability 1/2.
Instance stacked_wheel(std::size_t rim, std::size_t inner, std::size_t terminals, std::size_t virtual_count,
                       std::uint64_t seed, WeightRange weights = {1, 9});

}  // namespace k4st
