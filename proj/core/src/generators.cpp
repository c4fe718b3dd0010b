#include "k4steiner/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "k4steiner/error.hpp"
#include "k4steiner/oracle.hpp"

namespace k4st {

namespace {

class Draw {
 public:
  Draw(std::uint64_t seed, WeightRange range) : rng_(seed), range_(range) {
    if (range.lo < 0 || range.hi < range.lo) throw Error(ErrorCode::kInvalidArgument, "bad weight range");
  }
  Weight weight() { return Weight(std::uniform_int_distribution<std::int64_t>(range_.lo, range_.hi)(rng_)); }
  std::size_t below(std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_); }
  std::vector<VertexId> sample(std::vector<VertexId> pool, std::size_t k) {
    std::shuffle(pool.begin(), pool.end(), rng_);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  }
  VirtualEdge virtual_edge(VertexId u, VertexId v) {
    VirtualEdge ve;
    ve.u = u;
    ve.v = v;
    ve.weight_u = weight();
    ve.weight_v = weight();
    ve.weight_connect = weight();
    const std::int64_t cap = std::min(ve.weight_u.value(), ve.weight_v.value());
    ve.weight_disconnect = Weight(std::uniform_int_distribution<std::int64_t>(std::min(range_.lo, cap), cap)(rng_));
    return ve;
  }

 private:
  std::mt19937_64 rng_;
  WeightRange range_;
};

std::vector<VertexId> iota_ids(std::size_t n) {
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  return ids;
}

}  // namespace

std::vector<VertexId> grid_boundary(std::size_t rows, std::size_t cols) {
  if (rows < 2 || cols < 2) throw Error(ErrorCode::kInvalidArgument, "grid needs at least 2 rows and 2 columns");
  auto id = [cols](std::size_t i, std::size_t j) { return static_cast<VertexId>(i * cols + j); };
  std::vector<VertexId> out;
  for (std::size_t j = 0; j < cols; ++j) out.push_back(id(0, j));
  for (std::size_t i = 1; i < rows; ++i) out.push_back(id(i, cols - 1));
  for (std::size_t j = cols - 1; j-- > 0;) out.push_back(id(rows - 1, j));
  for (std::size_t i = rows - 1; i-- > 1;) out.push_back(id(i, 0));
  return out;
}

Instance grid_one_face(std::size_t rows, std::size_t cols, std::size_t terminals, std::uint64_t seed,
                       WeightRange weights) {
  const auto boundary = grid_boundary(rows, cols);
  if (terminals > boundary.size()) throw Error(ErrorCode::kInvalidArgument, "more terminals than boundary vertices");
  Draw draw(seed, weights);
  Multigraph g(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto v = static_cast<VertexId>(i * cols + j);
      if (j + 1 < cols) g.add_edge(v, v + 1, draw.weight());
      if (i + 1 < rows) g.add_edge(v, static_cast<VertexId>(v + cols), draw.weight());
    }
  }
  std::vector<VertexId> terms;
  for (std::size_t i = 0; i < terminals; ++i) terms.push_back(boundary[i * boundary.size() / terminals]);
  std::sort(terms.begin(), terms.end());
  return Instance::from_parts(std::move(g), std::move(terms));
}

Instance figure1_right() {
  Multigraph g(5);
  for (VertexId u = 0; u < 5; ++u) {
    for (VertexId v = u + 1; v < 5; ++v) g.add_edge(u, v, Weight(1));
  }
  return Instance::from_parts(std::move(g), {0, 1, 2});
}

Instance k4_all_terminals() {
  Multigraph g(4);
  for (VertexId u = 0; u < 4; ++u) {
    for (VertexId v = u + 1; v < 4; ++v) g.add_edge(u, v, Weight(1));
  }
  return Instance::from_parts(std::move(g), {0, 1, 2, 3});
}

Instance random_connected(std::size_t n, std::size_t k, std::size_t virtual_count, std::uint64_t seed,
                          WeightRange weights) {
  if (n == 0 || k > n) throw Error(ErrorCode::kInvalidArgument, "need 0 < n and k <= n");
  if (virtual_count > 0 && n < 2) throw Error(ErrorCode::kInvalidArgument, "virtual edges need two vertices");
  Draw draw(seed, weights);
  Multigraph g(n);
  for (VertexId v = 1; v < n; ++v) g.add_edge(static_cast<VertexId>(draw.below(v)), v, draw.weight());
  const std::size_t extra = draw.below(n + 2);
  for (std::size_t i = 0; i < extra; ++i) {
    const auto a = static_cast<VertexId>(draw.below(n));
    const auto b = static_cast<VertexId>(draw.below(n));
    if (a != b) g.add_edge(a, b, draw.weight());
  }
  auto terms = draw.sample(iota_ids(n), k);
  std::vector<VirtualEdge> ves;
  while (ves.size() < virtual_count) {
    const auto a = static_cast<VertexId>(draw.below(n));
    const auto b = static_cast<VertexId>(draw.below(n));
    if (a != b) ves.push_back(draw.virtual_edge(a, b));
  }
  return Instance::from_parts(std::move(g), std::move(terms), std::move(ves));
}

Instance random_minor_free(std::size_t n, std::size_t k, std::size_t virtual_count, std::uint64_t seed,
                           WeightRange weights, std::size_t max_attempts) {
  std::mt19937_64 seeds(seed);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    Instance inst = random_connected(n, k, virtual_count, seeds(), weights);
    try {
      if (instance_is_minor_free(inst)) return inst;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kInstanceTooLarge) throw;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "no minor-free instance found within the attempt limit");
}

Instance stacked_wheel(std::size_t rim, std::size_t inner, std::size_t terminals, std::size_t virtual_count,
                       std::uint64_t seed, WeightRange weights) {
  if (rim < 3) throw Error(ErrorCode::kInvalidArgument, "wheel needs a rim of at least 3");
  if (terminals > rim || virtual_count > rim) throw Error(ErrorCode::kInvalidArgument, "too many rim roots");
  Draw draw(seed, weights);
  const auto hub = static_cast<VertexId>(rim);
  Multigraph g(rim + 1 + inner);

  const auto virtual_rim = draw.sample(iota_ids(rim), virtual_count);
  std::vector<VirtualEdge> ves;
  for (VertexId i = 0; i < rim; ++i) {
    const auto j = static_cast<VertexId>((i + 1) % rim);
    const bool is_virtual = std::binary_search(virtual_rim.begin(), virtual_rim.end(), i);
    if (is_virtual) ves.push_back(draw.virtual_edge(i, j));
    if (!is_virtual || draw.below(2) == 0) g.add_edge(i, j, draw.weight());
  }
  std::vector<std::array<VertexId, 3>> faces;
  for (VertexId i = 0; i < rim; ++i) {
    g.add_edge(i, hub, draw.weight());
    faces.push_back({i, static_cast<VertexId>((i + 1) % rim), hub});
  }
  for (std::size_t s = 0; s < inner; ++s) {
    const auto x = static_cast<VertexId>(rim + 1 + s);
    const std::size_t f = draw.below(faces.size());
    const auto face = faces[f];
    for (VertexId c : face) g.add_edge(x, c, draw.weight());
    faces[f] = {face[0], face[1], x};
    faces.push_back({face[1], face[2], x});
    faces.push_back({face[2], face[0], x});
  }
  auto terms = draw.sample(iota_ids(rim), terminals);
  return Instance::from_parts(std::move(g), std::move(terms), std::move(ves));
}

}  // namespace k4st
