#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "k4steiner/instance.hpp"

namespace k4st::testing {

struct E {
  VertexId u;
  VertexId v;
  std::int64_t w = 1;
};

Multigraph make_graph(std::size_t n, std::initializer_list<E> edges);
Multigraph make_graph(std::size_t n, const std::vector<E>& edges);

VirtualEdge make_virtual(VertexId u, VertexId v, std::int64_t wu, std::int64_t wv, std::int64_t wc,
                         std::int64_t wd);

Instance make_instance(std::size_t n, std::initializer_list<E> edges, std::vector<VertexId> terminals,
                       std::vector<VirtualEdge> virtual_edges = {});

Multigraph complete_graph(std::size_t n);
Multigraph cycle_graph(std::size_t n);
/// Hub 0, rim 1..n.
Multigraph wheel_graph(std::size_t rim);
/// Unit grid, vertex (i, j) = i * cols + j.
Multigraph grid_graph(std::size_t rows, std::size_t cols);

/// Triangle on a, b, c (ids 0..2) inside K5 with apices 3, 4; terminals
/// a, b, c.
Instance fix_tri();

/// Two stacked wheels glued on rim vertices 0 and 1. Virtual edges of `b`
/// lose their realizations.
Instance glue_on_rim(const Instance& a, const Instance& b);

}  // namespace k4st::testing
