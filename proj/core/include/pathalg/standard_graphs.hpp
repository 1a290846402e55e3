#pragma once

#include <cstddef>

#include "pathalg/graph.hpp"

namespace pathalg {

/// One vertex `v` with loops `e`, `f`, then `e3`, `e4`, ...
Graph rose(std::size_t petals);

/// `u` with a loop `e` and an edge `f: u -> v`.
Graph toeplitz();

/// v1 -> v2 -> ... -> vn along edges e1, ..., e(n-1).
Graph line(std::size_t n);

}  // namespace pathalg
