#pragma once

// Concrete target algebras for E-family checks.

#include <cstdint>
#include <optional>

#include "pathalg/efamily.hpp"
#include "pathalg/matrix.hpp"

namespace pathalg::testing {

/// a_{v_i} = E_{ii}, b_{e_j} = E_{j,j+1}, c_{e_j} = E_{j+1,j} for `line(n)`.
inline EFamily<Matrix> matrix_unit_family(std::size_t n, const Ring& ring) {
  EFamily<Matrix> fam;
  for (std::size_t i = 0; i < n; ++i) {
    fam.vertices.push_back(Matrix::unit(ring, n, i, i));
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    fam.edges.push_back(Matrix::unit(ring, n, j, j + 1));
    fam.ghosts.push_back(Matrix::unit(ring, n, j + 1, j));
  }
  return fam;
}

/// deg E_{ij} = j - i.
inline std::optional<std::int64_t> matrix_degree(const Matrix& m) {
  std::optional<std::int64_t> d;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m(i, j).is_zero()) {
        continue;
      }
      const std::int64_t here = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i);
      if (d && *d != here) {
        return std::nullopt;
      }
      d = here;
    }
  }
  return d;
}

}  // namespace pathalg::testing
