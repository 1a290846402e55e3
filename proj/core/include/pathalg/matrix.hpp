#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pathalg/scalar.hpp"

namespace pathalg {

/// Dense square matrix over a `Ring`.
class Matrix {
 public:
  Matrix(Ring ring, std::size_t n);

  static Matrix identity(Ring ring, std::size_t n);
  /// The matrix unit E_{i,j} (0-based).
  static Matrix unit(Ring ring, std::size_t n, std::size_t i, std::size_t j);

  const Ring& ring() const { return ring_; }
  std::size_t size() const { return n_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& r, const Matrix& a);

  bool operator==(const Matrix&) const = default;

  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t n_;
  std::vector<Scalar> entries_;
};

inline bool is_zero(const Matrix& m) { return m.is_zero(); }

}  // namespace pathalg
