#include "pathalg/matrix.hpp"

#include "pathalg/error.hpp"

namespace pathalg {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (!(a.ring() == b.ring()) || a.size() != b.size()) {
    throw DomainError("matrix shape or ring mismatch");
  }
}

}  // namespace

Matrix::Matrix(Ring ring, std::size_t n)
    : ring_(ring), n_(n), entries_(n * n, Scalar::zero(ring)) {}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix m(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = Scalar::one(ring);
  }
  return m;
}

Matrix Matrix::unit(Ring ring, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(ring, n);
  m(i, j) = Scalar::one(ring);
  return m;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : entries_) {
    if (!s.is_zero()) {
      return false;
    }
  }
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) {
    out.entries_[k] += b.entries_[k];
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  return a + (-Scalar::one(b.ring())) * b;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  const std::size_t n = a.n_;
  Matrix out(a.ring_, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!b(k, j).is_zero()) {
          out(i, j) += aik * b(k, j);
        }
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& r, const Matrix& a) {
  Matrix out = a;
  for (Scalar& s : out.entries_) {
    s = r * s;
  }
  return out;
}

std::string Matrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    out += "[";
    for (std::size_t j = 0; j < n_; ++j) {
      out += (j ? " " : "") + (*this)(i, j).to_string();
    }
    out += "]\n";
  }
  return out;
}

}  // namespace pathalg
