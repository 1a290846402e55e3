#include "pathalg/scalar.hpp"

#include "pathalg/error.hpp"

namespace pathalg {

namespace {

mpz_class to_mpz(std::uint64_t n) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return z;
}

void require_same_ring(const Scalar& a, const Scalar& b) {
  if (!(a.ring() == b.ring())) {
    throw DomainError("ring mismatch: " + a.ring().name() + " vs " +
                      b.ring().name());
  }
}

}  // namespace

Ring Ring::integers_mod(std::uint64_t n) {
  if (n < 2) {
    throw DomainError("integers mod n require n >= 2");
  }
  return Ring(Kind::integers_mod, n);
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::integers:
      return "Z";
    case Kind::rationals:
      return "Q";
    case Kind::integers_mod:
      return "Z/" + std::to_string(modulus_);
  }
  return "?";
}

Scalar::Scalar(Ring ring, long value) : ring_(ring), value_(value) {
  reduce();
}

Scalar::Scalar(Ring ring, const mpq_class& value) : ring_(ring), value_(value) {
  value_.canonicalize();
  reduce();
}

void Scalar::reduce() {
  switch (ring_.kind()) {
    case Ring::Kind::rationals:
      return;
    case Ring::Kind::integers:
      if (value_.get_den() != 1) {
        throw DomainError(value_.get_str() + " is not an integer");
      }
      return;
    case Ring::Kind::integers_mod: {
      const mpz_class n = to_mpz(ring_.modulus());
      mpz_class num = value_.get_num();
      mpz_class den = value_.get_den();
      if (den != 1) {
        mpz_class inverse;
        if (mpz_invert(inverse.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t()) == 0) {
          throw DomainError(value_.get_str() + " has a denominator that is not invertible mod " +
                            n.get_str());
        }
        num *= inverse;
      }
      mpz_class residue;
      mpz_mod(residue.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
      value_ = mpq_class(residue);
      return;
    }
  }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  Scalar s(a.ring_, mpq_class(a.value_ + b.value_), true);
  s.reduce();
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  Scalar s(a.ring_, mpq_class(a.value_ - b.value_), true);
  s.reduce();
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  Scalar s(a.ring_, mpq_class(a.value_ * b.value_), true);
  s.reduce();
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(ring_, mpq_class(-value_), true);
  s.reduce();
  return s;
}

std::string Scalar::to_string() const { return value_.get_str(); }

Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }

}  // namespace pathalg
