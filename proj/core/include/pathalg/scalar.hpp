#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace pathalg {

/// Coefficient ring: the integers, the rationals, or Z/nZ for n >= 2.
///
/// Every ring is commutative and unital. The ring involution is the identity;
/// `Scalar::conjugate` is the single hook through which it is applied.
class Ring {
 public:
  enum class Kind { integers, rationals, integers_mod };

  static Ring integers() { return Ring(Kind::integers, 0); }
  static Ring rationals() { return Ring(Kind::rationals, 0); }
  static Ring integers_mod(std::uint64_t n);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  /// "Z", "Q" or "Z/n".
  std::string name() const;

  bool operator==(const Ring&) const = default;

 private:
  Ring(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;
};

/// An exact element of a `Ring`.
///
/// Rationals are kept in lowest terms with a positive denominator, integers
/// have denominator 1, and residues live in [0, n). Mixing rings in one
/// operation throws `DomainError`.
class Scalar {
 public:
  Scalar(Ring ring, long value);
  /// Throws `DomainError` if `value` does not denote an element of `ring`
  /// (a proper fraction over Z, or a denominator not invertible mod n).
  Scalar(Ring ring, const mpq_class& value);

  static Scalar zero(Ring ring) { return Scalar(ring, 0); }
  static Scalar one(Ring ring) { return Scalar(ring, 1); }

  const Ring& ring() const noexcept { return ring_; }
  const mpq_class& value() const noexcept { return value_; }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  Scalar conjugate() const { return *this; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  bool operator==(const Scalar& other) const {
    return ring_ == other.ring_ && value_ == other.value_;
  }

  /// "5/6", "-3", or a residue such as "1".
  std::string to_string() const;

 private:
  Scalar(Ring ring, mpq_class value, bool) : ring_(ring), value_(std::move(value)) {}
  void reduce();

  Ring ring_;
  mpq_class value_;
};

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);

}  // namespace pathalg
