#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pathalg/groupoid.hpp"
#include "pathalg/scalar.hpp"

namespace pathalg {

using GraphPtr = std::shared_ptr<const Graph>;

struct SteinbergTerm {
  Scalar coeff;
  BisectionAtom atom;
};

/// An element of the Steinberg algebra A_R(G_E): a finite R-linear
/// combination of indicator functions of bisection atoms.
///
/// The term list is a representation, not a canonical form. Every operation
/// below returns a normalized element: pairwise disjoint nonempty atoms with
/// nonzero coefficients, sorted by (degree, |alpha|, alpha, beta, F). Two
/// elements are equal as functions iff their difference normalizes to the
/// empty list.
class SteinbergElement {
 public:
  SteinbergElement(GraphPtr graph, Ring ring) : graph_(std::move(graph)), ring_(ring) {}

  /// coeff * 1_atom (not normalized).
  static SteinbergElement indicator(GraphPtr graph, const BisectionAtom& atom, Scalar coeff);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const Ring& ring() const { return ring_; }
  const std::vector<SteinbergTerm>& terms() const { return terms_; }

  /// Appends a raw term; throws `DomainError` on ring mismatch.
  void add_term(Scalar coeff, BisectionAtom atom);

  /// Zero test via normalization.
  bool is_zero() const;

 private:
  GraphPtr graph_;
  Ring ring_;
  std::vector<SteinbergTerm> terms_;
};

SteinbergElement normalize(const SteinbergElement& f);
Scalar evaluate(const SteinbergElement& f, const GroupoidElement& x);
SteinbergElement convolve(const SteinbergElement& f, const SteinbergElement& g);
SteinbergElement add(const SteinbergElement& f, const SteinbergElement& g);
SteinbergElement scale(const Scalar& r, const SteinbergElement& f);
SteinbergElement involution(const SteinbergElement& f);
SteinbergElement degree_component(const SteinbergElement& f, std::int64_t n);
/// Degrees with a nonzero component, ascending.
std::vector<std::int64_t> degrees(const SteinbergElement& f);
/// Sum of 1_{Z(v)} over `vertices`; throws `DomainError` if empty.
SteinbergElement local_unit(GraphPtr graph, Ring ring, const std::vector<VertexId>& vertices);
/// Vertices s(alpha), s(beta) touched by the terms of f.
std::vector<VertexId> support_vertices(const SteinbergElement& f);
bool equals(const SteinbergElement& f, const SteinbergElement& g);

inline SteinbergElement operator+(const SteinbergElement& f, const SteinbergElement& g) {
  return add(f, g);
}
inline SteinbergElement operator-(const SteinbergElement& f, const SteinbergElement& g) {
  return add(f, scale(-Scalar::one(g.ring()), g));
}
inline SteinbergElement operator*(const SteinbergElement& f, const SteinbergElement& g) {
  return convolve(f, g);
}
inline SteinbergElement operator*(const Scalar& r, const SteinbergElement& f) {
  return scale(r, f);
}
inline bool is_zero(const SteinbergElement& f) { return f.is_zero(); }

/// Witness that a nonzero homogeneous h is not in any proper ideal's kernel:
/// 1_C * h * 1_V = r 1_V with V a unit-space atom and r nonzero.
struct SteinbergReduction {
  BisectionAtom c;
  BisectionAtom v;
  Scalar r;
};

/// Throws `DomainError` ("zero element", "not homogeneous").
SteinbergReduction reduce_homogeneous(const SteinbergElement& h);

/// `r*Z(alpha|beta\{F})` terms joined by ` + ` (` - ` for negative rationals
/// and integers); `0` for the zero element.
std::string to_string(const SteinbergElement& f);

}  // namespace pathalg
