#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pathalg/steinberg.hpp"

namespace pathalg {

/// mu nu^* with r(mu) = r(nu).
struct Monomial {
  Path mu;
  Path nu;

  /// Throws `DomainError` unless r(mu) = r(nu).
  static Monomial make(Path mu, Path nu);
  static Monomial vertex(VertexId v) { return {Path::vertex(v), Path::vertex(v)}; }

  std::int64_t degree() const {
    return static_cast<std::int64_t>(mu.length()) - static_cast<std::int64_t>(nu.length());
  }

  bool operator==(const Monomial&) const = default;
  /// By total length, then mu, then nu.
  std::strong_ordering operator<=>(const Monomial& other) const;
};

/// An element of the Leavitt path algebra L_R(E), stored as a combination of
/// monomials with equal monomials merged and zero coefficients dropped.
///
/// The representation is not unique because of (CK2); use `is_zero` or
/// `equals` to compare, or `normal_form` for the basis expansion.
class LeavittElement {
 public:
  LeavittElement(GraphPtr graph, Ring ring) : graph_(std::move(graph)), ring_(ring) {}

  static LeavittElement monomial(GraphPtr graph, Monomial m, Scalar coeff);
  static LeavittElement vertex(GraphPtr graph, Ring ring, VertexId v);
  static LeavittElement edge(GraphPtr graph, Ring ring, EdgeId e);
  static LeavittElement ghost(GraphPtr graph, Ring ring, EdgeId e);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const Ring& ring() const { return ring_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const Scalar& coeff, const Monomial& m);

 private:
  GraphPtr graph_;
  Ring ring_;
  std::map<Monomial, Scalar> terms_;
};

LeavittElement add(const LeavittElement& x, const LeavittElement& y);
LeavittElement scale(const Scalar& r, const LeavittElement& x);
/// Bilinear extension of the monomial product rule; no (CK2) rewriting.
LeavittElement multiply(const LeavittElement& x, const LeavittElement& y);
LeavittElement involution(const LeavittElement& x);
LeavittElement degree_component(const LeavittElement& x, std::int64_t n);
std::vector<std::int64_t> degrees(const LeavittElement& x);

/// The special edge at a (CK2) vertex: its first out-edge in edge order.
EdgeId special_edge(const Graph& g, VertexId v);
/// True iff mu and nu both end in the special edge of their last edge's source.
bool is_reducible(const Graph& g, const Monomial& m);
/// Rewrites with v = sum_e e e^* oriented at the special edges until every
/// monomial is irreducible.
LeavittElement normal_form(const LeavittElement& x);

/// Image under the graded isomorphism L_R(E) -> A_R(G_E), normalized.
SteinbergElement to_steinberg(const LeavittElement& x);
/// Inverse isomorphism: c 1_{Z(mu,nu,F)} -> c (mu nu^* - sum_{e in F} mu e e^* nu^*).
LeavittElement from_steinberg(const SteinbergElement& f);

/// Zero test through the Steinberg model, cross-checked against the emptiness
/// of `normal_form`. Disagreement throws `std::logic_error`.
bool is_zero(const LeavittElement& x);
bool equals(const LeavittElement& x, const LeavittElement& y);

/// Sum of the vertices s(mu), s(nu) over the terms of x.
std::vector<VertexId> support_vertices(const LeavittElement& x);
LeavittElement vertex_sum(GraphPtr graph, Ring ring, const std::vector<VertexId>& vertices);

inline LeavittElement operator+(const LeavittElement& x, const LeavittElement& y) {
  return add(x, y);
}
inline LeavittElement operator-(const LeavittElement& x, const LeavittElement& y) {
  return add(x, scale(-Scalar::one(y.ring()), y));
}
inline LeavittElement operator*(const LeavittElement& x, const LeavittElement& y) {
  return multiply(x, y);
}
inline LeavittElement operator*(const Scalar& r, const LeavittElement& x) { return scale(r, x); }

/// alpha^* x beta = s r(alpha) with s nonzero.
struct DegreeZeroReduction {
  Path alpha;
  Path beta;
  Scalar s;
};

/// Follows the inductive proof that nonzero degree-0 elements reduce to a
/// nonzero multiple of a vertex. Throws `DomainError` with "zero input",
/// "degree nonzero", or "insufficient truncation at singular vertex v".
DegreeZeroReduction reduce_degree_zero(const LeavittElement& x);

/// Irreducible monomials mu nu^* with |mu|, |nu| <= max_len (unbounded on an
/// acyclic graph; throws `DomainError` for unbounded on a cyclic graph).
std::vector<Monomial> irreducible_monomials(const Graph& g,
                                            std::optional<std::size_t> max_len = std::nullopt);

/// `2 e f* - v`: coefficient then factors; `*` marks ghost edges.
std::string to_string(const Graph& g, const Monomial& m);
std::string to_string(const LeavittElement& x);

}  // namespace pathalg
