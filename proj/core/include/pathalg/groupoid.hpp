#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathalg/pathspace.hpp"

namespace pathalg {

/// The set of lags {base + m * period : m in Z} (just {base} when period = 0).
struct LagSet {
  std::int64_t base = 0;
  std::int64_t period = 0;

  bool contains(std::int64_t k) const;
  bool operator==(const LagSet&) const = default;
};

/// Tail equivalence of two boundary paths; nullopt if not equivalent.
/// For lassos the base is reduced into [0, period).
std::optional<LagSet> tail_equivalent(const Graph& g, const BoundaryPath& x, const BoundaryPath& y);

/// A morphism (x, k, y) of the boundary path groupoid: domain y, codomain x.
class GroupoidElement {
 public:
  /// Throws `DomainError` unless x ~_k y.
  static GroupoidElement make(const Graph& g, BoundaryPath x, std::int64_t k, BoundaryPath y);
  static GroupoidElement unit(BoundaryPath x) { return GroupoidElement(x, 0, x); }

  const BoundaryPath& x() const noexcept { return x_; }
  std::int64_t lag() const noexcept { return k_; }
  const BoundaryPath& y() const noexcept { return y_; }

  bool is_unit() const { return k_ == 0 && x_ == y_; }
  GroupoidElement inverse() const { return GroupoidElement(y_, -k_, x_); }

  bool operator==(const GroupoidElement&) const = default;
  auto operator<=>(const GroupoidElement&) const = default;

 private:
  friend std::optional<GroupoidElement> compose(const GroupoidElement& a,
                                                const GroupoidElement& b);
  friend std::optional<GroupoidElement> isotropy_generator(const BoundaryPath& p);

  GroupoidElement(BoundaryPath x, std::int64_t k, BoundaryPath y)
      : x_(std::move(x)), k_(k), y_(std::move(y)) {}

  BoundaryPath x_;
  std::int64_t k_;
  BoundaryPath y_;
};

/// (x, k, y)(y, l, z) = (x, k + l, z); nullopt when not composable.
std::optional<GroupoidElement> compose(const GroupoidElement& a, const GroupoidElement& b);

/// The generator (p, |eps|, p) of the isotropy group at a lasso with primitive
/// cycle eps; nullopt (trivial isotropy) for finite boundary paths.
std::optional<GroupoidElement> isotropy_generator(const BoundaryPath& p);

/// The compact open bisection
/// Z(alpha, beta, F) = Z(alpha, beta) \ U_{e in F} Z(alpha e, beta e).
struct BisectionAtom {
  Path alpha;
  Path beta;
  /// Sorted, duplicate-free; every edge has source r(alpha).
  std::vector<EdgeId> excluded;

  /// Validates r(alpha) = r(beta) and the excluded edges.
  static BisectionAtom make(const Graph& g, Path alpha, Path beta,
                            std::vector<EdgeId> excluded = {});
  static BisectionAtom unit(VertexId v) { return {Path::vertex(v), Path::vertex(v), {}}; }

  std::int64_t degree() const {
    return static_cast<std::int64_t>(alpha.length()) - static_cast<std::int64_t>(beta.length());
  }
  bool is_unit_space() const { return alpha == beta; }

  /// The cylinder Z(alpha, F): the set of codomains.
  CylinderAtom range_cylinder() const { return {alpha, excluded}; }
  /// The cylinder Z(beta, F): the set of domains.
  CylinderAtom source_cylinder() const { return {beta, excluded}; }

  bool operator==(const BisectionAtom&) const = default;
};

/// (|alpha|, alpha, beta, F).
bool atom_less(const BisectionAtom& a, const BisectionAtom& b);

bool atom_is_empty(const Graph& g, const BisectionAtom& a);
bool atom_contains(const Graph& g, const BisectionAtom& a, const GroupoidElement& x);
/// The set product AB.
std::optional<BisectionAtom> atom_mul(const Graph& g, const BisectionAtom& a,
                                      const BisectionAtom& b);
BisectionAtom atom_inverse(const BisectionAtom& a);
std::optional<BisectionAtom> atom_intersect(const Graph& g, const BisectionAtom& a,
                                            const BisectionAtom& b);
/// Pairwise disjoint nonempty atoms whose union is A \ B, sorted by `atom_less`.
std::vector<BisectionAtom> atom_difference(const Graph& g, const BisectionAtom& a,
                                           const BisectionAtom& b);
/// Set equality, decided by two differences.
bool atom_set_equal(const Graph& g, const BisectionAtom& a, const BisectionAtom& b);

/// The unique element of `a` with codomain `x`, if any.
std::optional<GroupoidElement> atom_element_at_range(const Graph& g, const BisectionAtom& a,
                                                     const BoundaryPath& x);

/// nullopt when the groupoid is effective; otherwise Z(cc, c) for an exitless
/// cycle c, a nonempty open set of non-unit isotropy.
std::optional<BisectionAtom> effectiveness_witness(const Graph& g);

/// `Z(alpha|beta)` or `Z(alpha|beta\{F})`, comma-separated edge lists.
std::string to_string(const Graph& g, const BisectionAtom& a);
std::string to_string(const Graph& g, const GroupoidElement& x);

}  // namespace pathalg
