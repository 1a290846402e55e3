#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pathalg/graph.hpp"

namespace pathalg {

/// A point of the boundary path space: either a finite path ending at a
/// vertex outside the (CK2) set, or an eventually periodic infinite path
/// mu eps eps eps ... (a lasso).
///
/// Lassos are kept canonical: the cycle is primitive and the prefix is as
/// short as possible (a prefix ending in the cycle's last edge is rolled into
/// the cycle). Equality of canonical forms is equality of points.
class BoundaryPath {
 public:
  /// Throws `DomainError` if r(p) is in the (CK2) set.
  static BoundaryPath finite(const Graph& g, Path p);
  /// Throws `DomainError` unless `cycle` is a closed path of positive length
  /// starting at r(prefix).
  static BoundaryPath lasso(const Graph& g, Path prefix, Path cycle);

  bool is_finite() const noexcept { return !cycle_.has_value(); }
  bool is_lasso() const noexcept { return cycle_.has_value(); }

  /// The whole path if finite, the prefix if a lasso.
  const Path& prefix() const noexcept { return prefix_; }
  /// Lasso only.
  const Path& cycle() const { return *cycle_; }

  VertexId source() const noexcept { return prefix_.source(); }

  /// Number of edges, or nullopt for a lasso.
  std::optional<std::size_t> length() const;

  /// The i-th edge (0-based); nullopt past the end of a finite path.
  std::optional<EdgeId> edge_at(std::size_t i) const;

  /// True iff `p` is an initial subpath.
  bool starts_with(const Path& p) const;

  /// sigma^n; throws `DomainError` when shifting past the end of a finite path.
  BoundaryPath shift(const Graph& g, std::size_t n = 1) const;

  /// alpha x; requires r(alpha) = s(x).
  BoundaryPath prepend(const Graph& g, const Path& alpha) const;

  bool operator==(const BoundaryPath&) const = default;
  std::strong_ordering operator<=>(const BoundaryPath& other) const;

 private:
  BoundaryPath(Path prefix, std::optional<Path> cycle)
      : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {}

  void canonicalize(const Graph& g);

  Path prefix_;
  std::optional<Path> cycle_;
};

/// Z(alpha, F): boundary paths extending alpha whose next edge avoids F.
struct CylinderAtom {
  Path alpha;
  /// Sorted, duplicate-free, every edge with source r(alpha).
  std::vector<EdgeId> excluded;

  static CylinderAtom make(const Graph& g, Path alpha, std::vector<EdgeId> excluded = {});

  bool operator==(const CylinderAtom&) const = default;
};

/// Membership of a boundary path in Z(alpha, F).
bool cyl_contains(const CylinderAtom& z, const BoundaryPath& x);
/// Empty iff r(alpha) is in the (CK2) set and F = r(alpha)E1.
bool cyl_is_empty(const Graph& g, const CylinderAtom& z);
/// Intersection of two cylinders; nullopt if empty.
std::optional<CylinderAtom> cyl_intersect(const Graph& g, const CylinderAtom& a,
                                          const CylinderAtom& b);

/// Every finite boundary path of length <= depth and every canonical lasso with
/// |prefix| + |cycle| <= depth, ordered by total length then shortlex.
std::vector<BoundaryPath> sample_boundary_paths(const Graph& g, std::size_t depth);

/// `e1,e2` for a finite path, `e1;(f1,f2)` for a lasso (`;(f1,f2)` when the
/// prefix is trivial), a vertex name for a length-0 path.
std::string to_string(const Graph& g, const BoundaryPath& x);

/// Sorted union of two edge sets.
std::vector<EdgeId> edge_set_union(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b);
bool edge_set_contains(const std::vector<EdgeId>& set, EdgeId e);
std::vector<EdgeId> normalize_edge_set(std::vector<EdgeId> edges);

}  // namespace pathalg
