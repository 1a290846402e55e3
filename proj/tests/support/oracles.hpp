#pragma once

// Brute-force reference implementations used only by tests.

#include <algorithm>
#include <optional>
#include <vector>

#include "pathalg/steinberg.hpp"

namespace pathalg::testing {

/// First n edges of x (fewer if x is finite and shorter).
inline std::vector<EdgeId> expand(const BoundaryPath& x, std::size_t n) {
  std::vector<EdgeId> out(x.prefix().edges().begin(), x.prefix().edges().end());
  if (x.is_lasso()) {
    const auto cyc = x.cycle().edges();
    for (std::size_t i = 0; out.size() < n; ++i) {
      out.push_back(cyc[i % cyc.size()]);
    }
  }
  if (out.size() > n) {
    out.resize(n);
  }
  return out;
}

/// Same point of the boundary path space, by comparing long expansions.
inline bool same_point(const BoundaryPath& x, const BoundaryPath& y) {
  if (x.is_lasso() != y.is_lasso()) {
    return false;
  }
  if (x.is_finite()) {
    return x.prefix() == y.prefix();
  }
  const std::size_t n = 2 * (x.prefix().length() + y.prefix().length() + x.cycle().length() *
                                                                            y.cycle().length()) +
                        4;
  return x.source() == y.source() && expand(x, n) == expand(y, n);
}

/// Membership in Z(alpha, F) from the expansion.
inline bool cylinder_member(const CylinderAtom& z, const BoundaryPath& x) {
  if (x.source() != z.alpha.source()) {
    return false;
  }
  const std::size_t a = z.alpha.length();
  const std::vector<EdgeId> w = expand(x, a + 1);
  if (w.size() < a || !std::equal(z.alpha.edges().begin(), z.alpha.edges().end(), w.begin())) {
    return false;
  }
  if (w.size() == a) {
    return true;
  }
  return std::find(z.excluded.begin(), z.excluded.end(), w[a]) == z.excluded.end();
}

/// Membership in Z(alpha, beta, F): x = alpha t, y = beta t with t avoiding F.
inline bool atom_member(const Graph& g, const BisectionAtom& a, const GroupoidElement& x) {
  if (x.lag() != a.degree()) {
    return false;
  }
  if (!cylinder_member(a.range_cylinder(), x.x()) ||
      !cylinder_member(a.source_cylinder(), x.y())) {
    return false;
  }
  return same_point(x.x().shift(g, a.alpha.length()), x.y().shift(g, a.beta.length()));
}

/// x lies in AB iff x = ab for some a in A, b in B.
inline bool product_member(const Graph& g, const BisectionAtom& a, const BisectionAtom& b,
                    const GroupoidElement& x) {
  auto first = atom_element_at_range(g, a, x.x());
  if (!first || !atom_member(g, a, *first)) {
    return false;
  }
  auto lags = tail_equivalent(g, first->y(), x.y());
  const std::int64_t k = x.lag() - first->lag();
  if (!lags || !lags->contains(k)) {
    return false;
  }
  return atom_member(g, b, GroupoidElement::make(g, first->y(), k, x.y()));
}

/// (f * g)(gamma) as the sum over decompositions gamma = (x, k1, z)(z, k2, y)
/// with (x, k1, z) in a term of f and (z, k2, y) in a term of g. Each atom is
/// a bisection, so z is determined by x and the f-term.
inline Scalar convolution_at(const SteinbergElement& f, const SteinbergElement& h,
                             const GroupoidElement& gamma) {
  const Graph& g = f.graph();
  Scalar total = Scalar::zero(f.ring());
  for (const SteinbergTerm& a : f.terms()) {
    auto first = atom_element_at_range(g, a.atom, gamma.x());
    if (!first || !atom_member(g, a.atom, *first)) {
      continue;
    }
    for (const SteinbergTerm& b : h.terms()) {
      auto second = atom_element_at_range(g, b.atom, first->y());
      if (!second || !atom_member(g, b.atom, *second)) {
        continue;
      }
      if (second->y() == gamma.y() && first->lag() + second->lag() == gamma.lag()) {
        total += a.coeff * b.coeff;
      }
    }
  }
  return total;
}

/// f(gamma) summed directly over the raw terms.
inline Scalar evaluate_raw(const SteinbergElement& f, const GroupoidElement& gamma) {
  Scalar total = Scalar::zero(f.ring());
  for (const SteinbergTerm& t : f.terms()) {
    if (atom_member(f.graph(), t.atom, gamma)) {
      total += t.coeff;
    }
  }
  return total;
}

}  // namespace pathalg::testing
