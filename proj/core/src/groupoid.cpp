#include "pathalg/groupoid.hpp"

#include <algorithm>

#include "pathalg/error.hpp"

namespace pathalg {

namespace {

std::int64_t len(const Path& p) { return static_cast<std::int64_t>(p.length()); }

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::optional<BisectionAtom> nonempty(const Graph& g, BisectionAtom a) {
  if (atom_is_empty(g, a)) {
    return std::nullopt;
  }
  return a;
}

}  // namespace

bool LagSet::contains(std::int64_t k) const {
  if (period == 0) {
    return k == base;
  }
  return floor_mod(k - base, period) == 0;
}

std::optional<LagSet> tail_equivalent(const Graph& g, const BoundaryPath& x, const BoundaryPath& y) {
  if (x.is_finite() != y.is_finite()) {
    return std::nullopt;
  }
  if (x.is_finite()) {
    if (x.prefix().range() != y.prefix().range()) {
      return std::nullopt;
    }
    return LagSet{len(x.prefix()) - len(y.prefix()), 0};
  }
  const Path& cx = x.cycle();
  const Path& cy = y.cycle();
  if (cx.length() != cy.length()) {
    return std::nullopt;
  }
  const std::size_t n = cx.length();
  for (std::size_t r = 0; r < n; ++r) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      match = cx[(i + r) % n] == cy[i];
    }
    if (match) {
      const std::int64_t period = static_cast<std::int64_t>(n);
      const std::int64_t k = len(x.prefix()) + static_cast<std::int64_t>(r) - len(y.prefix());
      return LagSet{floor_mod(k, period), period};
    }
  }
  (void)g;
  return std::nullopt;
}

GroupoidElement GroupoidElement::make(const Graph& g, BoundaryPath x, std::int64_t k,
                                      BoundaryPath y) {
  auto lags = tail_equivalent(g, x, y);
  if (!lags || !lags->contains(k)) {
    throw DomainError("(" + to_string(g, x) + ", " + std::to_string(k) + ", " + to_string(g, y) +
                      ") is not tail equivalent with that lag");
  }
  return GroupoidElement(std::move(x), k, std::move(y));
}

std::optional<GroupoidElement> compose(const GroupoidElement& a, const GroupoidElement& b) {
  if (!(a.y() == b.x())) {
    return std::nullopt;
  }
  return GroupoidElement(a.x(), a.lag() + b.lag(), b.y());
}

std::optional<GroupoidElement> isotropy_generator(const BoundaryPath& p) {
  if (p.is_finite()) {
    return std::nullopt;
  }
  return GroupoidElement(p, len(p.cycle()), p);
}

bool atom_less(const BisectionAtom& a, const BisectionAtom& b) {
  if (a.alpha.length() != b.alpha.length()) {
    return a.alpha.length() < b.alpha.length();
  }
  if (a.alpha != b.alpha) {
    return a.alpha < b.alpha;
  }
  if (a.beta != b.beta) {
    return a.beta < b.beta;
  }
  return a.excluded < b.excluded;
}

BisectionAtom BisectionAtom::make(const Graph& g, Path alpha, Path beta,
                                  std::vector<EdgeId> excluded) {
  if (alpha.range() != beta.range()) {
    throw DomainError("Z(" + to_string(g, alpha) + "|" + to_string(g, beta) +
                      "): paths must share their range");
  }
  CylinderAtom z = CylinderAtom::make(g, alpha, std::move(excluded));
  return BisectionAtom{std::move(alpha), std::move(beta), std::move(z.excluded)};
}

bool atom_is_empty(const Graph& g, const BisectionAtom& a) {
  return cyl_is_empty(g, a.range_cylinder());
}

bool atom_contains(const Graph& g, const BisectionAtom& a, const GroupoidElement& x) {
  if (x.lag() != a.degree()) {
    return false;
  }
  if (!x.x().starts_with(a.alpha) || !x.y().starts_with(a.beta)) {
    return false;
  }
  BoundaryPath tail = x.x().shift(g, a.alpha.length());
  if (!(tail == x.y().shift(g, a.beta.length()))) {
    return false;
  }
  auto next = tail.edge_at(0);
  return !next || !edge_set_contains(a.excluded, *next);
}

std::optional<BisectionAtom> atom_mul(const Graph& g, const BisectionAtom& a,
                                      const BisectionAtom& b) {
  if (a.beta == b.alpha) {
    return nonempty(g, {a.alpha, b.beta, edge_set_union(a.excluded, b.excluded)});
  }
  if (b.alpha.is_prefix_of(a.beta)) {
    Path kappa = a.beta.drop(g, b.alpha.length());
    if (edge_set_contains(b.excluded, kappa.front())) {
      return std::nullopt;
    }
    return nonempty(g, {a.alpha, b.beta.concat(kappa), a.excluded});
  }
  if (a.beta.is_prefix_of(b.alpha)) {
    Path kappa = b.alpha.drop(g, a.beta.length());
    if (edge_set_contains(a.excluded, kappa.front())) {
      return std::nullopt;
    }
    return nonempty(g, {a.alpha.concat(kappa), b.beta, b.excluded});
  }
  return std::nullopt;
}

BisectionAtom atom_inverse(const BisectionAtom& a) { return {a.beta, a.alpha, a.excluded}; }

namespace {

// If alpha = gamma kappa and beta = delta kappa with |kappa| >= 1, returns kappa.
std::optional<Path> common_extension(const Graph& g, const BisectionAtom& longer,
                                     const BisectionAtom& shorter) {
  if (longer.alpha.length() <= shorter.alpha.length() || longer.degree() != shorter.degree()) {
    return std::nullopt;
  }
  if (!shorter.alpha.is_prefix_of(longer.alpha) || !shorter.beta.is_prefix_of(longer.beta)) {
    return std::nullopt;
  }
  Path kappa = longer.alpha.drop(g, shorter.alpha.length());
  if (kappa != longer.beta.drop(g, shorter.beta.length())) {
    return std::nullopt;
  }
  return kappa;
}

}  // namespace

std::optional<BisectionAtom> atom_intersect(const Graph& g, const BisectionAtom& a,
                                            const BisectionAtom& b) {
  if (a.alpha == b.alpha && a.beta == b.beta) {
    return nonempty(g, {a.alpha, a.beta, edge_set_union(a.excluded, b.excluded)});
  }
  if (auto kappa = common_extension(g, a, b)) {
    if (edge_set_contains(b.excluded, kappa->front())) {
      return std::nullopt;
    }
    return nonempty(g, a);
  }
  if (auto kappa = common_extension(g, b, a)) {
    if (edge_set_contains(a.excluded, kappa->front())) {
      return std::nullopt;
    }
    return nonempty(g, b);
  }
  return std::nullopt;
}

std::vector<BisectionAtom> atom_difference(const Graph& g, const BisectionAtom& a,
                                           const BisectionAtom& b) {
  if (atom_is_empty(g, a)) {
    return {};
  }
  auto c = atom_intersect(g, a, b);
  if (!c) {
    return {a};
  }
  std::vector<BisectionAtom> pieces;
  auto push = [&](BisectionAtom x) {
    if (!atom_is_empty(g, x)) {
      pieces.push_back(std::move(x));
    }
  };
  if (c->alpha == a.alpha && c->beta == a.beta) {
    for (EdgeId e : c->excluded) {
      if (!edge_set_contains(a.excluded, e)) {
        push({a.alpha.append(g, e), a.beta.append(g, e), {}});
      }
    }
  } else {
    Path kappa = c->alpha.drop(g, a.alpha.length());
    push({a.alpha, a.beta, edge_set_union(a.excluded, {kappa.front()})});
    Path alpha_j = a.alpha;
    Path beta_j = a.beta;
    for (std::size_t j = 0; j + 1 < kappa.length(); ++j) {
      alpha_j = alpha_j.append(g, kappa[j]);
      beta_j = beta_j.append(g, kappa[j]);
      push({alpha_j, beta_j, {kappa[j + 1]}});
    }
    for (EdgeId e : c->excluded) {
      push({c->alpha.append(g, e), c->beta.append(g, e), {}});
    }
  }
  std::sort(pieces.begin(), pieces.end(), atom_less);
  return pieces;
}

bool atom_set_equal(const Graph& g, const BisectionAtom& a, const BisectionAtom& b) {
  return atom_difference(g, a, b).empty() && atom_difference(g, b, a).empty();
}

std::optional<GroupoidElement> atom_element_at_range(const Graph& g, const BisectionAtom& a,
                                                     const BoundaryPath& x) {
  if (!cyl_contains(a.range_cylinder(), x)) {
    return std::nullopt;
  }
  BoundaryPath tail = x.shift(g, a.alpha.length());
  return GroupoidElement::make(g, x, a.degree(), tail.prepend(g, a.beta));
}

std::optional<BisectionAtom> effectiveness_witness(const Graph& g) {
  CycleCheck l = condition_L(g);
  if (l.holds) {
    return std::nullopt;
  }
  const Path& c = *l.witness;
  return BisectionAtom{c.concat(c), c, {}};
}

std::string to_string(const Graph& g, const BisectionAtom& a) {
  std::string out = "Z(" + to_string(g, a.alpha) + "|" + to_string(g, a.beta);
  if (!a.excluded.empty()) {
    out += "\\{";
    for (std::size_t i = 0; i < a.excluded.size(); ++i) {
      out += (i ? "," : "") + g.name(a.excluded[i]);
    }
    out += "}";
  }
  return out + ")";
}

std::string to_string(const Graph& g, const GroupoidElement& x) {
  return "(" + to_string(g, x.x()) + ", " + std::to_string(x.lag()) + ", " + to_string(g, x.y()) +
         ")";
}

}  // namespace pathalg
