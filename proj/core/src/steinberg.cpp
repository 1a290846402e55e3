#include "pathalg/steinberg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pathalg/error.hpp"

namespace pathalg {

namespace {

void require_compatible(const SteinbergElement& f, const SteinbergElement& g) {
  if (!(f.ring() == g.ring())) {
    throw DomainError("ring mismatch: " + f.ring().name() + " vs " + g.ring().name());
  }
  if (f.graph_ptr() != g.graph_ptr() && !(f.graph() == g.graph())) {
    throw DomainError("graph mismatch");
  }
}

bool term_less(const SteinbergTerm& a, const SteinbergTerm& b) {
  if (a.atom.degree() != b.atom.degree()) {
    return a.atom.degree() < b.atom.degree();
  }
  return atom_less(a.atom, b.atom);
}

// Z(alpha e, beta e) with alpha, beta obtained by dropping the common last edge.
bool is_child_of(const BisectionAtom& child, const BisectionAtom& parent) {
  return child.excluded.empty() && child.alpha.length() == parent.alpha.length() + 1 &&
         child.beta.length() == parent.beta.length() + 1 && child.alpha.back() == child.beta.back() &&
         parent.alpha.is_prefix_of(child.alpha) && parent.beta.is_prefix_of(child.beta);
}

// Merges equal-coefficient pieces that tile a coarser atom:
//   Z(a,b,F) + Z(ae,be) = Z(a,b,F\{e}) for e in F, and
//   sum over all e of Z(ae,be) = Z(a,b) when (CK2) holds at r(a).
void coalesce(const Graph& g, std::vector<SteinbergTerm>& terms) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < terms.size() && !changed; ++i) {
      for (std::size_t j = 0; j < terms.size() && !changed; ++j) {
        if (i == j || !(terms[i].coeff == terms[j].coeff)) {
          continue;
        }
        BisectionAtom& parent = terms[i].atom;
        const BisectionAtom& child = terms[j].atom;
        if (is_child_of(child, parent) && edge_set_contains(parent.excluded, child.alpha.back())) {
          std::erase(parent.excluded, child.alpha.back());
          terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
      }
    }
    for (std::size_t i = 0; i < terms.size() && !changed; ++i) {
      const BisectionAtom& a = terms[i].atom;
      if (!a.excluded.empty() || a.alpha.is_vertex() || a.beta.is_vertex() ||
          a.alpha.back() != a.beta.back()) {
        continue;
      }
      BisectionAtom parent{a.alpha.prefix(g, a.alpha.length() - 1),
                           a.beta.prefix(g, a.beta.length() - 1),
                           {}};
      VertexId w = parent.alpha.range();
      if (!g.in_ck2(w)) {
        continue;
      }
      std::vector<std::size_t> siblings;
      for (std::size_t j = 0; j < terms.size(); ++j) {
        if (terms[j].coeff == terms[i].coeff && is_child_of(terms[j].atom, parent)) {
          siblings.push_back(j);
        }
      }
      if (siblings.size() == g.out_edges(w).size()) {
        Scalar c = terms[i].coeff;
        for (auto it = siblings.rbegin(); it != siblings.rend(); ++it) {
          terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(*it));
        }
        terms.push_back(SteinbergTerm{c, std::move(parent)});
        changed = true;
      }
    }
  }
}

}  // namespace

SteinbergElement SteinbergElement::indicator(GraphPtr graph, const BisectionAtom& atom,
                                             Scalar coeff) {
  SteinbergElement f(std::move(graph), coeff.ring());
  f.add_term(std::move(coeff), atom);
  return f;
}

void SteinbergElement::add_term(Scalar coeff, BisectionAtom atom) {
  if (!(coeff.ring() == ring_)) {
    throw DomainError("ring mismatch: " + coeff.ring().name() + " vs " + ring_.name());
  }
  terms_.push_back(SteinbergTerm{std::move(coeff), std::move(atom)});
}

bool SteinbergElement::is_zero() const { return normalize(*this).terms().empty(); }

SteinbergElement normalize(const SteinbergElement& f) {
  const Graph& g = f.graph();
  std::vector<SteinbergTerm> cells;
  std::vector<SteinbergTerm> work;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!it->coeff.is_zero() && !atom_is_empty(g, it->atom)) {
      work.push_back(*it);
    }
  }
  while (!work.empty()) {
    SteinbergTerm t = std::move(work.back());
    work.pop_back();
    bool overlapped = false;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      auto common = atom_intersect(g, t.atom, cells[i].atom);
      if (!common) {
        continue;
      }
      SteinbergTerm cell = std::move(cells[i]);
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
      cells.push_back(SteinbergTerm{cell.coeff + t.coeff, *common});
      for (BisectionAtom& piece : atom_difference(g, cell.atom, *common)) {
        cells.push_back(SteinbergTerm{cell.coeff, std::move(piece)});
      }
      auto rest = atom_difference(g, t.atom, *common);
      for (auto p = rest.rbegin(); p != rest.rend(); ++p) {
        work.push_back(SteinbergTerm{t.coeff, std::move(*p)});
      }
      overlapped = true;
      break;
    }
    if (!overlapped) {
      cells.push_back(std::move(t));
    }
  }
  std::erase_if(cells, [](const SteinbergTerm& t) { return t.coeff.is_zero(); });
  coalesce(g, cells);
  std::sort(cells.begin(), cells.end(), term_less);

  SteinbergElement out(f.graph_ptr(), f.ring());
  for (SteinbergTerm& t : cells) {
    out.add_term(std::move(t.coeff), std::move(t.atom));
  }
  return out;
}

Scalar evaluate(const SteinbergElement& f, const GroupoidElement& x) {
  Scalar total = Scalar::zero(f.ring());
  for (const SteinbergTerm& t : f.terms()) {
    if (atom_contains(f.graph(), t.atom, x)) {
      total += t.coeff;
    }
  }
  return total;
}

SteinbergElement convolve(const SteinbergElement& f, const SteinbergElement& g) {
  require_compatible(f, g);
  SteinbergElement out(f.graph_ptr(), f.ring());
  for (const SteinbergTerm& a : f.terms()) {
    for (const SteinbergTerm& b : g.terms()) {
      if (auto ab = atom_mul(f.graph(), a.atom, b.atom)) {
        out.add_term(a.coeff * b.coeff, std::move(*ab));
      }
    }
  }
  return normalize(out);
}

SteinbergElement add(const SteinbergElement& f, const SteinbergElement& g) {
  require_compatible(f, g);
  SteinbergElement out = f;
  for (const SteinbergTerm& t : g.terms()) {
    out.add_term(t.coeff, t.atom);
  }
  return normalize(out);
}

SteinbergElement scale(const Scalar& r, const SteinbergElement& f) {
  SteinbergElement out(f.graph_ptr(), f.ring());
  for (const SteinbergTerm& t : f.terms()) {
    out.add_term(r * t.coeff, t.atom);
  }
  return normalize(out);
}

SteinbergElement involution(const SteinbergElement& f) {
  SteinbergElement out(f.graph_ptr(), f.ring());
  for (const SteinbergTerm& t : f.terms()) {
    out.add_term(t.coeff.conjugate(), atom_inverse(t.atom));
  }
  return normalize(out);
}

SteinbergElement degree_component(const SteinbergElement& f, std::int64_t n) {
  SteinbergElement out(f.graph_ptr(), f.ring());
  for (const SteinbergTerm& t : f.terms()) {
    if (t.atom.degree() == n) {
      out.add_term(t.coeff, t.atom);
    }
  }
  return normalize(out);
}

std::vector<std::int64_t> degrees(const SteinbergElement& f) {
  std::set<std::int64_t> seen;
  const SteinbergElement n = normalize(f);
  for (const SteinbergTerm& t : n.terms()) {
    seen.insert(t.atom.degree());
  }
  return {seen.begin(), seen.end()};
}

SteinbergElement local_unit(GraphPtr graph, Ring ring, const std::vector<VertexId>& vertices) {
  if (vertices.empty()) {
    throw DomainError("local unit needs a nonempty vertex set");
  }
  SteinbergElement out(std::move(graph), ring);
  std::set<VertexId> distinct(vertices.begin(), vertices.end());
  for (VertexId v : distinct) {
    out.add_term(Scalar::one(ring), BisectionAtom::unit(v));
  }
  return normalize(out);
}

std::vector<VertexId> support_vertices(const SteinbergElement& f) {
  std::set<VertexId> seen;
  for (const SteinbergTerm& t : f.terms()) {
    seen.insert(t.atom.alpha.source());
    seen.insert(t.atom.beta.source());
  }
  return {seen.begin(), seen.end()};
}

bool equals(const SteinbergElement& f, const SteinbergElement& g) { return (f - g).is_zero(); }

SteinbergReduction reduce_homogeneous(const SteinbergElement& h) {
  const Graph& g = h.graph();
  SteinbergElement hn = normalize(h);
  if (hn.terms().empty()) {
    throw DomainError("zero element");
  }
  if (degrees(hn).size() != 1) {
    throw DomainError("not homogeneous");
  }
  const SteinbergTerm& first = hn.terms().front();
  const Scalar r = first.coeff;
  const BisectionAtom b = atom_inverse(first.atom);
  SteinbergElement f = convolve(SteinbergElement::indicator(hn.graph_ptr(), b, Scalar::one(h.ring())), hn);

  // Any unit-space cylinder Z(w) with |w| >= L misses every non-unit atom of f
  // on both sides, since such an atom Z(gamma, delta, H) has gamma != delta of
  // equal length <= L.
  std::size_t needed = 0;
  for (const SteinbergTerm& t : f.terms()) {
    if (!t.atom.is_unit_space()) {
      needed = std::max(needed, t.atom.alpha.length());
    }
  }
  Path w = b.alpha;
  std::vector<EdgeId> avoid = b.excluded;
  while (w.length() < needed) {
    auto out = g.out_edges(w.range());
    auto it = std::find_if(out.begin(), out.end(),
                           [&](EdgeId e) { return !edge_set_contains(avoid, e); });
    if (it == out.end()) {
      // r(w) is singular and every continuation is excluded: V = {w}.
      avoid.assign(out.begin(), out.end());
      break;
    }
    w = w.append(g, *it);
    avoid.clear();
  }
  BisectionAtom v{w, w, normalize_edge_set(avoid)};
  auto c = atom_mul(g, v, b);
  if (!c) {
    throw std::logic_error("steinberg reduction produced an empty atom");
  }
  const Ring ring = h.ring();
  SteinbergElement lhs =
      convolve(SteinbergElement::indicator(hn.graph_ptr(), *c, Scalar::one(ring)),
               convolve(hn, SteinbergElement::indicator(hn.graph_ptr(), v, Scalar::one(ring))));
  SteinbergElement rhs = SteinbergElement::indicator(hn.graph_ptr(), v, r);
  if (!equals(lhs, rhs)) {
    throw std::logic_error("steinberg reduction identity failed to verify");
  }
  return SteinbergReduction{*c, v, r};
}

std::string to_string(const SteinbergElement& f) {
  if (f.terms().empty()) {
    return "0";
  }
  std::string out;
  for (const SteinbergTerm& t : f.terms()) {
    const bool negative = t.coeff.value() < 0;
    mpq_class magnitude = abs(t.coeff.value());
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) {
      out += magnitude.get_str() + "*";
    }
    out += to_string(f.graph(), t.atom);
  }
  return out;
}

}  // namespace pathalg
