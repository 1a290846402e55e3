#include "pathalg/leavitt.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pathalg/error.hpp"

namespace pathalg {

namespace {

void require_compatible(const LeavittElement& x, const LeavittElement& y) {
  if (!(x.ring() == y.ring())) {
    throw DomainError("ring mismatch: " + x.ring().name() + " vs " + y.ring().name());
  }
  if (x.graph_ptr() != y.graph_ptr() && !(x.graph() == y.graph())) {
    throw DomainError("graph mismatch");
  }
}

std::optional<Monomial> multiply_monomials(const Graph& g, const Monomial& a, const Monomial& b) {
  // (mu nu^*)(gamma lambda^*)
  if (a.nu.is_prefix_of(b.mu)) {
    Path kappa = b.mu.drop(g, a.nu.length());
    return Monomial{a.mu.concat(kappa), b.nu};
  }
  if (b.mu.is_prefix_of(a.nu)) {
    Path kappa = a.nu.drop(g, b.mu.length());
    return Monomial{a.mu, b.nu.concat(kappa)};
  }
  return std::nullopt;
}

struct Reduction {
  Path alpha;
  Path beta;
  Scalar s;
};

Reduction reduce_recursive(const LeavittElement& x) {
  const Graph& g = x.graph();
  std::vector<std::pair<VertexId, Scalar>> vertex_terms;
  std::set<EdgeId> leading_edges;
  for (const auto& [m, c] : x.terms()) {
    if (m.mu.is_vertex()) {
      vertex_terms.emplace_back(m.mu.source(), c);
    } else {
      leading_edges.insert(m.mu.front());
    }
  }
  if (vertex_terms.size() == x.terms().size()) {
    const auto& [v, s] = vertex_terms.front();
    return {Path::vertex(v), Path::vertex(v), s};
  }
  for (const auto& [v, s] : vertex_terms) {
    if (g.is_sink(v)) {
      return {Path::vertex(v), Path::vertex(v), s};
    }
  }
  std::optional<VertexId> starved;
  for (const auto& [v, s] : vertex_terms) {
    if (g.in_ck2(v)) {
      continue;
    }
    for (EdgeId e : g.out_edges(v)) {
      if (!leading_edges.contains(e)) {
        return {Path::edge(g, e), Path::edge(g, e), s};
      }
    }
    if (!starved) {
      starved = v;
    }
  }
  if (starved) {
    throw DomainError("insufficient truncation at singular vertex " + g.name(*starved));
  }
  // Every vertex term is regular, so x = sum_{e,f} e (e^* x f) f^* and some
  // e^* x f is nonzero with strictly shorter monomials.
  for (EdgeId e : g.edges()) {
    LeavittElement left = LeavittElement::ghost(x.graph_ptr(), x.ring(), e) * x;
    if (left.empty()) {
      continue;
    }
    for (EdgeId f : g.edges()) {
      LeavittElement inner = left * LeavittElement::edge(x.graph_ptr(), x.ring(), f);
      if (inner.empty() || is_zero(inner)) {
        continue;
      }
      Reduction r = reduce_recursive(inner);
      return {Path::edge(g, e).concat(r.alpha), Path::edge(g, f).concat(r.beta), r.s};
    }
  }
  throw std::logic_error("degree-zero reduction found no nonzero corner");
}

}  // namespace

Monomial Monomial::make(Path mu, Path nu) {
  if (mu.range() != nu.range()) {
    throw DomainError("monomial paths must share their range");
  }
  return Monomial{std::move(mu), std::move(nu)};
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = mu.length() + nu.length() <=> other.mu.length() + other.nu.length(); c != 0) {
    return c;
  }
  if (auto c = mu <=> other.mu; c != 0) {
    return c;
  }
  return nu <=> other.nu;
}

LeavittElement LeavittElement::monomial(GraphPtr graph, Monomial m, Scalar coeff) {
  LeavittElement x(std::move(graph), coeff.ring());
  x.add_term(coeff, m);
  return x;
}

LeavittElement LeavittElement::vertex(GraphPtr graph, Ring ring, VertexId v) {
  return monomial(std::move(graph), Monomial::vertex(v), Scalar::one(ring));
}

LeavittElement LeavittElement::edge(GraphPtr graph, Ring ring, EdgeId e) {
  const Graph& g = *graph;
  Monomial m{Path::edge(g, e), Path::vertex(g.range(e))};
  return monomial(std::move(graph), std::move(m), Scalar::one(ring));
}

LeavittElement LeavittElement::ghost(GraphPtr graph, Ring ring, EdgeId e) {
  const Graph& g = *graph;
  Monomial m{Path::vertex(g.range(e)), Path::edge(g, e)};
  return monomial(std::move(graph), std::move(m), Scalar::one(ring));
}

void LeavittElement::add_term(const Scalar& coeff, const Monomial& m) {
  if (!(coeff.ring() == ring_)) {
    throw DomainError("ring mismatch: " + coeff.ring().name() + " vs " + ring_.name());
  }
  if (coeff.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

LeavittElement add(const LeavittElement& x, const LeavittElement& y) {
  require_compatible(x, y);
  LeavittElement out = x;
  for (const auto& [m, c] : y.terms()) {
    out.add_term(c, m);
  }
  return out;
}

LeavittElement scale(const Scalar& r, const LeavittElement& x) {
  LeavittElement out(x.graph_ptr(), x.ring());
  for (const auto& [m, c] : x.terms()) {
    out.add_term(r * c, m);
  }
  return out;
}

LeavittElement multiply(const LeavittElement& x, const LeavittElement& y) {
  require_compatible(x, y);
  LeavittElement out(x.graph_ptr(), x.ring());
  for (const auto& [a, c] : x.terms()) {
    for (const auto& [b, d] : y.terms()) {
      if (auto ab = multiply_monomials(x.graph(), a, b)) {
        out.add_term(c * d, *ab);
      }
    }
  }
  return out;
}

LeavittElement involution(const LeavittElement& x) {
  LeavittElement out(x.graph_ptr(), x.ring());
  for (const auto& [m, c] : x.terms()) {
    out.add_term(c.conjugate(), Monomial{m.nu, m.mu});
  }
  return out;
}

LeavittElement degree_component(const LeavittElement& x, std::int64_t n) {
  LeavittElement out(x.graph_ptr(), x.ring());
  for (const auto& [m, c] : x.terms()) {
    if (m.degree() == n) {
      out.add_term(c, m);
    }
  }
  return out;
}

std::vector<std::int64_t> degrees(const LeavittElement& x) {
  std::set<std::int64_t> seen;
  for (const auto& [m, c] : x.terms()) {
    seen.insert(m.degree());
  }
  return {seen.begin(), seen.end()};
}

EdgeId special_edge(const Graph& g, VertexId v) {
  if (!g.in_ck2(v)) {
    throw DomainError("vertex " + g.name(v) + " has no special edge");
  }
  return g.out_edges(v).front();
}

bool is_reducible(const Graph& g, const Monomial& m) {
  if (m.mu.is_vertex() || m.nu.is_vertex() || m.mu.back() != m.nu.back()) {
    return false;
  }
  const EdgeId last = m.mu.back();
  const VertexId w = g.source(last);
  return g.in_ck2(w) && special_edge(g, w) == last;
}

LeavittElement normal_form(const LeavittElement& x) {
  const Graph& g = x.graph();
  LeavittElement work = x;
  LeavittElement out(x.graph_ptr(), x.ring());
  while (!work.empty()) {
    auto last = std::prev(work.terms().end());
    const Monomial m = last->first;
    const Scalar c = last->second;
    work.add_term(-c, m);
    if (!is_reducible(g, m)) {
      out.add_term(c, m);
      continue;
    }
    // mu' gamma gamma^* nu'^* = mu' nu'^* - sum_{e != gamma} mu' e e^* nu'^*
    Path mu = m.mu.prefix(g, m.mu.length() - 1);
    Path nu = m.nu.prefix(g, m.nu.length() - 1);
    const EdgeId gamma = m.mu.back();
    work.add_term(c, Monomial{mu, nu});
    for (EdgeId e : g.out_edges(mu.range())) {
      if (e != gamma) {
        work.add_term(-c, Monomial{mu.append(g, e), nu.append(g, e)});
      }
    }
  }
  return out;
}

SteinbergElement to_steinberg(const LeavittElement& x) {
  SteinbergElement out(x.graph_ptr(), x.ring());
  for (const auto& [m, c] : x.terms()) {
    out.add_term(c, BisectionAtom{m.mu, m.nu, {}});
  }
  return normalize(out);
}

LeavittElement from_steinberg(const SteinbergElement& f) {
  const Graph& g = f.graph();
  LeavittElement out(f.graph_ptr(), f.ring());
  for (const SteinbergTerm& t : f.terms()) {
    out.add_term(t.coeff, Monomial{t.atom.alpha, t.atom.beta});
    for (EdgeId e : t.atom.excluded) {
      out.add_term(-t.coeff, Monomial{t.atom.alpha.append(g, e), t.atom.beta.append(g, e)});
    }
  }
  return out;
}

bool is_zero(const LeavittElement& x) {
  const bool via_groupoid = to_steinberg(x).terms().empty();
  const bool via_rewriting = normal_form(x).empty();
  if (via_groupoid != via_rewriting) {
    throw std::logic_error("zero tests disagree on " + to_string(x));
  }
  return via_groupoid;
}

bool equals(const LeavittElement& x, const LeavittElement& y) { return is_zero(x - y); }

std::vector<VertexId> support_vertices(const LeavittElement& x) {
  std::set<VertexId> seen;
  for (const auto& [m, c] : x.terms()) {
    seen.insert(m.mu.source());
    seen.insert(m.nu.source());
  }
  return {seen.begin(), seen.end()};
}

LeavittElement vertex_sum(GraphPtr graph, Ring ring, const std::vector<VertexId>& vertices) {
  LeavittElement out(graph, ring);
  for (VertexId v : std::set<VertexId>(vertices.begin(), vertices.end())) {
    out.add_term(Scalar::one(ring), Monomial::vertex(v));
  }
  return out;
}

DegreeZeroReduction reduce_degree_zero(const LeavittElement& x) {
  for (const auto& [m, c] : x.terms()) {
    if (m.degree() != 0) {
      throw DomainError("degree nonzero");
    }
  }
  if (is_zero(x)) {
    throw DomainError("zero input");
  }
  Reduction r = reduce_recursive(x);
  const GraphPtr& g = x.graph_ptr();
  LeavittElement alpha_star = LeavittElement::monomial(
      g, Monomial{Path::vertex(r.alpha.range()), r.alpha}, Scalar::one(x.ring()));
  LeavittElement beta = LeavittElement::monomial(
      g, Monomial{r.beta, Path::vertex(r.beta.range())}, Scalar::one(x.ring()));
  LeavittElement expected =
      LeavittElement::monomial(g, Monomial::vertex(r.alpha.range()), r.s);
  if (!equals(alpha_star * x * beta, expected)) {
    throw std::logic_error("degree-zero reduction identity failed to verify");
  }
  return DegreeZeroReduction{std::move(r.alpha), std::move(r.beta), std::move(r.s)};
}

std::vector<Monomial> irreducible_monomials(const Graph& g, std::optional<std::size_t> max_len) {
  std::vector<Monomial> out;
  for (VertexId w : g.vertices()) {
    std::vector<Path> into = paths_into(g, w, max_len);
    for (const Path& mu : into) {
      for (const Path& nu : into) {
        Monomial m{mu, nu};
        if (!is_reducible(g, m)) {
          out.push_back(std::move(m));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Graph& g, const Monomial& m) {
  if (m.mu.is_vertex() && m.nu.is_vertex()) {
    return g.name(m.mu.source());
  }
  std::string out;
  auto put = [&out](const std::string& s) {
    if (!out.empty()) {
      out += ' ';
    }
    out += s;
  };
  for (EdgeId e : m.mu.edges()) {
    put(g.name(e));
  }
  for (auto it = m.nu.edges().rbegin(); it != m.nu.edges().rend(); ++it) {
    put(g.name(*it) + "*");
  }
  return out;
}

std::string to_string(const LeavittElement& x) {
  if (x.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    const bool negative = c.value() < 0;
    mpq_class magnitude = abs(c.value());
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) {
      out += magnitude.get_str() + " ";
    }
    out += to_string(x.graph(), m);
  }
  return out;
}

}  // namespace pathalg
