#pragma once

// Seeded random generators shared by the unit and acceptance tests.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pathalg/leavitt.hpp"
#include "pathalg/standard_graphs.hpp"

namespace pathalg::testing {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kSeed = 20240611;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

/// Nonzero small coefficient; over Q sometimes a fraction.
inline Scalar random_coeff(const Ring& ring, Rng& rng) {
  for (;;) {
    long num = static_cast<long>(uniform(rng, 0, 6)) - 3;
    if (num == 0) {
      continue;
    }
    mpq_class q(num);
    if (ring.kind() == Ring::Kind::rationals && coin(rng, 0.25)) {
      q = mpq_class(num, static_cast<long>(uniform(rng, 2, 3)));
      q.canonicalize();
    }
    Scalar s(ring, q);
    if (!s.is_zero()) {
      return s;
    }
  }
}

inline VertexId random_vertex(const Graph& g, Rng& rng) {
  return VertexId{static_cast<std::uint32_t>(uniform(rng, 0, g.vertex_count() - 1))};
}

/// Forward random walk of length <= max_len from `from`.
inline Path random_path_from(const Graph& g, Rng& rng, VertexId from, std::size_t max_len) {
  Path p = Path::vertex(from);
  const std::size_t len = uniform(rng, 0, max_len);
  while (p.length() < len && !g.is_sink(p.range())) {
    auto out = g.out_edges(p.range());
    p = p.append(g, out[uniform(rng, 0, out.size() - 1)]);
  }
  return p;
}

/// Backward random walk of length <= max_len ending at `to`.
inline Path random_path_into(const Graph& g, Rng& rng, VertexId to, std::size_t max_len) {
  std::vector<EdgeId> rev;
  VertexId at = to;
  const std::size_t len = uniform(rng, 0, max_len);
  while (rev.size() < len && !g.in_edges(at).empty()) {
    auto in = g.in_edges(at);
    EdgeId e = in[uniform(rng, 0, in.size() - 1)];
    rev.push_back(e);
    at = g.source(e);
  }
  if (rev.empty()) {
    return Path::vertex(to);
  }
  return Path::from_edges(g, std::vector<EdgeId>(rev.rbegin(), rev.rend()));
}

inline Monomial random_monomial(const Graph& g, Rng& rng, std::size_t max_len) {
  Path mu = random_path_from(g, rng, random_vertex(g, rng), max_len);
  Path nu = random_path_into(g, rng, mu.range(), max_len);
  return Monomial{mu, nu};
}

inline LeavittElement random_leavitt(const GraphPtr& graph, const Ring& ring, Rng& rng,
                                     std::size_t max_terms = 4, std::size_t max_len = 3) {
  LeavittElement x(graph, ring);
  const std::size_t n = uniform(rng, 1, max_terms);
  for (std::size_t i = 0; i < n; ++i) {
    x.add_term(random_coeff(ring, rng), random_monomial(*graph, rng, max_len));
  }
  return x;
}

/// Excluded edges are a random subset of r(alpha)E1, never all of it at a
/// (CK2) vertex, so the atom is nonempty.
inline BisectionAtom random_atom(const Graph& g, Rng& rng, std::size_t max_len = 3) {
  Monomial m = random_monomial(g, rng, max_len);
  std::vector<EdgeId> excluded;
  const VertexId r = m.mu.range();
  for (EdgeId e : g.out_edges(r)) {
    if (coin(rng, 0.3)) {
      excluded.push_back(e);
    }
  }
  if (g.in_ck2(r) && excluded.size() == g.out_edges(r).size()) {
    excluded.pop_back();
  }
  return BisectionAtom::make(g, m.mu, m.nu, excluded);
}

inline BisectionAtom random_atom_of_degree(const Graph& g, Rng& rng, std::int64_t degree,
                                           std::size_t max_len = 3) {
  for (;;) {
    BisectionAtom a = random_atom(g, rng, max_len);
    if (a.degree() == degree) {
      return a;
    }
  }
}

inline SteinbergElement random_steinberg(const GraphPtr& graph, const Ring& ring, Rng& rng,
                                         std::size_t max_terms = 4, std::size_t max_len = 3) {
  SteinbergElement f(graph, ring);
  const std::size_t n = uniform(rng, 1, max_terms);
  for (std::size_t i = 0; i < n; ++i) {
    f.add_term(random_coeff(ring, rng), random_atom(*graph, rng, max_len));
  }
  return f;
}

/// (x, |alpha| - |beta|, beta sigma^|alpha|(x)) for x drawn from `points`,
/// alpha a prefix of x and beta a random path into r(alpha).
inline GroupoidElement random_groupoid_element(const Graph& g, Rng& rng,
                                               const std::vector<BoundaryPath>& points,
                                               std::size_t max_len = 3) {
  const BoundaryPath& x = points[uniform(rng, 0, points.size() - 1)];
  std::size_t cut = uniform(rng, 0, max_len);
  if (auto len = x.length()) {
    cut = std::min(cut, *len);
  }
  const BoundaryPath tail = x.shift(g, cut);
  const Path beta = random_path_into(g, rng, tail.source(), max_len);
  const std::int64_t k =
      static_cast<std::int64_t>(cut) - static_cast<std::int64_t>(beta.length());
  return GroupoidElement::make(g, x, k, tail.prepend(g, beta));
}

inline std::vector<GroupoidElement> sample_groupoid_elements(const Graph& g, Rng& rng,
                                                            std::size_t n, std::size_t depth = 4) {
  const auto points = sample_boundary_paths(g, depth);
  std::vector<GroupoidElement> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(random_groupoid_element(g, rng, points));
  }
  return out;
}

/// Acyclic graph on `n` vertices with edges only from lower to higher index.
inline Graph random_acyclic_graph(Rng& rng, std::size_t max_vertices = 6,
                                  std::size_t max_edges = 8) {
  Graph g;
  const std::size_t n = uniform(rng, 1, max_vertices);
  for (std::size_t i = 0; i < n; ++i) {
    g.add_vertex("w" + std::to_string(i + 1));
  }
  const std::size_t m = n < 2 ? 0 : uniform(rng, 0, max_edges);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t a = uniform(rng, 0, n - 2);
    std::size_t b = uniform(rng, a + 1, n - 1);
    g.add_edge("a" + std::to_string(i + 1), VertexId{static_cast<std::uint32_t>(a)},
               VertexId{static_cast<std::uint32_t>(b)});
  }
  return g;
}

/// `e,f` or a vertex name.
inline Path path_of(const Graph& g, const std::string& text) {
  if (auto v = g.find_vertex(text)) {
    return Path::vertex(*v);
  }
  std::vector<EdgeId> edges;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    edges.push_back(*g.find_edge(text.substr(start, comma - start)));
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return Path::from_edges(g, edges);
}

inline BisectionAtom atom_of(const Graph& g, const std::string& alpha, const std::string& beta,
                             std::vector<std::string> excluded = {}) {
  std::vector<EdgeId> fs;
  for (const auto& e : excluded) {
    fs.push_back(*g.find_edge(e));
  }
  return BisectionAtom::make(g, path_of(g, alpha), path_of(g, beta), fs);
}

inline BoundaryPath lasso_of(const Graph& g, const std::string& prefix, const std::string& cycle) {
  Path c = path_of(g, cycle);
  Path p = prefix.empty() ? Path::vertex(c.source()) : path_of(g, prefix);
  return BoundaryPath::lasso(g, p, c);
}

}  // namespace pathalg::testing
