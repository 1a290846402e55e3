#include "pathalg/pathspace.hpp"

#include <algorithm>

#include "pathalg/error.hpp"

namespace pathalg {

namespace {

bool is_primitive(std::span<const EdgeId> cycle) {
  const std::size_t n = cycle.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) {
      continue;
    }
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) {
      periodic = cycle[i] == cycle[i - d];
    }
    if (periodic) {
      return false;
    }
  }
  return true;
}

std::vector<EdgeId> primitive_root(std::span<const EdgeId> cycle) {
  const std::size_t n = cycle.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) {
      continue;
    }
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) {
      periodic = cycle[i] == cycle[i - d];
    }
    if (periodic) {
      return {cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(d)};
    }
  }
  return {cycle.begin(), cycle.end()};
}

Path rotate_left(const Graph& g, const Path& cycle, std::size_t m) {
  const std::size_t n = cycle.length();
  m %= n;
  if (m == 0) {
    return cycle;
  }
  std::vector<EdgeId> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back(cycle[(i + m) % n]);
  }
  return Path::from_edges(g, std::move(edges));
}

}  // namespace

BoundaryPath BoundaryPath::finite(const Graph& g, Path p) {
  if (g.in_ck2(p.range())) {
    throw DomainError("finite path " + to_string(g, p) + " ends at a regular vertex");
  }
  return BoundaryPath(std::move(p), std::nullopt);
}

BoundaryPath BoundaryPath::lasso(const Graph& g, Path prefix, Path cycle) {
  if (cycle.is_vertex() || cycle.source() != cycle.range()) {
    throw DomainError("lasso cycle must be a closed path of positive length");
  }
  if (prefix.range() != cycle.source()) {
    throw DomainError("lasso cycle must start where the prefix ends");
  }
  BoundaryPath x(std::move(prefix), std::move(cycle));
  x.canonicalize(g);
  return x;
}

void BoundaryPath::canonicalize(const Graph& g) {
  Path cycle = Path::from_edges(g, primitive_root(cycle_->edges()));
  while (!prefix_.is_vertex() && prefix_.back() == cycle.back()) {
    cycle = rotate_left(g, cycle, cycle.length() - 1);
    prefix_ = prefix_.prefix(g, prefix_.length() - 1);
  }
  cycle_ = std::move(cycle);
}

std::optional<std::size_t> BoundaryPath::length() const {
  if (is_lasso()) {
    return std::nullopt;
  }
  return prefix_.length();
}

std::optional<EdgeId> BoundaryPath::edge_at(std::size_t i) const {
  if (i < prefix_.length()) {
    return prefix_[i];
  }
  if (is_finite()) {
    return std::nullopt;
  }
  return (*cycle_)[(i - prefix_.length()) % cycle_->length()];
}

bool BoundaryPath::starts_with(const Path& p) const {
  if (p.source() != source()) {
    return false;
  }
  for (std::size_t i = 0; i < p.length(); ++i) {
    auto e = edge_at(i);
    if (!e || *e != p[i]) {
      return false;
    }
  }
  return true;
}

BoundaryPath BoundaryPath::shift(const Graph& g, std::size_t n) const {
  if (n <= prefix_.length()) {
    if (is_finite() && n > 0 && prefix_.is_vertex()) {
      throw DomainError("shift of a vertex");
    }
    return BoundaryPath(prefix_.drop(g, n), cycle_);
  }
  if (is_finite()) {
    throw DomainError(prefix_.is_vertex() ? "shift of a vertex" : "shift past the end of a finite path");
  }
  Path cycle = rotate_left(g, *cycle_, n - prefix_.length());
  VertexId start = cycle.source();
  return BoundaryPath(Path::vertex(start), std::move(cycle));
}

BoundaryPath BoundaryPath::prepend(const Graph& g, const Path& alpha) const {
  Path joined = alpha.concat(prefix_);
  if (is_finite()) {
    return BoundaryPath(std::move(joined), std::nullopt);
  }
  return lasso(g, std::move(joined), *cycle_);
}

std::strong_ordering BoundaryPath::operator<=>(const BoundaryPath& other) const {
  if (auto c = is_lasso() <=> other.is_lasso(); c != 0) {
    return c;
  }
  if (auto c = prefix_ <=> other.prefix_; c != 0) {
    return c;
  }
  if (is_lasso()) {
    return *cycle_ <=> *other.cycle_;
  }
  return std::strong_ordering::equal;
}

std::vector<EdgeId> normalize_edge_set(std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<EdgeId> edge_set_union(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
  std::vector<EdgeId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool edge_set_contains(const std::vector<EdgeId>& set, EdgeId e) {
  return std::binary_search(set.begin(), set.end(), e);
}

CylinderAtom CylinderAtom::make(const Graph& g, Path alpha, std::vector<EdgeId> excluded) {
  excluded = normalize_edge_set(std::move(excluded));
  for (EdgeId e : excluded) {
    if (g.source(e) != alpha.range()) {
      throw DomainError("excluded edge " + g.name(e) + " does not start at r(alpha)");
    }
  }
  return CylinderAtom{std::move(alpha), std::move(excluded)};
}

bool cyl_contains(const CylinderAtom& z, const BoundaryPath& x) {
  if (!x.starts_with(z.alpha)) {
    return false;
  }
  auto next = x.edge_at(z.alpha.length());
  return !next || !edge_set_contains(z.excluded, *next);
}

bool cyl_is_empty(const Graph& g, const CylinderAtom& z) {
  VertexId v = z.alpha.range();
  return g.in_ck2(v) && z.excluded.size() == g.out_edges(v).size();
}

std::optional<CylinderAtom> cyl_intersect(const Graph& g, const CylinderAtom& a,
                                          const CylinderAtom& b) {
  const CylinderAtom& shorter = a.alpha.length() <= b.alpha.length() ? a : b;
  const CylinderAtom& longer = a.alpha.length() <= b.alpha.length() ? b : a;
  std::optional<CylinderAtom> out;
  if (shorter.alpha == longer.alpha) {
    out = CylinderAtom{shorter.alpha, edge_set_union(shorter.excluded, longer.excluded)};
  } else if (shorter.alpha.is_prefix_of(longer.alpha) &&
             !edge_set_contains(shorter.excluded, longer.alpha[shorter.alpha.length()])) {
    out = longer;
  }
  if (out && cyl_is_empty(g, *out)) {
    out.reset();
  }
  return out;
}

std::vector<BoundaryPath> sample_boundary_paths(const Graph& g, std::size_t depth) {
  std::vector<BoundaryPath> out;
  std::vector<Path> frontier;
  for (VertexId v : g.vertices()) {
    frontier.push_back(Path::vertex(v));
  }
  for (std::size_t len = 0; len <= depth && !frontier.empty(); ++len) {
    std::sort(frontier.begin(), frontier.end());
    for (const Path& q : frontier) {
      if (!g.in_ck2(q.range())) {
        out.push_back(BoundaryPath::finite(g, q));
      }
      for (std::size_t j = 0; j < q.length(); ++j) {
        if (g.source(q[j]) != q.range()) {
          continue;
        }
        if (j > 0 && q[j - 1] == q.back()) {
          continue;
        }
        Path cycle = q.drop(g, j);
        if (!is_primitive(cycle.edges())) {
          continue;
        }
        out.push_back(BoundaryPath::lasso(g, q.prefix(g, j), std::move(cycle)));
      }
    }
    std::vector<Path> next;
    for (const Path& q : frontier) {
      for (EdgeId e : g.out_edges(q.range())) {
        next.push_back(q.append(g, e));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::string to_string(const Graph& g, const BoundaryPath& x) {
  if (x.is_finite()) {
    return to_string(g, x.prefix());
  }
  std::string head = x.prefix().is_vertex() ? "" : to_string(g, x.prefix());
  return head + ";(" + to_string(g, x.cycle()) + ")";
}

}  // namespace pathalg
