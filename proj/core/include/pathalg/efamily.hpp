#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pathalg/error.hpp"
#include "pathalg/leavitt.hpp"

namespace pathalg {

/// Target algebras need exact equality (through `is_zero`) and R-algebra
/// operations.
template <class A>
concept ExactAlgebra = requires(const A& a, const A& b, const Scalar& r) {
  { a + b } -> std::convertible_to<A>;
  { a - b } -> std::convertible_to<A>;
  { a * b } -> std::convertible_to<A>;
  { r * a } -> std::convertible_to<A>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

/// Images of the generators: `vertices[v]`, `edges[e]` and `ghosts[e]` indexed
/// by vertex and edge id.
template <ExactAlgebra A>
struct EFamily {
  std::vector<A> vertices;
  std::vector<A> edges;
  std::vector<A> ghosts;
};

struct RelationCheck {
  std::string name;
  bool holds = true;
  std::string first_failure;
};

struct EFamilyReport {
  std::vector<RelationCheck> relations;
  bool vertices_nonzero = true;
  std::string nonzero_failure;
  std::vector<std::string> certificates;

  bool relations_hold() const {
    for (const RelationCheck& r : relations) {
      if (!r.holds) {
        return false;
      }
    }
    return true;
  }
  bool accepted() const { return relations_hold() && vertices_nonzero; }
  bool has_certificate(const std::string& prefix) const {
    for (const std::string& c : certificates) {
      if (c.rfind(prefix, 0) == 0) {
        return true;
      }
    }
    return false;
  }
};

/// Degree of a homogeneous element; nullopt when not homogeneous.
template <class A>
using DegreeMap = std::function<std::optional<std::int64_t>(const A&)>;

/// Nonzero probes r for the hypothesis r v != 0: every nonzero residue mod n,
/// otherwise just 1.
std::vector<Scalar> ring_probes(const Ring& ring);

template <ExactAlgebra A>
EFamilyReport verify_efamily(const Graph& g, const Ring& ring, const EFamily<A>& fam,
                             const DegreeMap<A>& degree = {}) {
  if (fam.vertices.size() != g.vertex_count() || fam.edges.size() != g.edge_count() ||
      fam.ghosts.size() != g.edge_count()) {
    throw DomainError("family size does not match graph");
  }
  EFamilyReport report;
  report.relations.reserve(5);
  auto check = [&](const std::string& name) -> RelationCheck& {
    report.relations.push_back(RelationCheck{name, true, {}});
    return report.relations.back();
  };
  auto fail = [](RelationCheck& rc, const std::string& what) {
    if (rc.holds) {
      rc.holds = false;
      rc.first_failure = what;
    }
  };
  const auto& a = fam.vertices;
  const auto& b = fam.edges;
  const auto& c = fam.ghosts;

  RelationCheck& v_rel = check("V");
  for (VertexId v : g.vertices()) {
    for (VertexId w : g.vertices()) {
      const A prod = a[v.index] * a[w.index];
      const bool ok = v == w ? is_zero(prod - a[v.index]) : is_zero(prod);
      if (!ok) {
        fail(v_rel, v == w ? "v v = v at v = " + g.name(v)
                           : "v w = 0 at v = " + g.name(v) + ", w = " + g.name(w));
      }
    }
  }

  RelationCheck& e1 = check("E1");
  RelationCheck& e2 = check("E2");
  for (EdgeId e : g.edges()) {
    const A& s = a[g.source(e).index];
    const A& r = a[g.range(e).index];
    if (!is_zero(s * b[e.index] - b[e.index])) {
      fail(e1, "s(e) e = e at e = " + g.name(e));
    }
    if (!is_zero(b[e.index] * r - b[e.index])) {
      fail(e1, "e r(e) = e at e = " + g.name(e));
    }
    if (!is_zero(r * c[e.index] - c[e.index])) {
      fail(e2, "r(e) e* = e* at e = " + g.name(e));
    }
    if (!is_zero(c[e.index] * s - c[e.index])) {
      fail(e2, "e* s(e) = e* at e = " + g.name(e));
    }
  }

  RelationCheck& ck1 = check("CK1");
  for (EdgeId e : g.edges()) {
    for (EdgeId f : g.edges()) {
      const A prod = c[e.index] * b[f.index];
      if (e == f) {
        if (!is_zero(prod - a[g.range(e).index])) {
          fail(ck1, "e*e = r(e) at e = " + g.name(e));
        }
      } else if (!is_zero(prod)) {
        fail(ck1, "e*f = 0 at e = " + g.name(e) + ", f = " + g.name(f));
      }
    }
  }

  RelationCheck& ck2 = check("CK2");
  for (VertexId v : g.vertices()) {
    if (!g.in_ck2(v)) {
      continue;
    }
    A rest = a[v.index];
    for (EdgeId e : g.out_edges(v)) {
      rest = rest - b[e.index] * c[e.index];
    }
    if (!is_zero(rest)) {
      fail(ck2, "v = sum e e* at v = " + g.name(v));
    }
  }

  for (const Scalar& r : ring_probes(ring)) {
    for (VertexId v : g.vertices()) {
      if (report.vertices_nonzero && is_zero(r * a[v.index])) {
        report.vertices_nonzero = false;
        report.nonzero_failure = r.to_string() + " " + g.name(v) + " = 0";
      }
    }
  }

  if (!report.accepted()) {
    return report;
  }
  if (degree) {
    bool graded = true;
    auto respects = [&](const A& x, std::int64_t d) {
      if (is_zero(x)) {
        return true;
      }
      std::optional<std::int64_t> got = degree(x);
      return got && *got == d;
    };
    for (VertexId v : g.vertices()) {
      graded = graded && respects(a[v.index], 0);
    }
    for (EdgeId e : g.edges()) {
      graded = graded && respects(b[e.index], 1) && respects(c[e.index], -1);
    }
    if (graded) {
      report.certificates.push_back("graded-injective (graded uniqueness theorem)");
    }
  }
  if (condition_L(g).holds) {
    report.certificates.push_back(
        "CK-injective (Cuntz-Krieger uniqueness theorem, Condition (L))");
  }
  return report;
}

std::string to_string(const EFamilyReport& report);

/// v -> 1_{Z(v)}, e -> 1_{Z(e,r(e))}, e* -> 1_{Z(r(e),e)} inside A_R(G_E).
EFamily<SteinbergElement> steinberg_family(GraphPtr graph, Ring ring);
/// The generators of L_R(E) themselves.
EFamily<LeavittElement> leavitt_family(GraphPtr graph, Ring ring);
/// Degree of a homogeneous nonzero element of either model.
std::optional<std::int64_t> homogeneous_degree(const SteinbergElement& f);
std::optional<std::int64_t> homogeneous_degree(const LeavittElement& x);

}  // namespace pathalg
