#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "pathalg/error.hpp"
#include "pathalg/leavitt.hpp"

using namespace pathalg;
using namespace pathalg::testing;

namespace {

struct Fixture {
  GraphPtr r1 = share(rose(1));
  GraphPtr r2 = share(rose(2));
  GraphPtr t = share(toeplitz());
  GraphPtr a3 = share(line(3));
  Ring q = Ring::rationals();

  LeavittElement v(const GraphPtr& g, const char* name) {
    return LeavittElement::vertex(g, q, *g->find_vertex(name));
  }
  LeavittElement e(const GraphPtr& g, const char* name) {
    return LeavittElement::edge(g, q, *g->find_edge(name));
  }
  LeavittElement s(const GraphPtr& g, const char* name) {
    return LeavittElement::ghost(g, q, *g->find_edge(name));
  }
};

bool has_reducible(const LeavittElement& x) {
  for (const auto& [m, c] : x.terms()) {
    if (is_reducible(x.graph(), m)) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE_FIXTURE(Fixture, "monomial products") {
  CHECK(to_string(e(r2, "e") * s(r2, "f") * (e(r2, "f") * s(r2, "e"))) == "e e*");
  CHECK((s(r2, "e") * e(r2, "f")).empty());
  CHECK(to_string(s(r2, "e") * e(r2, "e")) == "v");
  LeavittElement x = e(r2, "e") * s(r2, "f");
  CHECK(to_string(v(r2, "v") * x) == to_string(x));
  CHECK(to_string(e(t, "e") * e(t, "f")) == "e f");
  CHECK((e(t, "f") * e(t, "e")).empty());
  CHECK_THROWS_AS(Monomial::make(Path::vertex(VertexId{0}), Path::vertex(VertexId{1})),
                  DomainError);
}

TEST_CASE_FIXTURE(Fixture, "normal forms") {
  CHECK(to_string(normal_form(e(r2, "e") * s(r2, "e"))) == "v - f f*");
  CHECK(to_string(normal_form(e(t, "e") * s(t, "e"))) == "u - f f*");
  CHECK(to_string(normal_form(e(r2, "f") * s(r2, "f"))) == "f f*");
  CHECK(special_edge(*r2, VertexId{0}) == *r2->find_edge("e"));
  CHECK_THROWS_AS(special_edge(*t, *t->find_vertex("v")), DomainError);
}

TEST_CASE_FIXTURE(Fixture, "zero tests") {
  CHECK(is_zero(v(r2, "v") - e(r2, "e") * s(r2, "e") - e(r2, "f") * s(r2, "f")));
  CHECK_FALSE(is_zero(v(r2, "v") - e(r2, "e") * s(r2, "e")));
  CHECK(is_zero(v(t, "u") - e(t, "e") * s(t, "e") - e(t, "f") * s(t, "f")));
  CHECK_FALSE(is_zero(v(r1, "v") - e(r1, "e") * e(r1, "e") * s(r1, "e")));
}

TEST_CASE_FIXTURE(Fixture, "involution and grading examples") {
  CHECK(to_string(involution(e(r2, "e") * s(r2, "f"))) == "f e*");
  LeavittElement x = v(r2, "v") + e(r2, "e") + s(r2, "f");
  CHECK(to_string(degree_component(x, 0)) == "v");
  CHECK(to_string(degree_component(x, 1)) == "e");
  CHECK(to_string(degree_component(x, -1)) == "f*");
  CHECK(degrees(x) == std::vector<std::int64_t>{-1, 0, 1});
}

TEST_CASE_FIXTURE(Fixture, "pi and its inverse on examples") {
  CHECK(to_string(to_steinberg(e(r2, "e"))) == "Z(e|v)");
  CHECK(to_string(to_steinberg(v(r2, "v"))) == "Z(v|v)");
  CHECK(to_string(to_steinberg(e(r2, "e") * s(r2, "f"))) == "Z(e|f)");
  const Graph& g = *r2;
  auto cut = SteinbergElement::indicator(r2, atom_of(g, "v", "v", {"e"}), Scalar::one(q));
  CHECK(to_string(from_steinberg(cut)) == "v - e e*");
  auto ef = SteinbergElement::indicator(r2, atom_of(g, "e", "f"), Scalar::one(q));
  CHECK(to_string(from_steinberg(ef)) == "e f*");
}

TEST_CASE_FIXTURE(Fixture, "degree-zero reduction examples") {
  auto a = reduce_degree_zero(v(r2, "v"));
  CHECK(a.alpha == Path::vertex(VertexId{0}));
  CHECK(a.s == Scalar::one(q));
  auto b = reduce_degree_zero(e(r1, "e") * s(r1, "e"));
  CHECK(to_string(*r1, b.alpha) == "e");
  CHECK(to_string(*r1, b.beta) == "e");
  CHECK(b.s == Scalar::one(q));
  auto c = reduce_degree_zero(v(r2, "v") + e(r2, "e") * s(r2, "e"));
  CHECK(to_string(*r2, c.alpha) == "e");
  CHECK(c.s == Scalar(q, 2));
  CHECK_THROWS_WITH_AS(reduce_degree_zero(e(r2, "e")), "degree nonzero", DomainError);
  CHECK_THROWS_WITH_AS(reduce_degree_zero(v(r2, "v") - e(r2, "e") * s(r2, "e") -
                                          e(r2, "f") * s(r2, "f")),
                       "zero input", DomainError);
}

TEST_CASE("insufficient truncation is reported") {
  Graph g = rose(1);
  g.declare_singular(VertexId{0});
  GraphPtr p = share(g);
  Ring q = Ring::rationals();
  LeavittElement v = LeavittElement::vertex(p, q, VertexId{0});
  LeavittElement e = LeavittElement::edge(p, q, EdgeId{0});
  LeavittElement x = v - e * involution(e);
  CHECK_FALSE(is_zero(x));
  CHECK_THROWS_WITH_AS(reduce_degree_zero(x),
                       "insufficient truncation at singular vertex v", DomainError);
}

TEST_CASE_FIXTURE(Fixture, "pi is a graded algebra isomorphism on samples") {
  Rng rng(kSeed);
  for (const GraphPtr& g : {r2, t, a3}) {
    for (int i = 0; i < 60; ++i) {
      LeavittElement x = random_leavitt(g, q, rng);
      LeavittElement y = random_leavitt(g, q, rng);
      CHECK(equals(to_steinberg(x * y), to_steinberg(x) * to_steinberg(y)));
      CHECK(equals(to_steinberg(x + y), to_steinberg(x) + to_steinberg(y)));
      CHECK(equals(to_steinberg(involution(x)), involution(to_steinberg(x))));
      for (std::int64_t d = -3; d <= 3; ++d) {
        CHECK(equals(to_steinberg(degree_component(x, d)),
                     degree_component(to_steinberg(x), d)));
      }
      CHECK(equals(from_steinberg(to_steinberg(x)), x));
      SteinbergElement f = random_steinberg(g, q, rng);
      CHECK(equals(to_steinberg(from_steinberg(f)), f));
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "the two zero tests agree") {
  Rng rng(kSeed + 1);
  for (const GraphPtr& g : {r2, t, a3, r1}) {
    for (int i = 0; i < 150; ++i) {
      LeavittElement x = random_leavitt(g, q, rng);
      // add (CK2) relators so that some samples vanish
      if (coin(rng)) {
        x = x - normal_form(x);
      }
      const bool nf_empty = normal_form(x).empty();
      CHECK(nf_empty == to_steinberg(x).is_zero());
      CHECK(is_zero(x) == nf_empty);
      CHECK_FALSE(has_reducible(normal_form(x)));
      CHECK(equals(normal_form(x), x));
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "algebra laws and involution") {
  Rng rng(kSeed + 2);
  for (const GraphPtr& g : {r2, t}) {
    for (int i = 0; i < 40; ++i) {
      LeavittElement x = random_leavitt(g, q, rng, 3, 2);
      LeavittElement y = random_leavitt(g, q, rng, 3, 2);
      LeavittElement z = random_leavitt(g, q, rng, 3, 2);
      CHECK(equals((x * y) * z, x * (y * z)));
      CHECK(equals(involution(involution(x)), x));
      CHECK(equals(involution(x * y), involution(y) * involution(x)));
      LeavittElement sum(g, q);
      for (std::int64_t d : degrees(x)) {
        sum = sum + degree_component(x, d);
      }
      CHECK(equals(sum, x));
      LeavittElement unit = vertex_sum(g, q, support_vertices(x));
      CHECK(equals(unit * x, x));
      CHECK(equals(x * unit, x));
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "irreducible monomials are independent") {
  Rng rng(kSeed + 3);
  for (const GraphPtr& g : {r2, t, r1}) {
    auto basis = irreducible_monomials(*g, 2);
    for (const auto& m : basis) {
      CHECK_FALSE(is_reducible(*g, m));
      CHECK_FALSE(is_zero(LeavittElement::monomial(g, m, Scalar::one(q))));
    }
    for (int i = 0; i < 100; ++i) {
      LeavittElement x(g, q);
      const std::size_t n = uniform(rng, 1, 5);
      for (std::size_t k = 0; k < n; ++k) {
        x.add_term(random_coeff(q, rng), basis[uniform(rng, 0, basis.size() - 1)]);
      }
      CHECK(is_zero(x) == x.empty());
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "degree-zero reduction on random elements") {
  Rng rng(kSeed + 4);
  for (const GraphPtr& g : {r2, t, a3}) {
    for (int i = 0; i < 60; ++i) {
      LeavittElement x = degree_component(random_leavitt(g, q, rng, 5, 3), 0);
      if (is_zero(x)) {
        continue;
      }
      DegreeZeroReduction red = reduce_degree_zero(x);
      CHECK_FALSE(red.s.is_zero());
      LeavittElement a = LeavittElement::monomial(
          g, Monomial{Path::vertex(red.alpha.range()), red.alpha}, Scalar::one(q));
      LeavittElement b = LeavittElement::monomial(
          g, Monomial{red.beta, Path::vertex(red.beta.range())}, Scalar::one(q));
      CHECK(equals(a * x * b,
                   scale(red.s, LeavittElement::vertex(g, q, red.alpha.range()))));
    }
  }
}
