#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "pathalg/error.hpp"
#include "pathalg/graph.hpp"

using namespace pathalg;
using pathalg::testing::Rng;

namespace {

std::vector<std::string> names(const Graph& g, const std::vector<Path>& ps) {
  std::vector<std::string> out;
  for (const Path& p : ps) {
    out.push_back(to_string(g, p));
  }
  return out;
}

std::vector<std::string> names(const Graph& g, const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (VertexId v : vs) {
    out.push_back(g.name(v));
  }
  return out;
}

// Every edge word of length <= n that composes, found by brute force.
std::vector<std::vector<EdgeId>> all_words(const Graph& g, std::size_t n) {
  std::vector<std::vector<EdgeId>> out{{}}, level{{}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<std::vector<EdgeId>> next;
    for (const auto& w : level) {
      for (EdgeId e : g.edges()) {
        if (w.empty() || g.range(w.back()) == g.source(e)) {
          auto x = w;
          x.push_back(e);
          next.push_back(x);
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = next;
  }
  return out;
}

std::size_t brute_paths_into(const Graph& g, VertexId v, std::size_t n) {
  std::size_t count = 0;
  for (const auto& w : all_words(g, n)) {
    count += w.empty() ? 0 : g.range(w.back()) == v;
  }
  return count + 1;
}

// Simple cycles (no repeated vertex) up to length |E1|; true iff all have exits.
bool brute_condition_L(const Graph& g) {
  for (const auto& w : all_words(g, g.edge_count())) {
    if (w.empty() || g.range(w.back()) != g.source(w.front())) {
      continue;
    }
    std::set<VertexId> seen;
    bool simple = true;
    for (EdgeId e : w) {
      simple = simple && seen.insert(g.source(e)).second;
    }
    if (!simple) {
      continue;
    }
    bool exit = false;
    for (EdgeId e : w) {
      VertexId s = g.source(e);
      exit = exit || g.declared_singular(s) || g.out_edges(s).size() > 1;
    }
    if (!exit) {
      return false;
    }
  }
  return true;
}

Graph random_graph(Rng& rng) {
  Graph g;
  const std::size_t n = testing::uniform(rng, 1, 4);
  for (std::size_t i = 0; i < n; ++i) {
    g.add_vertex("w" + std::to_string(i));
  }
  const std::size_t m = testing::uniform(rng, 0, 5);
  for (std::size_t i = 0; i < m; ++i) {
    g.add_edge("a" + std::to_string(i), testing::random_vertex(g, rng),
               testing::random_vertex(g, rng));
  }
  return g;
}

}  // namespace

TEST_CASE("names are unique and endpoints must exist") {
  Graph g;
  VertexId v = g.add_vertex("v");
  CHECK_THROWS_AS(g.add_vertex("v"), DomainError);
  g.add_edge("e", v, v);
  CHECK_THROWS_AS(g.add_edge("e", v, v), DomainError);
  CHECK_THROWS_AS(g.add_edge("v", v, v), DomainError);
  CHECK_THROWS_AS(g.add_edge("f", v, VertexId{7}), DomainError);
  CHECK(g.find_edge("e").has_value());
  CHECK_FALSE(g.find_vertex("e").has_value());
}

TEST_CASE("singular vertices") {
  CHECK(names(toeplitz(), singular_vertices(toeplitz())) == std::vector<std::string>{"v"});
  CHECK(singular_vertices(rose(2)).empty());
  Graph r2 = rose(2);
  r2.declare_singular(VertexId{0});
  CHECK(names(r2, singular_vertices(r2)) == std::vector<std::string>{"v"});
  CHECK_FALSE(r2.in_ck2(VertexId{0}));
  CHECK_FALSE(r2.has_default_ck2());
  CHECK(sinks(r2).empty());
}

TEST_CASE("acyclicity with shortest witness") {
  CHECK(is_acyclic(line(3)).holds);
  auto r1 = is_acyclic(rose(1));
  REQUIRE_FALSE(r1.holds);
  CHECK(to_string(rose(1), *r1.witness) == "e");
  auto t = is_acyclic(toeplitz());
  REQUIRE_FALSE(t.holds);
  CHECK(to_string(toeplitz(), *t.witness) == "e");
}

TEST_CASE("condition (L) examples") {
  CHECK(condition_L(rose(2)).holds);
  CHECK(condition_L(line(3)).holds);
  auto r1 = condition_L(rose(1));
  REQUIRE_FALSE(r1.holds);
  CHECK(to_string(rose(1), *r1.witness) == "e");
  Graph r1s = rose(1);
  r1s.declare_singular(VertexId{0});
  CHECK(condition_L(r1s).holds);
}

TEST_CASE("condition (L) agrees with cycle enumeration") {
  Rng rng(testing::kSeed);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(rng);
    if (testing::coin(rng, 0.2)) {
      g.declare_singular(testing::random_vertex(g, rng));
    }
    CycleCheck c = condition_L(g);
    CHECK(c.holds == brute_condition_L(g));
    if (!c.holds) {
      const Path& w = *c.witness;
      REQUIRE(w.length() > 0);
      CHECK(w.source() == w.range());
      for (EdgeId e : w.edges()) {
        CHECK(g.out_edges(g.source(e)).size() == 1);
        CHECK(g.in_ck2(g.source(e)));
      }
    }
    CycleCheck a = is_acyclic(g);
    if (!a.holds) {
      CHECK(a.witness->source() == a.witness->range());
      CHECK(a.witness->length() > 0);
    }
  }
}

TEST_CASE("disjoint union") {
  Graph u = disjoint_union(line(3), line(2));
  CHECK(u.vertex_count() == 5);
  CHECK(u.edge_count() == 3);
  CHECK(sinks(u).size() == 2);
  CHECK(u.find_vertex("L.v3").has_value());
  CHECK(u.find_edge("R.e1").has_value());
  Graph ee = disjoint_union(toeplitz(), toeplitz());
  CHECK(names(ee, singular_vertices(ee)) == std::vector<std::string>{"L.v", "R.v"});
  Graph r = rose(2);
  r.declare_singular(VertexId{0});
  Graph rt = disjoint_union(r, toeplitz());
  CHECK(names(rt, singular_vertices(rt)) == std::vector<std::string>{"L.v", "R.v"});
}

TEST_CASE("paths into a vertex") {
  Graph a3 = line(3);
  CHECK(names(a3, paths_into(a3, VertexId{2})) ==
        std::vector<std::string>{"v3", "e2", "e1,e2"});
  Graph r2 = rose(2);
  CHECK(names(r2, paths_into(r2, VertexId{0}, 2)) ==
        std::vector<std::string>{"v", "e", "f", "e,e", "e,f", "f,e", "f,f"});
  CHECK_THROWS_WITH_AS(paths_into(r2, VertexId{0}), "unbounded enumeration on cyclic graph",
                       DomainError);
  Graph iso;
  iso.add_vertex("w");
  CHECK(paths_into(iso, VertexId{0}).size() == 1);
}

TEST_CASE("path counts satisfy the in-edge recursion and match brute force") {
  Rng rng(testing::kSeed);
  for (int i = 0; i < 50; ++i) {
    Graph g = testing::random_acyclic_graph(rng);
    for (VertexId v : g.vertices()) {
      std::size_t n = paths_into(g, v).size();
      std::size_t rec = 1;
      for (EdgeId e : g.in_edges(v)) {
        rec += paths_into(g, g.source(e)).size();
      }
      CHECK(n == rec);
      CHECK(n == brute_paths_into(g, v, g.vertex_count()));
    }
  }
}

TEST_CASE("path operations") {
  Graph r2 = rose(2);
  EdgeId e = *r2.find_edge("e"), f = *r2.find_edge("f");
  Path ef = Path::from_edges(r2, {e, f});
  CHECK(ef.length() == 2);
  CHECK(Path::edge(r2, e).is_prefix_of(ef));
  CHECK_FALSE(Path::edge(r2, f).is_prefix_of(ef));
  CHECK(Path::vertex(VertexId{0}).is_prefix_of(ef));
  CHECK(ef.drop(r2, 1) == Path::edge(r2, f));
  CHECK(ef.drop(r2, 2) == Path::vertex(VertexId{0}));
  CHECK(ef.prefix(r2, 1) == Path::edge(r2, e));
  CHECK(Path::edge(r2, e).concat(Path::edge(r2, f)) == ef);
  CHECK(Path::edge(r2, e) < ef);
  Graph a3 = line(3);
  CHECK_THROWS_AS(Path::from_edges(a3, {EdgeId{1}, EdgeId{0}}), DomainError);
}
