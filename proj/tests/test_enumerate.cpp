#include <doctest.h>

#include <set>

#include "pturan/canonical.hpp"
#include "pturan/enumerate.hpp"
#include "pturan/errors.hpp"
#include "pturan/graph.hpp"
#include "pturan/graph6.hpp"
#include "pturan/pattern.hpp"
#include "pturan/planar.hpp"

using namespace pturan;

namespace {

std::set<CanonKey> key_set(const std::vector<Graph>& gs) {
  std::set<CanonKey> s;
  for (const Graph& g : gs) s.insert(canonical(g).key);
  return s;
}

}  // namespace

TEST_SUITE("enumerate") {
  TEST_CASE("small counts") {
    EnumerationConstraints c;
    c.n = 4;
    CHECK(enumerate_graphs(c).size() == 11);
    c.n = 3;
    c.connected_only = true;
    CHECK(enumerate_graphs(c).size() == 2);
    c.n = 0;
    c.connected_only = false;
    CHECK(enumerate_graphs(c).size() == 1);
  }

  TEST_CASE("matches the filter oracle class-for-class at n <= 6") {
    for (int n = 1; n <= 6; ++n) {
      EnumerationConstraints profiles[5];
      for (auto& p : profiles) p.n = n;
      profiles[1].regular = 3;
      profiles[2].planar_only = true;
      profiles[3].planar_only = true;
      profiles[3].min_edges = profiles[3].max_edges = 3 * n - 6;
      profiles[4].connected_only = true;
      for (const auto& c : profiles) {
        auto a = enumerate_graphs(c);
        auto b = filter_oracle(c);
        CHECK(a.size() == b.size());
        CHECK(key_set(a) == key_set(b));
      }
    }
  }

  TEST_CASE("no two emitted graphs are isomorphic; constraints hold") {
    EnumerationConstraints c;
    c.n = 7;
    c.planar_only = true;
    auto gs = enumerate_graphs(c);
    CHECK(key_set(gs).size() == gs.size());
    for (const Graph& g : gs) CHECK(is_planar_quick(g));

    c.regular = 3;
    for (const Graph& g : enumerate_graphs(c)) {
      CHECK(g.min_degree() == 3);
      CHECK(g.max_degree() == 3);
    }
  }

  TEST_CASE("cubic planar K4-free graphs on 8 vertices are the lemma triple") {
    EnumerationConstraints c;
    c.n = 8;
    c.regular = 3;
    c.planar_only = true;
    Pattern k4 = parse_pattern("K4");
    std::vector<Graph> found;
    for (const Graph& g : enumerate_graphs(c))
      if (is_free(g, k4)) found.push_back(g);
    CHECK(found.size() == 3);
  }

  TEST_CASE("triangulation counts 3..8 against the oracle") {
    std::vector<std::size_t> expect = {1, 1, 1, 2, 5, 14};
    for (int n = 3; n <= 8; ++n) {
      auto tris = enumerate_triangulations(n);
      CHECK(tris.size() == expect[static_cast<std::size_t>(n - 3)]);
      for (const Graph& t : tris) CHECK(is_triangulation(t));
      CHECK(key_set(tris).size() == tris.size());
      // oracle: planar graphs with exactly 3n-6 edges
      EnumerationConstraints c;
      c.n = n;
      c.planar_only = true;
      c.min_edges = c.max_edges = 3 * n - 6;
      if (n <= 8) CHECK(key_set(filter_oracle(c)) == key_set(tris));
    }
  }

  TEST_CASE("triangulation streams are identical across worker counts") {
    for (int n : {9, 10}) {
      auto a = enumerate_triangulations(n, 1);
      auto b = enumerate_triangulations(n, 8);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }
    CHECK(enumerate_triangulations(9).size() == 50);
    CHECK(enumerate_triangulations(10).size() == 233);
  }

  TEST_CASE("graph streams are identical across worker counts") {
    EnumerationConstraints c;
    c.n = 7;
    auto a = enumerate_graphs(c, 1);
    auto b = enumerate_graphs(c, 8);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    CHECK(a.size() == 1044);
  }

  TEST_CASE("budgets") {
    EnumerationConstraints c;
    c.n = 10;  // unconstrained n = 10 is over budget
    CHECK_THROWS_AS(enumerate_graphs(c), SizeError);
    c.planar_only = true;  // pruning admits n = 10
    CHECK_NOTHROW(enumerate_graphs(EnumerationConstraints{.n = 2, .planar_only = true}));
    CHECK_THROWS_AS(enumerate_triangulations(13), SizeError);
    CHECK_THROWS_AS(enumerate_triangulations(2), SizeError);
    EnumerationConstraints o;
    o.n = 9;
    CHECK_THROWS_AS(filter_oracle(o), SizeError);
  }
}
