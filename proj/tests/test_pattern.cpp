#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "pturan/errors.hpp"
#include "pturan/family.hpp"
#include "pturan/graph.hpp"
#include "pturan/pattern.hpp"

using namespace pturan;

namespace {

// Test-only oracle: try every injective vertex map host <- pattern.
bool naive_contains(const Graph& host, const Graph& pat) {
  if (pat.order() > host.order()) return false;
  std::vector<int> sel(static_cast<size_t>(host.order()));
  std::iota(sel.begin(), sel.end(), 0);
  std::sort(sel.begin(), sel.end());
  // iterate permutations of host vertices, use first |pat| as the map
  do {
    bool ok = true;
    for (auto [a, b] : pat.edges())
      if (!host.has_edge(sel[static_cast<size_t>(a)], sel[static_cast<size_t>(b)])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(sel.begin(), sel.end()));
  return false;
}

Graph random_graph(int n, std::mt19937& rng, int third = 1) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 3) < third) g.add_edge(u, v);
  return g;
}

void check_witness(const Graph& host, const Pattern& p,
                   const std::vector<int>& map) {
  std::vector<int> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  for (auto [a, b] : p.target.edges())
    CHECK(host.has_edge(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]));
}

Graph octahedron() { return join(empty_graph(2), cycle(4)); }

}  // namespace

TEST_SUITE("pattern") {
  TEST_CASE("grammar") {
    Pattern p = parse_pattern("2C3");
    CHECK(p.target.order() == 6);
    CHECK(p.target.edge_count() == 6);

    Pattern q = parse_pattern("C4 U C4^+");
    CHECK(q.target.order() == 9);
    CHECK(q.target.edge_count() == 9);

    Pattern r = parse_pattern("K2,4");
    CHECK(r.target.order() == 6);
    CHECK(r.target.edge_count() == 8);

    CHECK(parse_pattern("prism").target.edge_count() == 9);
    CHECK(parse_pattern("g6:Bw").target == complete(3));
    CHECK(parse_pattern("3C4").target.order() == 12);
    CHECK(parse_pattern("K4").target == complete(4));
    CHECK(parse_pattern("C5^+").target == pendant_cycle(5));

    // determinism: same text, identical target
    CHECK(parse_pattern("2C3 U K2,3").target ==
          parse_pattern("2C3 U K2,3").target);

    CHECK_THROWS_AS(parse_pattern("C2"), ParseError);
    CHECK_THROWS_AS(parse_pattern("K0,3"), ParseError);
    CHECK_THROWS_AS(parse_pattern(""), ParseError);
    CHECK_THROWS_AS(parse_pattern("2C3 U"), ParseError);
    CHECK_THROWS_AS(parse_pattern("Q5"), ParseError);
    try {
      parse_pattern("C3 U C2");
    } catch (const ParseError& e) {
      CHECK(e.offset == 6);
    }
  }

  TEST_CASE("named examples") {
    CHECK(contains(octahedron(), parse_pattern("prism")).has_value());
    CHECK(!contains(q_triangulation(3, 0), parse_pattern("prism")).has_value());
    auto id = contains(cycle(6), parse_pattern("C6"));
    REQUIRE(id.has_value());
    check_witness(cycle(6), parse_pattern("C6"), *id);

    CHECK(is_free(tc3_lower(10), parse_pattern("2C3")));
    CHECK(!is_free(complete(4), parse_pattern("C3")));
    CHECK(is_free(two_ck_lower(10, 4), parse_pattern("2C4")));
  }

  TEST_CASE("oracle equivalence on random hosts and the pattern suite") {
    std::mt19937 rng(404);
    std::vector<Pattern> pats;
    for (const char* s : {"C3", "C4", "2C3", "C3^+", "K2,2", "K2,3", "K1,3",
                          "K4", "C3 U C4", "prism", "C6"})
      pats.push_back(parse_pattern(s));
    for (int rep = 0; rep < 120; ++rep) {
      int n = 4 + static_cast<int>(rng() % 4);  // up to 7
      Graph host = random_graph(n, rng, 1 + static_cast<int>(rng() % 2));
      for (const Pattern& p : pats) {
        if (p.target.order() > 7) continue;
        auto got = contains(host, p);
        CHECK(got.has_value() == naive_contains(host, p.target));
        if (got) check_witness(host, p, *got);
        // fast paths and the generic engine agree
        auto gen = contains_generic(host, p);
        CHECK(got.has_value() == gen.has_value());
      }
    }
  }

  TEST_CASE("k2t fast path agrees with contains") {
    std::mt19937 rng(777);
    for (int rep = 0; rep < 150; ++rep) {
      int n = 4 + static_cast<int>(rng() % 5);
      Graph host = random_graph(n, rng, 2);
      for (int t = 1; t <= 5; ++t) {
        Pattern p = parse_pattern("K2," + std::to_string(t));
        if (p.target.order() > n) continue;
        CHECK(contains_k2t(host, t) == contains(host, p).has_value());
      }
    }
    CHECK(contains_k2t(octahedron(), 2));
    CHECK(!contains_k2t(hex_family(4, 0), 3));
    CHECK(!contains_k2t(cycle(8), 2));
  }

  TEST_CASE("monotonicity under supergraphs") {
    std::mt19937 rng(9);
    Pattern p = parse_pattern("2C3");
    for (int rep = 0; rep < 60; ++rep) {
      Graph host = random_graph(7, rng, 2);
      if (!contains(host, p)) continue;
      // adding any edge preserves containment
      Graph bigger = host;
      for (int u = 0; u < 7 && bigger.edge_count() == host.edge_count(); ++u)
        for (int v = u + 1; v < 7; ++v)
          if (!bigger.has_edge(u, v)) {
            bigger.add_edge(u, v);
            break;
          }
      CHECK(contains(bigger, p).has_value());
      CHECK(contains(disjoint_union(host, path(2)), p).has_value());
    }
  }

  TEST_CASE("disjoint components need disjoint images") {
    // one triangle only: 2C3 must be absent even though C3 is present
    Graph host = join(complete(1), disjoint_union(path(2), path(2)));
    CHECK(contains(host, parse_pattern("C3")).has_value());
    CHECK(!contains(host, parse_pattern("2C3")).has_value());

    // isolated pattern vertices consume spare host vertices
    Pattern k1s = parse_pattern("C3 U 2K1");
    CHECK(!contains(complete(4), k1s).has_value());
    CHECK(contains(complete(5), k1s).has_value());
    auto m = contains(disjoint_union(cycle(3), empty_graph(2)), k1s);
    REQUIRE(m.has_value());
    check_witness(disjoint_union(cycle(3), empty_graph(2)), k1s, *m);
  }

  TEST_CASE("cycle finder matches spec cases") {
    CHECK(find_cycle_of_length(cycle(9), 9).has_value());
    CHECK(!find_cycle_of_length(cycle(9), 8).has_value());
    CHECK(find_cycle_of_length(complete(5), 3).has_value());
    CHECK(find_cycle_of_length(complete(5), 5).has_value());
    CHECK(!find_cycle_of_length(path(6), 3).has_value());
    auto c = find_cycle_of_length(octahedron(), 4);
    REQUIRE(c.has_value());
    CHECK(c->size() == 4);
  }

  TEST_CASE("budget exhaustion is an error, not absence") {
    Graph big = hex_family(5, 0);
    SearchBudget tiny{3};
    CHECK_THROWS_AS(contains(big, parse_pattern("2C5"), tiny), BudgetError);
  }
}
