#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <map>
#include <set>
#include <vector>

#include "pturan/canonical.hpp"
#include "pturan/errors.hpp"
#include "pturan/graph.hpp"

using namespace pturan;

namespace {

// Test-only oracle: canonical key as the max packed adjacency over all n!
// relabelings, and orbits from the full automorphism set.
struct BruteCanon {
  std::pair<std::uint64_t, std::uint64_t> key{0, 0};
  std::vector<int> orbit;
};

std::pair<std::uint64_t, std::uint64_t> pack_perm(const Graph& g,
                                                  const std::vector<int>& lab) {
  std::uint64_t lo = 0, hi = 0;
  int b = 0;
  int n = g.order();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++b)
      if (g.has_edge(lab[static_cast<size_t>(i)], lab[static_cast<size_t>(j)])) {
        if (b < 64)
          lo |= std::uint64_t{1} << b;
        else
          hi |= std::uint64_t{1} << (b - 64);
      }
  return {lo, hi};
}

BruteCanon brute_canonical(const Graph& g) {
  int n = g.order();
  std::vector<int> lab(static_cast<size_t>(n));
  std::iota(lab.begin(), lab.end(), 0);
  BruteCanon out;
  out.orbit.resize(static_cast<size_t>(n));
  std::iota(out.orbit.begin(), out.orbit.end(), 0);
  bool first = true;
  std::vector<int> ident = lab;
  do {
    auto key = pack_perm(g, lab);
    if (first || key > out.key) {
      out.key = key;
      first = false;
    }
    // automorphism test: lab as a map v -> lab[v]
    bool aut = true;
    for (int u = 0; u < n && aut; ++u)
      for (int v = u + 1; v < n && aut; ++v)
        if (g.has_edge(u, v) !=
            g.has_edge(lab[static_cast<size_t>(u)], lab[static_cast<size_t>(v)]))
          aut = false;
    if (aut)
      for (int v = 0; v < n; ++v) {
        int a = std::min(out.orbit[static_cast<size_t>(v)],
                         out.orbit[static_cast<size_t>(lab[static_cast<size_t>(v)])]);
        // propagate min through both ends
        int x = out.orbit[static_cast<size_t>(v)];
        int y = out.orbit[static_cast<size_t>(lab[static_cast<size_t>(v)])];
        for (int w = 0; w < n; ++w)
          if (out.orbit[static_cast<size_t>(w)] == x ||
              out.orbit[static_cast<size_t>(w)] == y)
            out.orbit[static_cast<size_t>(w)] = a;
      }
  } while (std::next_permutation(lab.begin(), lab.end()));
  return out;
}

Graph random_graph(int n, std::mt19937& rng, int density_mod) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 3) < density_mod) g.add_edge(u, v);
  return g;
}

Graph octahedron() { return join(empty_graph(2), cycle(4)); }

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("induces the same classes as the all-permutations oracle, n <= 5") {
    // The two canonical forms pick different representatives; what must
    // agree is the partition into isomorphism classes, and the orbits.
    for (int n = 1; n <= 5; ++n) {
      int m = n * (n - 1) / 2;
      std::map<CanonKey, std::set<std::pair<std::uint64_t, std::uint64_t>>> fwd;
      std::map<std::pair<std::uint64_t, std::uint64_t>, std::set<CanonKey>> rev;
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Graph g(n);
        int b = 0;
        for (int j = 1; j < n; ++j)
          for (int i = 0; i < j; ++i, ++b)
            if (mask >> b & 1u) g.add_edge(i, j);
        CanonicalForm cf = canonical(g);
        BruteCanon bc = brute_canonical(g);
        fwd[cf.key].insert(bc.key);
        rev[bc.key].insert(cf.key);
        for (int v = 0; v < n; ++v)
          CHECK(static_cast<int>(cf.orbit[static_cast<size_t>(v)]) ==
                bc.orbit[static_cast<size_t>(v)]);
      }
      for (const auto& [k, s] : fwd) CHECK(s.size() == 1);
      for (const auto& [k, s] : rev) CHECK(s.size() == 1);
    }
  }

  TEST_CASE("orbits agree with the oracle on random graphs at n = 6, 7") {
    std::mt19937 rng(2024);
    for (int n : {6, 7}) {
      for (int rep = 0; rep < (n == 6 ? 300 : 60); ++rep) {
        Graph g = random_graph(n, rng, 1 + static_cast<int>(rng() % 2));
        CanonicalForm cf = canonical(g);
        BruteCanon bc = brute_canonical(g);
        for (int v = 0; v < n; ++v)
          CHECK(static_cast<int>(cf.orbit[static_cast<size_t>(v)]) ==
                bc.orbit[static_cast<size_t>(v)]);
        // key invariance under random relabeling
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical(apply_permutation(g, perm)).key == cf.key);
      }
    }
  }

  TEST_CASE("key is invariant under 1000 random relabelings of the octahedron") {
    Graph oct = octahedron();
    CanonKey base = canonical(oct).key;
    std::mt19937 rng(99);
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<CanonKey> keys;
    for (int rep = 0; rep < 1000; ++rep) {
      std::shuffle(perm.begin(), perm.end(), rng);
      keys.insert(canonical(apply_permutation(oct, perm)).key);
    }
    CHECK(keys.size() == 1);
    CHECK(*keys.begin() == base);
  }

  TEST_CASE("perm maps the graph onto the key's representative") {
    std::mt19937 rng(5);
    for (int rep = 0; rep < 100; ++rep) {
      int n = 1 + static_cast<int>(rng() % 10);
      Graph g = random_graph(n, rng, 2);
      CanonicalForm cf = canonical(g);
      std::vector<int> perm(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v) perm[static_cast<size_t>(v)] = cf.perm[static_cast<size_t>(v)];
      CHECK(apply_permutation(g, perm) == graph_from_key(cf.key));
    }
  }

  TEST_CASE("isomorphic pairs") {
    CHECK(isomorphic(cycle(4), complete_bipartite(2, 2)));
    CHECK(!isomorphic(path(4), complete_bipartite(1, 3)));
    CHECK(isomorphic(join(complete(2), path(4)),
                     join(path(2), path(4))));  // K_2 = P_2
    CHECK(!isomorphic(cycle(6), copies(2, cycle(3))));
  }

  TEST_CASE("high-symmetry graphs stay cheap") {
    // These have huge automorphism groups; orbit pruning keeps the leaf
    // count polynomial. The checks are on key sanity.
    for (const Graph& g : {empty_graph(12), complete(12), copies(4, cycle(3)),
                           complete_bipartite(6, 6)}) {
      CanonicalForm cf = canonical(g);
      CHECK(cf.key.n == g.order());
      // one orbit when vertex-transitive
      CHECK(cf.orbit[0] == 0);
    }
    CHECK(canonical(empty_graph(12)).key.lo == 0);
    CHECK(canonical(complete(12)).key.hi != 0);
  }

  TEST_CASE("size cap") {
    CHECK_THROWS_AS(canonical(empty_graph(17)), SizeError);
  }
}
