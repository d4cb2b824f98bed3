#include <doctest.h>

#include <random>

#include "pturan/errors.hpp"
#include "pturan/graph.hpp"
#include "pturan/graph6.hpp"

using namespace pturan;

namespace {
Graph octahedron() { return join(empty_graph(2), cycle(4)); }
Graph prism() {
  return Graph::from_edges(6, {{0, 1},
                               {1, 2},
                               {2, 0},
                               {3, 4},
                               {4, 5},
                               {5, 3},
                               {0, 3},
                               {1, 4},
                               {2, 5}});
}
}  // namespace

TEST_SUITE("graph6") {
  TEST_CASE("fixed encodings, cross-checked against an external encoder") {
    CHECK(g6_encode(complete(3)) == "Bw");
    CHECK(g6_encode(cycle(5)) == "Dhc");
    CHECK(g6_encode(empty_graph(1)) == "@");
    CHECK(g6_encode(complete_bipartite(2, 3)) == "D]o");
    CHECK(g6_encode(prism()) == "E{Sw");
    // octahedron under the labeling apexes={0,1}, rim 2-3-4-5
    Graph oct = Graph::from_edges(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5},
                                      {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                      {2, 3}, {3, 4}, {4, 5}, {5, 2}});
    CHECK(g6_encode(oct) == "E^vg");
  }

  TEST_CASE("fixed decodings") {
    CHECK(g6_decode("Bw") == complete(3));
    CHECK(g6_decode("Dhc") == cycle(5));
    CHECK(g6_decode("@") == empty_graph(1));
    Graph pet = g6_decode("IheA@GUAo");  // Petersen
    CHECK(pet.order() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(pet.min_degree() == 3);
    CHECK(pet.max_degree() == 3);
    CHECK(g6_decode(">>graph6<<Bw") == complete(3));
  }

  TEST_CASE("sparse6 decodings from an external encoder") {
    CHECK(g6_decode(":Cda") == cycle(4));
    CHECK(g6_decode(":DaY_~") == cycle(5));
    CHECK(g6_decode(":Ea@aRgs") == prism());
  }

  TEST_CASE("round trip is the labeled identity") {
    std::mt19937 rng(31337);
    for (int rep = 0; rep < 200; ++rep) {
      int n = static_cast<int>(rng() % 20);
      Graph g(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng() & 1) g.add_edge(u, v);
      CHECK(g6_decode(g6_encode(g)) == g);
    }
    // labeled, not canonical: relabelings encode differently in general
    Graph a = path(3);
    Graph b = Graph::from_edges(3, {{0, 2}, {2, 1}});
    CHECK(g6_encode(a) != g6_encode(b));
  }

  TEST_CASE("boundary sizes") {
    Graph p62 = path(62);
    std::string enc = g6_encode(p62);
    CHECK(enc.size() == 317);
    CHECK(g6_decode(enc) == p62);
    CHECK(g6_decode(g6_encode(empty_graph(0))) == empty_graph(0));
    CHECK_THROWS_AS(g6_encode(empty_graph(63)), SizeError);
  }

  TEST_CASE("malformed inputs carry a byte offset") {
    CHECK_THROWS_AS(g6_decode(""), ParseError);
    CHECK_THROWS_AS(g6_decode("D"), ParseError);     // truncated body
    CHECK_THROWS_AS(g6_decode("Bw!"), ParseError);   // trailing bytes
    CHECK_THROWS_AS(g6_decode("B\x1f"), ParseError); // out of printable range
    try {
      g6_decode("Dh");
    } catch (const ParseError& e) {
      CHECK(e.offset >= 2);
    }
  }
}
