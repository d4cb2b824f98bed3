#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pturan/canonical.hpp"
#include "pturan/graph.hpp"

namespace pturan {

struct EnumerationConstraints {
  int n = 0;
  int min_degree = 0;
  int max_degree = Graph::kMaxVertices;
  std::optional<int> regular;
  long min_edges = 0;
  long max_edges = 1L << 30;
  bool planar_only = false;
  bool connected_only = false;
};

// Isomorph-free exhaustive generation by canonical augmentation: graphs grow
// one vertex at a time, and an extension is kept exactly when the new vertex
// lies in the automorphism orbit of the canonical deletion vertex. Output is
// one canonical representative per class, sorted by canonical key; the order
// does not depend on the worker count. Budget: n <= 9 unconstrained, n <= 10
// when planarity or a degree cap <= 5 prunes the tree.
std::vector<Graph> enumerate_graphs(const EnumerationConstraints& c,
                                    int jobs = 1);

// Plane triangulations (maximal planar graphs) on 3 <= n <= 12 vertices, one
// representative per class, by vertex-splitting expansion from K_4 with
// per-level canonical deduplication. Sorted by canonical key.
std::vector<Graph> enumerate_triangulations(int n, int jobs = 1);

// Independent slow path for cross-checking: brute force over labeled graphs
// (restricted to non-increasing degree labelings) deduplicated by canonical
// key. n <= 8.
std::vector<Graph> filter_oracle(const EnumerationConstraints& c);

}  // namespace pturan
