#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pturan/graph.hpp"

namespace pturan {

// Combinatorial embedding: a cyclic neighbor order per vertex plus the face
// walks it induces. Face walks traverse every directed edge exactly once; a
// bridge therefore contributes twice to the order of a single face.
struct PlaneEmbedding {
  int n = 0;
  std::vector<std::vector<int>> rotation;
  std::vector<std::vector<int>> face_walks;  // each walk lists vertices in order
};

struct KuratowskiWitness {
  enum class Kind { K5, K33 };
  Kind kind;
  std::vector<std::pair<int, int>> edges;  // a K5- or K33-subdivision
};

struct PlanarityResult {
  bool planar = false;
  std::optional<PlaneEmbedding> embedding;   // set when planar
  std::optional<KuratowskiWitness> witness;  // set when not
};

// Full test with witness either way. Any simple graph with n >= 3 and
// e > 3n-6 is rejected by the Euler bound before the structural test; the
// witness is then still extracted by the structural path.
PlanarityResult is_planar(const Graph& g);

// Boolean-only fast path for search inner loops.
bool is_planar_quick(const Graph& g);

// Requires g planar and connected; throws std::invalid_argument otherwise.
PlaneEmbedding embed(const Graph& g);

struct FaceCensus {
  std::map<int, int> f;  // face order -> count
  int total = 0;
  int count(int order) const {
    auto it = f.find(order);
    return it == f.end() ? 0 : it->second;
  }
};

FaceCensus face_census(const PlaneEmbedding& emb);

// n >= 3, planar, connected, e = 3n-6; equivalently every face is a 3-face.
bool is_triangulation(const Graph& g);

// G is outerplanar iff K1 + G is planar.
bool is_outerplanar(const Graph& g);

}  // namespace pturan
