#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "pturan/graph.hpp"

namespace pturan {

// Supported order for exact canonicalization. Everything the artifact needs
// isomorphism for lives at n <= 12; 16 leaves headroom.
inline constexpr int kCanonMaxVertices = 16;

// Total-order key with equal values exactly for isomorphic graphs. The bits
// are the upper adjacency triangle of the canonically relabeled graph,
// column-major, so the key doubles as a packed canonical representative.
struct CanonKey {
  std::uint8_t n = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  friend auto operator<=>(const CanonKey&, const CanonKey&) = default;
};

struct CanonicalForm {
  CanonKey key;
  std::array<std::uint8_t, 16> perm{};   // perm[v] = canonical label of v
  std::array<std::uint8_t, 16> orbit{};  // min vertex of v's automorphism orbit
  int n = 0;
};

// Degree refinement plus backtracking over the residual search tree, with
// discovered-automorphism orbit pruning. Throws SizeError above the cap.
CanonicalForm canonical(const Graph& g);

// Kernel entry point: rows[v] is the 16-bit neighbor mask of v.
CanonicalForm canonical_raw(int n, const std::uint16_t* rows);

bool isomorphic(const Graph& g, const Graph& h);

Graph canonical_graph(const Graph& g);
Graph graph_from_key(const CanonKey& key);

std::uint64_t key_hash(const CanonKey& k);
std::string key_hex(const CanonKey& k);

}  // namespace pturan
