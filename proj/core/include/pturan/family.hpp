#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pturan/graph.hpp"

namespace pturan {

// A graph with two distinguished adjacent vertices, the shared K_2 of the
// pasting constructions.
struct MarkedGraph {
  Graph graph;
  int x = 0;
  int y = 1;
};

// Every generator validates its own order/size/planarity contract on
// construction and throws ContractError on violation. Freeness contracts are
// checked by the pattern engine in tests and by `construct` in the CLI.

// 2K_1 + C_{n-2}: K_4-free triangulation. Apexes 0,1; cycle 2..n-1. n >= 6.
Graph double_wheel(int n);

// Q_k^l on n = 4k+2+l vertices (k >= 2, 0 <= l <= 3): k stacked 4-cycles
// u_{i,j} (label 4(i-1)+j-1, i in [k], j in [4]) with rung and diagonal
// edges, an apex u = 4k over the first cycle and v = 4k+1 over the last;
// each extra vertex x_j = 4k+2+(j-1) is stacked into the face
// (u_{k-1,j}, u_{k,j}, u_{k,j+1}). Prism-free triangulation.
Graph q_triangulation(int k, int l);

// Apex-path construction for 2C_3: path 0..n-3, u = n-2 joined to the whole
// path and to v = n-1, v joined to a maximum independent set of the path
// containing both ends. ceil(5n/2)-5 edges, 2C_3-free. n >= 6.
Graph tc3_lower(int n);

// K_2 + (paths) construction for 2C_k (n >= 2k >= 8): apexes 0,1 joined to
// a linear forest of t paths of k-2 vertices, one of 2k-3, and a remainder
// path of r = (n-3) mod (k-2) vertices.
Graph two_ck_lower(int n, int k);

// T_s^m: K_2 + P_{m-2} (x = 0, y = 1, path 2..m-1) with s-m extra vertices
// stacked into distinct 3-faces of the base, taken in sorted-triple order.
// m = s = 2 gives the bare K_2. For m >= 3, m <= s <= 3m-4: one new vertex
// per 3-face of the base at most.
MarkedGraph t_stack(int m, int s);

// Identify all x's, all y's, keep the shared edge once. x, y become 0, 1.
Graph paste_along_k2(std::span<const MarkedGraph> parts);

// Pasting construction for 2C_k, k >= 7 (odd k needs n >= 3k-3, even k
// n >= 3k-6): t blocks T^{p+1}_{3p-1} (odd k = 2p+1) or T^p_{3p-4} (even
// k = 2p), a remainder block, and one T_{2k-1}, pasted along the marked K_2.
Graph two_ck_lower_improved(int n, int k);

// H_l: hexagonal cylinder of l stacked 6-cycles; u_{i,j} = 6(i-1)+j-1.
Graph hex_cylinder(int l);

// R_k^r on n = 6k+r vertices (k >= 2, 0 <= r <= 5): hexagonal cylinder
// capped per r by wheels, apexes, or 2-/3-vertex gadgets. K_{2,3}-free
// triangulations. For k = 2, r = 0 the cylinder is empty and the two wheel
// rims are joined directly by the antiprism band (the icosahedron). The
// case k = 2, r = 1 (n = 13) is rejected: no triangulation on 13 vertices
// is K_{2,3}-free (exhaustively verified), so the contract is unsatisfiable.
Graph hex_family(int k, int r);
Graph hex_family_for_order(int n);  // n >= 12, picks k = n/6, r = n mod 6

// O_n: the n-cycle 0..n-1 plus the zigzag chords (1,n-1),(2,n-1),(2,n-2),
// (3,n-2),... (n-3 chords). Maximal outerplanar, max degree 4, 2n-3 edges.
Graph outer_snake(int n);

// Registry of the remaining named small graphs; each entry is validated
// against its contract when first built. Ids:
//   prism, g1, g2, g3, k1_c5, q2_minus_u, q2p, q2pp,
//   k2_p3_p1, k2_p3_p2, k2_p3_p3, d6, d7, o7p, o8p, j, jp, jpp,
//   k24_tri_13 (K_{2,4}-free 13-vertex triangulation; fills the n = 13 gap
//   that hex_family cannot cover for t = 4)
Graph small_witness(std::string_view id);
std::vector<std::string> small_witness_ids();

// The s-range of t_stack is read as s <= 3m-4 (one stacked vertex per 3-face
// of the base, 2m-4 of them), which is what the pasting blocks above need;
// reports carry this note wherever the pasting constructions appear.
inline constexpr const char* kTStackRangeNote =
    "t_stack upper bound for s implemented as 3m-4 (m plus one vertex per "
    "3-face of the base); the stated bound 2m-4 is inconsistent with the "
    "blocks the pasting construction instantiates and is treated as a typo";

// J, J', J'' are certified by contract only (order, 3n-8 edges, planar,
// K_{2,3}-free); the artifact picks the canonically least such graph.
inline constexpr const char* kJFamilyNote =
    "witnesses j/jp/jpp are canonically-least graphs meeting the stated "
    "contract (order, 3n-8 edges, planar, K_{2,3}-free), not a figure copy";

}  // namespace pturan
