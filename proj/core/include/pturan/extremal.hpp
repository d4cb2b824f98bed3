#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pturan/bounds.hpp"
#include "pturan/graph.hpp"
#include "pturan/pattern.hpp"
#include "pturan/report.hpp"

namespace pturan {

struct ExtremalStats {
  std::uint64_t search_nodes = 0;  // pattern-engine nodes
  std::uint64_t bb_states = 0;     // distinct edge-deletion states
  std::size_t hosts = 0;           // graphs or triangulations examined
  double runtime_ms = 0;
  std::string summary() const;
};

struct ExtremalResult {
  int n = 0;
  std::string pattern;
  int value = 0;
  std::vector<std::string> witnesses;  // canonical graph6, sorted
  std::string method;                  // "filter" | "tri-bb"
  ExtremalStats stats;
};

// Exact maximum over the isomorph-free stream of planar graphs on n
// vertices. Oracle-grade; n <= 9.
ExtremalResult ex_filter(int n, const Pattern& p, const SearchBudget& budget = {});

// Maximum edge count of a p-free spanning subgraph of a triangulation,
// by branching on the edges of a found copy with best-so-far pruning.
int max_free_subgraph_edges(const Graph& tri, const Pattern& p,
                            const SearchBudget& budget = {},
                            ExtremalStats* stats = nullptr);

// Exact ex_P(n,p) as the max of max_free_subgraph_edges over all
// triangulations on n vertices (every planar graph on n >= 3 vertices spans
// some maximal planar graph). 3 <= n <= 12.
ExtremalResult ex_tri_bb(int n, const Pattern& p, int jobs = 1,
                         const SearchBudget& budget = {});

// Dispatch on method name ("filter" | "tri-bb").
ExtremalResult compute_ex(int n, const Pattern& p, const std::string& method,
                          int jobs = 1, const SearchBudget& budget = {});

// Registered theorem checkers. Ids: lemma88, dowden.c3, dowden.k4,
// main.prism, tc3, tc3.f3, prop.c3plus, cor1.tck, bipartite, lemma2, lemma3.
Report verify_theorem(const std::string& id, int from, int to,
                      const BoundParams& params, int jobs = 1);

// Registered conjecture scanners: "weak" (over n and k) and "c4" (over n).
Report scan_conjecture(const std::string& id, int n_from, int n_to, int k_from,
                       int k_to, int jobs = 1);

// ex_P(n, tC_k u C_k^+) = ex_P(n, (t+1)C_k) at t = 1, exact both sides.
Report verify_corollary_tck(int k, int from, int to, int jobs = 1);

}  // namespace pturan
