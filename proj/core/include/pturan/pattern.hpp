#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pturan/graph.hpp"

namespace pturan {

struct SearchBudget {
  std::uint64_t max_nodes = 500'000'000;
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

// Parsed forbidden-subgraph expression.
//
// Grammar (ASCII):  expr   := clause (" U " clause)*
//                   clause := [INT] atom
//                   atom   := "C" INT ["^+"] | "K" INT | "K" INT "," INT
//                           | "prism" | "g6:" GRAPH6
// A leading INT >= 1 replicates the atom. Examples: "2C3", "3C4", "C5^+",
// "K2,3", "g6:Bw".
struct Pattern {
  std::string source;
  std::string display_name;
  Graph target;  // disjoint union of the parsed clauses

  // Matching plan, derived at parse time.
  struct Comp {
    std::vector<int> verts;           // target labels, in search order
    std::vector<std::uint64_t> back;  // per position: mask of earlier positions adjacent
    bool same_as_prev = false;        // isomorphic to the previous component
  };
  std::vector<Comp> comps;  // non-trivial components, descending by size
  int isolated = 0;         // number of K1 components
};

Pattern parse_pattern(std::string_view text);

// Injective map from p.target into g preserving edges (subgraph containment,
// not induced). Returns the witness map (target vertex -> host vertex) or
// nullopt; nullopt is exact. Throws BudgetError when the node budget runs
// out, which proves nothing either way.
std::optional<std::vector<int>> contains(const Graph& g, const Pattern& p,
                                         const SearchBudget& budget = {},
                                         SearchStats* stats = nullptr);

bool is_free(const Graph& g, const Pattern& p, const SearchBudget& budget = {},
             SearchStats* stats = nullptr);

// True iff some vertex pair of g has at least t common neighbors, i.e. g
// contains K_{2,t}. Agrees with contains(g, "K2,t") by construction of both.
bool contains_k2t(const Graph& g, int t);

// Cycle of length exactly k, as a vertex sequence, or nullopt.
std::optional<std::vector<int>> find_cycle_of_length(
    const Graph& g, int k, const SearchBudget& budget = {},
    SearchStats* stats = nullptr);

// The backtracking engine without the single-cycle / K_{2,t} dispatch.
// Exposed so the fast paths can be property-tested against it.
std::optional<std::vector<int>> contains_generic(const Graph& g,
                                                 const Pattern& p,
                                                 const SearchBudget& budget = {},
                                                 SearchStats* stats = nullptr);

}  // namespace pturan
