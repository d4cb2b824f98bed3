#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace pturan {

// Simple undirected graph on labeled vertices 0..n-1. Adjacency is kept as
// one 64-bit neighbor mask per vertex, which caps the order at 64; every
// construction and search in this project lives well below that.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n,
                          std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // Neighbor set of v as a bitmask.
  std::uint64_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const;
  int max_degree() const;
  int min_degree() const;
  std::vector<int> degree_sequence() const;  // non-increasing
  std::vector<std::pair<int, int>> edges() const;

  std::uint64_t vertex_mask() const;
  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Named primitives. Sizes must be non-negative; cycles need length >= 3;
// complete_bipartite needs both sides >= 1.
Graph empty_graph(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int s, int t);

// C_k plus one pendant edge, on k+1 vertices. The pendant vertex is k.
Graph pendant_cycle(int k);

// Join: disjoint union plus all edges between the two sides. Vertices of g
// keep their labels, vertices of h are shifted by |g|.
Graph join(const Graph& g, const Graph& h);

// Disjoint union; the i-th operand's vertices are shifted by the total order
// of the operands before it. The empty graph is the identity.
Graph disjoint_union(std::span<const Graph> gs);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph copies(int t, const Graph& h);

// Remaining vertices keep their relative order.
Graph remove_vertex(const Graph& g, int v);
Graph induced_subgraph(const Graph& g, std::uint64_t keep);

// perm[v] = new label of v; perm must be a bijection on 0..n-1.
Graph apply_permutation(const Graph& g, std::span<const int> perm);

bool is_connected(const Graph& g);
int component_count(const Graph& g);
// Vertex masks of the connected components, ordered by smallest member.
std::vector<std::uint64_t> components(const Graph& g);

}  // namespace pturan
