#include "pturan/graph.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

#include "pturan/errors.hpp"

namespace pturan {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  if (n > kMaxVertices)
    throw SizeError("graph order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(kMaxVertices));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n,
                        std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range [0," + std::to_string(n_) + ")");
}

int Graph::edge_count() const {
  int total = 0;
  for (std::uint64_t row : adj_) total += std::popcount(row);
  assert(total % 2 == 0);
  return total / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<size_t>(u)] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<size_t>(u)] &= ~(std::uint64_t{1} << v);
  adj_[static_cast<size_t>(v)] &= ~(std::uint64_t{1} << u);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[static_cast<size_t>(v)]);
}

int Graph::max_degree() const {
  int d = 0;
  for (std::uint64_t row : adj_) d = std::max(d, std::popcount(row));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = kMaxVertices;
  for (std::uint64_t row : adj_) d = std::min(d, std::popcount(row));
  return d;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> ds;
  ds.reserve(static_cast<size_t>(n_));
  for (int v = 0; v < n_; ++v) ds.push_back(degree(v));
  std::sort(ds.rbegin(), ds.rend());
  return ds;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> es;
  es.reserve(static_cast<size_t>(edge_count()));
  for (int u = 0; u < n_; ++u) {
    std::uint64_t rest = adj_[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      es.emplace_back(u, v);
    }
  }
  return es;
}

std::uint64_t Graph::vertex_mask() const {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle length must be >= 3");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int s, int t) {
  if (s < 1 || t < 1)
    throw std::invalid_argument("complete bipartite sides must be >= 1");
  Graph g(s + t);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < t; ++j) g.add_edge(i, s + j);
  return g;
}

Graph pendant_cycle(int k) {
  Graph g = cycle(k);
  Graph h(k + 1);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  h.add_edge(0, k);
  return h;
}

Graph join(const Graph& g, const Graph& h) {
  Graph r = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) r.add_edge(u, g.order() + v);
  return r;
}

Graph disjoint_union(std::span<const Graph> gs) {
  int n = 0;
  for (const Graph& g : gs) n += g.order();
  Graph r(n);
  int off = 0;
  for (const Graph& g : gs) {
    for (auto [u, v] : g.edges()) r.add_edge(off + u, off + v);
    off += g.order();
  }
  return r;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const Graph gs[] = {g, h};
  return disjoint_union(std::span<const Graph>(gs, 2));
}

Graph copies(int t, const Graph& h) {
  if (t < 1) throw std::invalid_argument("copies requires t >= 1");
  std::vector<Graph> gs(static_cast<size_t>(t), h);
  return disjoint_union(std::span<const Graph>(gs));
}

Graph remove_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("no such vertex");
  std::uint64_t keep = g.vertex_mask() & ~(std::uint64_t{1} << v);
  return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, std::uint64_t keep) {
  keep &= g.vertex_mask();
  std::vector<int> newlab(static_cast<size_t>(g.order()), -1);
  int m = 0;
  for (int v = 0; v < g.order(); ++v)
    if ((keep >> v) & 1u) newlab[static_cast<size_t>(v)] = m++;
  Graph r(m);
  for (auto [u, v] : g.edges())
    if (newlab[static_cast<size_t>(u)] >= 0 &&
        newlab[static_cast<size_t>(v)] >= 0)
      r.add_edge(newlab[static_cast<size_t>(u)],
                 newlab[static_cast<size_t>(v)]);
  return r;
}

Graph apply_permutation(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("permutation size mismatch");
  Graph r(g.order());
  for (auto [u, v] : g.edges())
    r.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
  if (r.edge_count() != g.edge_count())
    throw std::invalid_argument("perm is not a bijection");
  return r;
}

std::vector<std::uint64_t> components(const Graph& g) {
  std::vector<std::uint64_t> comps;
  std::uint64_t seen = 0;
  for (int s = 0; s < g.order(); ++s) {
    if ((seen >> s) & 1u) continue;
    std::uint64_t comp = std::uint64_t{1} << s;
    std::uint64_t frontier = comp;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint64_t nb = g.neighbors(v) & ~comp;
      comp |= nb;
      frontier |= nb;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

int component_count(const Graph& g) {
  return static_cast<int>(components(g).size());
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

}  // namespace pturan
