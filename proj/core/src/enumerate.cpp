#include "pturan/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <thread>
#include <unordered_set>

#include "pturan/errors.hpp"
#include "pturan/planar.hpp"

namespace pturan {

namespace {

struct KeyHash {
  std::size_t operator()(const CanonKey& k) const { return key_hash(k); }
};
using KeySet = std::unordered_set<CanonKey, KeyHash>;

Graph graph_from_rows(int n, const std::uint16_t* rows) {
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    std::uint16_t m = static_cast<std::uint16_t>(rows[v] >> (v + 1) << (v + 1));
    while (m) {
      int u = std::countr_zero(static_cast<unsigned>(m));
      m &= static_cast<std::uint16_t>(m - 1);
      g.add_edge(v, u);
    }
  }
  return g;
}

bool rows_connected(int n, const std::uint16_t* rows) {
  if (n <= 1) return true;
  std::uint16_t seen = 1, frontier = 1;
  while (frontier) {
    int v = std::countr_zero(static_cast<unsigned>(frontier));
    frontier = static_cast<std::uint16_t>(frontier & (frontier - 1));
    std::uint16_t nb = static_cast<std::uint16_t>(rows[v] & ~seen);
    seen |= nb;
    frontier |= nb;
  }
  return std::popcount(static_cast<unsigned>(seen)) == n;
}

template <class F>
void parallel_indices(std::size_t count, int jobs, F&& f) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  int nw = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), count));
  workers.reserve(static_cast<std::size_t>(nw));
  for (int t = 0; t < nw; ++t)
    workers.emplace_back([&, t] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        f(i, t);
      }
    });
  for (auto& w : workers) w.join();
}

std::vector<CanonKey> merge_sorted_unique(std::vector<std::vector<CanonKey>>& parts) {
  std::vector<CanonKey> all;
  std::size_t total = 0;
  for (auto& p : parts) total += p.size();
  all.reserve(total);
  for (auto& p : parts) {
    all.insert(all.end(), p.begin(), p.end());
    p.clear();
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace

std::vector<Graph> enumerate_graphs(const EnumerationConstraints& c, int jobs) {
  if (c.n < 0 || c.min_degree > c.max_degree || c.min_edges > c.max_edges)
    throw std::invalid_argument("inconsistent enumeration constraints");
  bool pruned = c.planar_only || c.max_degree <= 5 || c.regular.has_value();
  if (c.n > 10 || (c.n > 9 && !pruned))
    throw SizeError("enumerate_graphs budget: n <= 9, or n <= 10 with "
                    "degree/planarity pruning");

  int degree_cap = c.max_degree;
  if (c.regular) degree_cap = std::min(degree_cap, *c.regular);
  long edge_cap = c.max_edges;
  if (c.regular) edge_cap = std::min<long>(edge_cap, static_cast<long>(c.n) * *c.regular / 2);
  if (c.planar_only && c.n >= 3)
    edge_cap = std::min<long>(edge_cap, 3L * c.n - 6);

  std::vector<Graph> out;
  if (c.n == 0) {
    Graph g(0);
    if (g.edge_count() >= c.min_edges && g.edge_count() <= c.max_edges) out.push_back(g);
    return out;
  }

  std::vector<CanonKey> level{canonical(Graph(1)).key};
  for (int m = 2; m <= c.n; ++m) {
    std::vector<std::vector<CanonKey>> buckets(
        static_cast<std::size_t>(std::max(1, jobs)));
    parallel_indices(level.size(), jobs, [&](std::size_t pi, int tid) {
      Graph parent = graph_from_key(level[pi]);
      int pm = m - 1;
      std::array<std::uint16_t, 16> base{};
      for (int v = 0; v < pm; ++v)
        base[static_cast<std::size_t>(v)] =
            static_cast<std::uint16_t>(parent.neighbors(v));
      long pedges = parent.edge_count();
      // The new vertex may only attach to vertices with spare degree.
      std::uint16_t allowed = 0;
      for (int v = 0; v < pm; ++v)
        if (parent.degree(v) < degree_cap)
          allowed |= static_cast<std::uint16_t>(1u << v);

      KeySet local;
      std::uint16_t S = 0;
      for (;;) {  // all subsets of `allowed`, including the empty set
        int sdeg = std::popcount(static_cast<unsigned>(S));
        if (sdeg <= degree_cap && pedges + sdeg <= edge_cap) {
          std::array<std::uint16_t, 16> rows = base;
          rows[static_cast<std::size_t>(pm)] = S;
          std::uint16_t mbit = static_cast<std::uint16_t>(1u << pm);
          std::uint16_t t = S;
          while (t) {
            int v = std::countr_zero(static_cast<unsigned>(t));
            t &= static_cast<std::uint16_t>(t - 1);
            rows[static_cast<std::size_t>(v)] |= mbit;
          }
          CanonicalForm cf = canonical_raw(m, rows.data());
          // Accept only if the new vertex can play the canonical deletion
          // vertex: the one at the last canonical position, up to orbit.
          int last = 0;
          while (cf.perm[last] != m - 1) ++last;
          if (cf.orbit[pm] == cf.orbit[last] && !local.count(cf.key)) {
            bool keep = true;
            if (c.planar_only) {
              Graph child = graph_from_rows(m, rows.data());
              keep = is_planar_quick(child);
            }
            if (keep) {
              local.insert(cf.key);
              buckets[static_cast<std::size_t>(tid)].push_back(cf.key);
            }
          }
        }
        if (S == allowed) break;
        S = static_cast<std::uint16_t>((S - allowed) & allowed);
      }
    });
    level = merge_sorted_unique(buckets);
  }

  for (const CanonKey& k : level) {
    Graph g = graph_from_key(k);
    if (g.min_degree() < c.min_degree) continue;
    if (g.edge_count() < c.min_edges || g.edge_count() > c.max_edges) continue;
    if (c.regular && (g.min_degree() != *c.regular || g.max_degree() != *c.regular))
      continue;
    if (c.connected_only && !is_connected(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> enumerate_triangulations(int n, int jobs) {
  if (n < 3 || n > 12)
    throw SizeError("enumerate_triangulations budget: 3 <= n <= 12");
  if (n == 3) return {cycle(3)};

  std::vector<CanonKey> level{canonical(complete(4)).key};
  for (int m = 5; m <= n; ++m) {
    std::vector<std::vector<CanonKey>> buckets(
        static_cast<std::size_t>(std::max(1, jobs)));
    parallel_indices(level.size(), jobs, [&](std::size_t pi, int tid) {
      Graph parent = graph_from_key(level[pi]);
      PlaneEmbedding emb = embed(parent);
      KeySet local;
      int pm = m - 1;
      for (int v = 0; v < pm; ++v) {
        const std::vector<int>& rot = emb.rotation[static_cast<std::size_t>(v)];
        int d = static_cast<int>(rot.size());
        for (int i = 0; i < d; ++i)
          for (int j = i + 1; j < d; ++j) {
            // Split v along the rotation: v keeps rot[i..j], the new vertex
            // w takes rot[j..i] (endpoints shared), plus the edge vw.
            std::array<std::uint16_t, 16> rows{};
            for (int x = 0; x < pm; ++x)
              rows[static_cast<std::size_t>(x)] =
                  static_cast<std::uint16_t>(parent.neighbors(x));
            std::uint16_t keepA = 0;
            for (int p = i; p <= j; ++p)
              keepA |= static_cast<std::uint16_t>(1u << rot[static_cast<std::size_t>(p)]);
            std::uint16_t arcB =
                static_cast<std::uint16_t>(rows[static_cast<std::size_t>(v)] & ~keepA);
            arcB |= static_cast<std::uint16_t>(
                (1u << rot[static_cast<std::size_t>(i)]) |
                (1u << rot[static_cast<std::size_t>(j)]));
            std::uint16_t wbit = static_cast<std::uint16_t>(1u << pm);
            std::uint16_t vbit = static_cast<std::uint16_t>(1u << v);
            rows[static_cast<std::size_t>(v)] =
                static_cast<std::uint16_t>(keepA | wbit);
            rows[static_cast<std::size_t>(pm)] =
                static_cast<std::uint16_t>(arcB | vbit);
            std::uint16_t t = arcB;
            while (t) {
              int x = std::countr_zero(static_cast<unsigned>(t));
              t &= static_cast<std::uint16_t>(t - 1);
              if (((keepA >> x) & 1u) == 0)
                rows[static_cast<std::size_t>(x)] =
                    static_cast<std::uint16_t>(
                        (rows[static_cast<std::size_t>(x)] & ~vbit) | wbit);
              else
                rows[static_cast<std::size_t>(x)] |= wbit;
            }
            CanonicalForm cf = canonical_raw(m, rows.data());
            if (local.insert(cf.key).second)
              buckets[static_cast<std::size_t>(tid)].push_back(cf.key);
          }
      }
    });
    level = merge_sorted_unique(buckets);
  }

  std::vector<Graph> out;
  out.reserve(level.size());
  for (const CanonKey& k : level) out.push_back(graph_from_key(k));
  return out;
}

std::vector<Graph> filter_oracle(const EnumerationConstraints& c) {
  if (c.n < 0 || c.n > 8)
    throw SizeError("filter_oracle budget: n <= 8");
  std::vector<Graph> out;
  if (c.n == 0) {
    if (c.min_edges <= 0) out.push_back(Graph(0));
    return out;
  }
  int n = c.n;
  int m = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> bit_edge;
  bit_edge.reserve(static_cast<std::size_t>(m));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bit_edge.emplace_back(i, j);

  std::array<std::uint16_t, 16> rows{};
  std::array<int, 16> deg{};
  int ecount = 0;

  KeySet accepted, rejected;
  auto consider = [&]() {
    // Only labelings with non-increasing degree sequences are examined; each
    // isomorphism class has at least one.
    for (int v = 0; v + 1 < n; ++v)
      if (deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(v + 1)])
        return;
    if (ecount < c.min_edges || ecount > c.max_edges) return;
    if (deg[0] > c.max_degree ||
        deg[static_cast<std::size_t>(n - 1)] < c.min_degree)
      return;
    if (c.regular &&
        (deg[0] != *c.regular || deg[static_cast<std::size_t>(n - 1)] != *c.regular))
      return;
    if (c.connected_only && !rows_connected(n, rows.data())) return;
    CanonKey key = canonical_raw(n, rows.data()).key;
    if (accepted.count(key) || rejected.count(key)) return;
    if (c.planar_only && !is_planar_quick(graph_from_rows(n, rows.data()))) {
      rejected.insert(key);
      return;
    }
    accepted.insert(key);
  };

  consider();  // empty graph
  std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t k = 1; k < total; ++k) {
    int b = std::countr_zero(k);  // Gray code: flip one edge per step
    auto [u, v] = bit_edge[static_cast<std::size_t>(b)];
    std::uint16_t ub = static_cast<std::uint16_t>(1u << u);
    std::uint16_t vb = static_cast<std::uint16_t>(1u << v);
    if (rows[static_cast<std::size_t>(u)] & vb) {
      rows[static_cast<std::size_t>(u)] &= static_cast<std::uint16_t>(~vb);
      rows[static_cast<std::size_t>(v)] &= static_cast<std::uint16_t>(~ub);
      --deg[static_cast<std::size_t>(u)];
      --deg[static_cast<std::size_t>(v)];
      --ecount;
    } else {
      rows[static_cast<std::size_t>(u)] |= vb;
      rows[static_cast<std::size_t>(v)] |= ub;
      ++deg[static_cast<std::size_t>(u)];
      ++deg[static_cast<std::size_t>(v)];
      ++ecount;
    }
    consider();
  }

  std::vector<CanonKey> keys(accepted.begin(), accepted.end());
  std::sort(keys.begin(), keys.end());
  out.reserve(keys.size());
  for (const CanonKey& k : keys) out.push_back(graph_from_key(k));
  return out;
}

}  // namespace pturan
