#include "pturan/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <vector>

#include "pturan/errors.hpp"

namespace pturan {

namespace {

// Ordered partition of 0..n-1: order[] lists vertices, cell_id[] is the cell
// index per position (non-decreasing, consecutive from 0).
struct Part {
  std::array<std::uint8_t, 16> order{};
  std::array<std::uint8_t, 16> cell_id{};
  int ncells = 0;
};

struct Searcher {
  int n = 0;
  std::array<std::uint16_t, 16> adj{};

  bool have_best = false;
  std::uint64_t best_lo = 0, best_hi = 0;
  std::array<std::uint8_t, 16> best_lab{};  // canonical position -> vertex
  std::vector<std::array<std::uint8_t, 16>> autos;
  std::array<std::uint8_t, 16> uf{};

  int find(int v) {
    while (uf[v] != v) {
      uf[v] = uf[uf[v]];
      v = uf[v];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      uf[b] = static_cast<std::uint8_t>(a);
    else
      uf[a] = static_cast<std::uint8_t>(b);
  }

  // 1-WL refinement to the coarsest stable ordered partition. One cell is
  // split per iteration; subcells are ordered by ascending degree toward the
  // splitter, ties keep their previous relative order. Cells as sets, and
  // their sequence, are independent of the input labeling.
  void refine(Part& p) const {
    for (;;) {
      std::array<std::uint16_t, 16> cellmask{};
      for (int pos = 0; pos < n; ++pos)
        cellmask[p.cell_id[pos]] |=
            static_cast<std::uint16_t>(1u << p.order[pos]);
      auto cnt = [&](int v, int s) {
        return std::popcount(static_cast<unsigned>(adj[v] & cellmask[s]));
      };

      int spl = -1, cs = 0, ce = 0;
      for (int s = 0; s < p.ncells && spl < 0; ++s) {
        int pos = 0;
        while (pos < n) {
          int cid = p.cell_id[pos];
          int end = pos;
          while (end < n && p.cell_id[end] == cid) ++end;
          if (end - pos > 1) {
            int c0 = cnt(p.order[pos], s);
            for (int i = pos + 1; i < end; ++i)
              if (cnt(p.order[i], s) != c0) {
                spl = s;
                cs = pos;
                ce = end;
                break;
              }
          }
          if (spl >= 0) break;
          pos = end;
        }
      }
      if (spl < 0) return;

      std::stable_sort(p.order.begin() + cs, p.order.begin() + ce,
                       [&](std::uint8_t a, std::uint8_t b) {
                         return cnt(a, spl) < cnt(b, spl);
                       });
      std::array<std::uint8_t, 16> newid{};
      int cur = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0) {
          bool brk = p.cell_id[i] != p.cell_id[i - 1];
          if (!brk && i > cs && i < ce)
            brk = cnt(p.order[i], spl) != cnt(p.order[i - 1], spl);
          if (brk) ++cur;
        }
        newid[i] = static_cast<std::uint8_t>(cur);
      }
      p.cell_id = newid;
      p.ncells = cur + 1;
    }
  }

  static void individualize(Part& p, int n, int v) {
    int pos = 0;
    while (p.order[pos] != v) ++pos;
    int start = pos;
    while (start > 0 && p.cell_id[start - 1] == p.cell_id[pos]) --start;
    for (int i = pos; i > start; --i) p.order[i] = p.order[i - 1];
    p.order[start] = static_cast<std::uint8_t>(v);
    std::array<std::uint8_t, 16> newid{};
    int cur = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && (p.cell_id[i] != p.cell_id[i - 1] || i == start + 1)) ++cur;
      newid[i] = static_cast<std::uint8_t>(cur);
    }
    p.cell_id = newid;
    p.ncells = cur + 1;
  }

  void pack(const std::array<std::uint8_t, 16>& lab, std::uint64_t& lo,
            std::uint64_t& hi) const {
    lo = hi = 0;
    int b = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++b)
        if ((adj[lab[i]] >> lab[j]) & 1u) {
          if (b < 64)
            lo |= std::uint64_t{1} << b;
          else
            hi |= std::uint64_t{1} << (b - 64);
        }
  }

  void leaf(const Part& p) {
    std::uint64_t lo, hi;
    pack(p.order, lo, hi);
    if (!have_best || lo > best_lo || (lo == best_lo && hi > best_hi)) {
      have_best = true;
      best_lo = lo;
      best_hi = hi;
      best_lab = p.order;
      return;
    }
    if (lo == best_lo && hi == best_hi) {
      // Two labelings that hit the same canonical graph differ by an
      // automorphism.
      std::array<std::uint8_t, 16> posOf{};
      for (int i = 0; i < n; ++i)
        posOf[p.order[i]] = static_cast<std::uint8_t>(i);
      std::array<std::uint8_t, 16> a{};
      bool ident = true;
      for (int v = 0; v < n; ++v) {
        a[v] = best_lab[posOf[v]];
        if (a[v] != v) ident = false;
      }
      if (!ident) {
        autos.push_back(a);
        for (int v = 0; v < n; ++v) unite(v, a[v]);
      }
    }
  }

  void dfs(Part p, std::array<std::uint8_t, 16>& fixed, int nfixed) {
    refine(p);
    if (p.ncells == n) {
      leaf(p);
      return;
    }
    // Target: first non-singleton cell.
    int start = 0;
    while (start < n) {
      int end = start;
      while (end < n && p.cell_id[end] == p.cell_id[start]) ++end;
      if (end - start > 1) break;
      start = end;
    }
    int end = start;
    while (end < n && p.cell_id[end] == p.cell_id[start]) ++end;

    std::array<std::uint8_t, 16> cand{};
    int ncand = end - start;
    for (int i = 0; i < ncand; ++i) cand[i] = p.order[start + i];

    std::array<std::uint8_t, 16> processed{};
    int nproc = 0;
    for (int ci = 0; ci < ncand; ++ci) {
      int v = cand[ci];
      if (nproc > 0) {
        // Orbits of the pointwise stabilizer of the fixed prefix, from the
        // automorphisms discovered so far. Subtrees of equivalent candidates
        // are relabelings of already-explored ones.
        std::array<std::uint8_t, 16> uf2{};
        for (int w = 0; w < n; ++w) uf2[w] = static_cast<std::uint8_t>(w);
        auto find2 = [&](int w) {
          while (uf2[w] != w) {
            uf2[w] = uf2[uf2[w]];
            w = uf2[w];
          }
          return w;
        };
        for (const auto& a : autos) {
          bool fixes = true;
          for (int i = 0; i < nfixed; ++i)
            if (a[fixed[i]] != fixed[i]) {
              fixes = false;
              break;
            }
          if (!fixes) continue;
          for (int w = 0; w < n; ++w) {
            int ra = find2(w), rb = find2(a[w]);
            if (ra != rb) uf2[std::max(ra, rb)] = static_cast<std::uint8_t>(std::min(ra, rb));
          }
        }
        bool skip = false;
        for (int j = 0; j < nproc && !skip; ++j)
          skip = find2(processed[j]) == find2(v);
        if (skip) continue;
      }
      processed[nproc++] = static_cast<std::uint8_t>(v);
      Part q = p;
      individualize(q, n, v);
      fixed[nfixed] = static_cast<std::uint8_t>(v);
      dfs(q, fixed, nfixed + 1);
    }
  }
};

}  // namespace

CanonicalForm canonical_raw(int n, const std::uint16_t* rows) {
  if (n > kCanonMaxVertices)
    throw SizeError("canonicalization supports at most " +
                    std::to_string(kCanonMaxVertices) + " vertices, got " +
                    std::to_string(n));
  CanonicalForm cf;
  cf.n = n;
  cf.key.n = static_cast<std::uint8_t>(n);
  if (n == 0) return cf;

  Searcher s;
  s.n = n;
  for (int v = 0; v < n; ++v) {
    s.adj[v] = rows[v];
    s.uf[v] = static_cast<std::uint8_t>(v);
  }

  Part p;
  for (int v = 0; v < n; ++v) p.order[v] = static_cast<std::uint8_t>(v);
  std::stable_sort(p.order.begin(), p.order.begin() + n,
                   [&](std::uint8_t a, std::uint8_t b) {
                     return std::popcount(static_cast<unsigned>(s.adj[a])) <
                            std::popcount(static_cast<unsigned>(s.adj[b]));
                   });
  int cur = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 &&
        std::popcount(static_cast<unsigned>(s.adj[p.order[i]])) !=
            std::popcount(static_cast<unsigned>(s.adj[p.order[i - 1]])))
      ++cur;
    p.cell_id[i] = static_cast<std::uint8_t>(cur);
  }
  p.ncells = cur + 1;

  std::array<std::uint8_t, 16> fixed{};
  s.dfs(p, fixed, 0);

  cf.key.lo = s.best_lo;
  cf.key.hi = s.best_hi;
  for (int pos = 0; pos < n; ++pos)
    cf.perm[s.best_lab[pos]] = static_cast<std::uint8_t>(pos);
  for (int v = 0; v < n; ++v) cf.orbit[v] = static_cast<std::uint8_t>(s.find(v));
  return cf;
}

CanonicalForm canonical(const Graph& g) {
  if (g.order() > kCanonMaxVertices)
    throw SizeError("canonicalization supports at most " +
                    std::to_string(kCanonMaxVertices) + " vertices, got " +
                    std::to_string(g.order()));
  std::array<std::uint16_t, 16> rows{};
  for (int v = 0; v < g.order(); ++v)
    rows[v] = static_cast<std::uint16_t>(g.neighbors(v));
  return canonical_raw(g.order(), rows.data());
}

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical(g).key == canonical(h).key;
}

Graph canonical_graph(const Graph& g) {
  return graph_from_key(canonical(g).key);
}

Graph graph_from_key(const CanonKey& key) {
  Graph g(key.n);
  int b = 0;
  for (int j = 1; j < key.n; ++j)
    for (int i = 0; i < j; ++i, ++b) {
      bool bit = b < 64 ? (key.lo >> b) & 1u : (key.hi >> (b - 64)) & 1u;
      if (bit) g.add_edge(i, j);
    }
  return g;
}

std::uint64_t key_hash(const CanonKey& k) {
  auto mix = [](std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  };
  return mix(k.lo ^ mix(k.hi ^ (std::uint64_t{k.n} << 56)));
}

std::string key_hex(const CanonKey& k) {
  static const char* d = "0123456789abcdef";
  std::string out;
  out.reserve(34);
  for (int i = 15; i >= 0; --i) out.push_back(d[(k.hi >> (4 * i)) & 0xf]);
  for (int i = 15; i >= 0; --i) out.push_back(d[(k.lo >> (4 * i)) & 0xf]);
  return out;
}

}  // namespace pturan
