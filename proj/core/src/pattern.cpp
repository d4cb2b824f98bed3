#include "pturan/pattern.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <charconv>

#include "pturan/canonical.hpp"
#include "pturan/errors.hpp"
#include "pturan/graph6.hpp"

namespace pturan {

namespace {

int parse_int(std::string_view s, std::size_t& pos) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
  if (ec != std::errc() || p == s.data() + pos)
    throw ParseError("expected an integer", pos);
  pos = static_cast<std::size_t>(p - s.data());
  return v;
}

Graph parse_atom(std::string_view s, std::size_t& pos) {
  if (s.substr(pos).starts_with("prism")) {
    pos += 5;
    // Triangular prism: two triangles joined by a perfect matching.
    return Graph::from_edges(
        6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  }
  if (s.substr(pos).starts_with("g6:")) {
    pos += 3;
    std::size_t end = s.find(' ', pos);
    if (end == std::string_view::npos) end = s.size();
    Graph g = g6_decode(s.substr(pos, end - pos));
    pos = end;
    return g;
  }
  char c = pos < s.size() ? s[pos] : '\0';
  if (c == 'C') {
    ++pos;
    std::size_t at = pos;
    int k = parse_int(s, pos);
    if (k < 3) throw ParseError("cycle length must be >= 3", at);
    bool pendant = s.substr(pos).starts_with("^+");
    if (pendant) pos += 2;
    return pendant ? pendant_cycle(k) : cycle(k);
  }
  if (c == 'K') {
    ++pos;
    std::size_t at = pos;
    int a = parse_int(s, pos);
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      std::size_t at2 = pos;
      int b = parse_int(s, pos);
      if (a < 1) throw ParseError("K_{s,t} requires s >= 1", at);
      if (b < 1) throw ParseError("K_{s,t} requires t >= 1", at2);
      return complete_bipartite(a, b);
    }
    if (a < 1) throw ParseError("K_n requires n >= 1", at);
    return complete(a);
  }
  throw ParseError("expected an atom (C, K, prism or g6:)", pos);
}

void build_plan(Pattern& p) {
  std::vector<std::uint64_t> comps = components(p.target);
  struct Raw {
    std::vector<int> verts;  // target labels
    CanonKey key{};
    int edges = 0;
  };
  std::vector<Raw> raws;
  for (std::uint64_t mask : comps) {
    if (std::popcount(mask) == 1) {
      p.isolated++;
      continue;
    }
    Raw r;
    std::uint64_t m = mask;
    while (m) {
      r.verts.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    Graph sub = induced_subgraph(p.target, mask);
    r.edges = sub.edge_count();
    if (sub.order() <= kCanonMaxVertices) r.key = canonical(sub).key;
    raws.push_back(std::move(r));
  }
  std::stable_sort(raws.begin(), raws.end(), [](const Raw& a, const Raw& b) {
    if (a.verts.size() != b.verts.size()) return a.verts.size() > b.verts.size();
    if (a.edges != b.edges) return a.edges > b.edges;
    return a.key > b.key;
  });

  for (std::size_t i = 0; i < raws.size(); ++i) {
    Pattern::Comp c;
    // Search order: max-degree start, then grow connected preferring many
    // already-placed neighbors (most constrained first).
    const std::vector<int>& vs = raws[i].verts;
    auto deg = [&](int v) { return p.target.degree(v); };
    std::vector<int> rest = vs;
    std::sort(rest.begin(), rest.end(), [&](int a, int b) {
      return deg(a) != deg(b) ? deg(a) > deg(b) : a < b;
    });
    c.verts.push_back(rest.front());
    rest.erase(rest.begin());
    while (!rest.empty()) {
      auto placed_nbrs = [&](int v) {
        int k = 0;
        for (int u : c.verts)
          if (p.target.has_edge(u, v)) ++k;
        return k;
      };
      auto it = std::max_element(rest.begin(), rest.end(), [&](int a, int b) {
        int pa = placed_nbrs(a), pb = placed_nbrs(b);
        if (pa != pb) return pa < pb;
        if (deg(a) != deg(b)) return deg(a) < deg(b);
        return a > b;
      });
      c.verts.push_back(*it);
      rest.erase(it);
    }
    c.back.resize(c.verts.size());
    for (std::size_t a = 0; a < c.verts.size(); ++a) {
      std::uint64_t m = 0;
      for (std::size_t b = 0; b < a; ++b)
        if (p.target.has_edge(c.verts[a], c.verts[b])) m |= std::uint64_t{1} << b;
      c.back[a] = m;
    }
    c.same_as_prev = i > 0 && raws[i].key == raws[i - 1].key &&
                     raws[i].verts.size() == raws[i - 1].verts.size() &&
                     raws[i].key != CanonKey{};
    p.comps.push_back(std::move(c));
  }
}

struct Matcher {
  const Graph& host;
  const Pattern& pat;
  std::uint64_t budget_left;
  SearchStats* stats;

  std::vector<std::vector<int>> host_ndeg;  // sorted desc neighbor degrees
  std::vector<std::uint64_t> compat;  // per (comp, pos) flattened host masks
  std::vector<int> assign;            // target vertex -> host vertex
  std::uint64_t used = 0;
  std::vector<int> anchors;  // first-position image per component

  explicit Matcher(const Graph& g, const Pattern& p, std::uint64_t budget,
                   SearchStats* st)
      : host(g), pat(p), budget_left(budget), stats(st) {
    int n = g.order();
    host_ndeg.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::uint64_t m = g.neighbors(v);
      while (m) {
        int u = std::countr_zero(m);
        m &= m - 1;
        host_ndeg[static_cast<std::size_t>(v)].push_back(g.degree(u));
      }
      std::sort(host_ndeg[static_cast<std::size_t>(v)].rbegin(),
                host_ndeg[static_cast<std::size_t>(v)].rend());
    }
    // Compatibility prefilter: degree and sorted neighbor-degree dominance.
    for (const auto& comp : p.comps) {
      for (int tv : comp.verts) {
        std::uint64_t mask = 0;
        int pd = p.target.degree(tv);
        std::vector<int> pnd;
        std::uint64_t m = p.target.neighbors(tv);
        while (m) {
          int u = std::countr_zero(m);
          m &= m - 1;
          pnd.push_back(p.target.degree(u));
        }
        std::sort(pnd.rbegin(), pnd.rend());
        for (int v = 0; v < n; ++v) {
          if (g.degree(v) < pd) continue;
          bool ok = true;
          for (std::size_t i = 0; i < pnd.size(); ++i)
            if (pnd[i] > host_ndeg[static_cast<std::size_t>(v)][i]) {
              ok = false;
              break;
            }
          if (ok) mask |= std::uint64_t{1} << v;
        }
        compat.push_back(mask);
      }
    }
    assign.assign(static_cast<std::size_t>(p.target.order()), -1);
    anchors.resize(p.comps.size(), -1);
  }

  std::uint64_t compat_of(std::size_t comp, std::size_t pos) const {
    std::size_t idx = 0;
    for (std::size_t c = 0; c < comp; ++c) idx += pat.comps[c].verts.size();
    return compat[idx + pos];
  }

  bool tick() {
    if (stats) stats->nodes++;
    if (budget_left == 0) throw BudgetError("pattern search budget exhausted");
    --budget_left;
    return true;
  }

  bool match_comp(std::size_t ci, std::size_t pos) {
    const Pattern::Comp& comp = pat.comps[ci];
    if (pos == comp.verts.size()) return match_from(ci + 1);

    std::uint64_t cands = compat_of(ci, pos) & ~used;
    if (comp.back[pos]) {
      std::uint64_t m = comp.back[pos];
      while (m) {
        int earlier = std::countr_zero(m);
        m &= m - 1;
        cands &= host.neighbors(assign[static_cast<std::size_t>(comp.verts[static_cast<std::size_t>(earlier)])]);
      }
    }
    if (pos == 0 && comp.same_as_prev && anchors[ci - 1] >= 0) {
      // Identical components: break the copy-permutation symmetry by forcing
      // anchors to increase.
      int a = anchors[ci - 1];
      cands &= a >= 63 ? 0 : ~((std::uint64_t{2} << a) - 1);
    }
    while (cands) {
      int v = std::countr_zero(cands);
      cands &= cands - 1;
      tick();
      assign[static_cast<std::size_t>(comp.verts[pos])] = v;
      used |= std::uint64_t{1} << v;
      if (pos == 0) anchors[ci] = v;
      if (match_comp(ci, pos + 1)) return true;
      used &= ~(std::uint64_t{1} << v);
      assign[static_cast<std::size_t>(comp.verts[pos])] = -1;
    }
    return false;
  }

  bool match_from(std::size_t ci) {
    if (ci == pat.comps.size()) {
      // Place isolated pattern vertices on any leftover host vertices.
      if (host.order() - std::popcount(used) < pat.isolated) return false;
      std::uint64_t free = host.vertex_mask() & ~used;
      for (int tv = 0; tv < pat.target.order(); ++tv)
        if (assign[static_cast<std::size_t>(tv)] < 0) {
          assert(free);
          int v = std::countr_zero(free);
          free &= free - 1;
          assign[static_cast<std::size_t>(tv)] = v;
        }
      return true;
    }
    return match_comp(ci, 0);
  }
};

// Recognize the target as a single k-cycle.
std::optional<int> single_cycle_length(const Pattern& p) {
  if (p.isolated != 0 || p.comps.size() != 1) return std::nullopt;
  const Graph& t = p.target;
  for (int v = 0; v < t.order(); ++v)
    if (t.degree(v) != 2) return std::nullopt;
  if (t.edge_count() != t.order()) return std::nullopt;
  return t.order();  // connected 2-regular with n edges
}

// Recognize the target as K_{2,t}; returns t.
std::optional<int> k2t_shape(const Pattern& p) {
  if (p.isolated != 0 || p.comps.size() != 1) return std::nullopt;
  const Graph& g = p.target;
  int n = g.order();
  if (n < 3) return std::nullopt;
  int t = n - 2;
  std::vector<int> twos, ts;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == t)
      twos.push_back(v);
    else if (g.degree(v) == 2)
      ts.push_back(v);
    else
      return std::nullopt;
  }
  if (t == 2) return g.edge_count() == 4 && static_cast<int>(twos.size() + ts.size()) == 4 ? std::optional<int>(2) : std::nullopt;
  if (static_cast<int>(twos.size()) != 2 || static_cast<int>(ts.size()) != t)
    return std::nullopt;
  if (g.has_edge(twos[0], twos[1])) return std::nullopt;
  for (int v : ts)
    if (!g.has_edge(twos[0], v) || !g.has_edge(twos[1], v)) return std::nullopt;
  return t;
}

}  // namespace

Pattern parse_pattern(std::string_view text) {
  Pattern p;
  p.source = std::string(text);
  std::vector<Graph> parts;
  std::string display;
  std::size_t pos = 0;
  for (;;) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) throw ParseError("expected a clause", pos);
    int mult = 1;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t at = pos;
      mult = parse_int(text, pos);
      if (mult < 1) throw ParseError("multiplicity must be >= 1", at);
    }
    std::size_t atom_at = pos;
    Graph atom = parse_atom(text, pos);
    if (!display.empty()) display += " U ";
    if (mult > 1) display += std::to_string(mult);
    display += std::string(text.substr(atom_at, pos - atom_at));
    for (int i = 0; i < mult; ++i) parts.push_back(atom);

    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    if (text[pos] != 'U')
      throw ParseError("expected ' U ' between clauses", pos);
    ++pos;
    if (pos >= text.size() || text[pos] != ' ')
      throw ParseError("expected ' U ' between clauses", pos);
  }
  p.target = disjoint_union(std::span<const Graph>(parts));
  if (p.target.order() == 0) throw ParseError("empty pattern", 0);
  p.display_name = display;
  build_plan(p);
  return p;
}

std::optional<std::vector<int>> contains_generic(const Graph& g,
                                                 const Pattern& p,
                                                 const SearchBudget& budget,
                                                 SearchStats* stats) {
  if (p.target.order() > g.order()) return std::nullopt;
  Matcher m(g, p, budget.max_nodes, stats);
  if (!m.match_from(0)) return std::nullopt;
  return m.assign;
}

std::optional<std::vector<int>> find_cycle_of_length(const Graph& g, int k,
                                                     const SearchBudget& budget,
                                                     SearchStats* stats) {
  if (k < 3 || g.order() < k) return std::nullopt;
  std::uint64_t left = budget.max_nodes;
  std::vector<int> stack;
  // Anchor each candidate cycle at its minimum vertex.
  for (int s = 0; s + k <= g.order() || s < g.order(); ++s) {
    std::uint64_t above = g.vertex_mask() & ~((std::uint64_t{2} << s) - 1);
    stack.assign(1, s);
    std::uint64_t used = std::uint64_t{1} << s;
    // iterative DFS with per-depth candidate masks
    std::vector<std::uint64_t> cand(static_cast<std::size_t>(k));
    cand[0] = g.neighbors(s) & above;
    std::size_t depth = 0;
    while (true) {
      if (stats) stats->nodes++;
      if (left-- == 0) throw BudgetError("cycle search budget exhausted");
      if (cand[depth] == 0) {
        if (depth == 0) break;
        --depth;
        used &= ~(std::uint64_t{1} << stack.back());
        stack.pop_back();
        continue;
      }
      int v = std::countr_zero(cand[depth]);
      cand[depth] &= cand[depth] - 1;
      if (static_cast<int>(stack.size()) == k - 1) {
        if (g.has_edge(v, s)) {
          stack.push_back(v);
          return stack;
        }
        continue;
      }
      stack.push_back(v);
      used |= std::uint64_t{1} << v;
      ++depth;
      cand[depth] = g.neighbors(v) & above & ~used;
    }
  }
  return std::nullopt;
}

bool contains_k2t(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("contains_k2t requires t >= 1");
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (std::popcount(g.neighbors(u) & g.neighbors(v)) >= t) return true;
  return false;
}

std::optional<std::vector<int>> contains(const Graph& g, const Pattern& p,
                                         const SearchBudget& budget,
                                         SearchStats* stats) {
  if (auto k = single_cycle_length(p)) {
    auto cyc = find_cycle_of_length(g, *k, budget, stats);
    if (!cyc) return std::nullopt;
    // Walk the pattern cycle in cyclic order and map it onto the found one.
    std::vector<int> order;
    int prev = -1, cur = 0;
    for (int i = 0; i < *k; ++i) {
      order.push_back(cur);
      std::uint64_t nb = p.target.neighbors(cur);
      int nxt = -1;
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (w != prev) nxt = w;
      }
      prev = cur;
      cur = nxt;
    }
    std::vector<int> map(static_cast<std::size_t>(*k));
    for (int i = 0; i < *k; ++i) map[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = (*cyc)[static_cast<std::size_t>(i)];
    return map;
  }
  if (auto t = k2t_shape(p)) {
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v) {
        std::uint64_t common = g.neighbors(u) & g.neighbors(v);
        if (std::popcount(common) < *t) continue;
        std::vector<int> map(static_cast<std::size_t>(p.target.order()));
        std::vector<int> side2, sidet;
        for (int tv = 0; tv < p.target.order(); ++tv)
          (p.target.degree(tv) == *t && *t != 2 ? side2 : sidet).push_back(tv);
        if (*t == 2) {
          // K_{2,2} = C_4; split an arbitrary nonadjacent pair off.
          side2 = {0, std::countr_zero(~p.target.neighbors(0) &
                                       p.target.vertex_mask() & ~1ull)};
          sidet.clear();
          for (int tv = 0; tv < 4; ++tv)
            if (tv != side2[0] && tv != side2[1]) sidet.push_back(tv);
        }
        map[static_cast<std::size_t>(side2[0])] = u;
        map[static_cast<std::size_t>(side2[1])] = v;
        for (int x : sidet) {
          int w = std::countr_zero(common);
          common &= common - 1;
          map[static_cast<std::size_t>(x)] = w;
        }
        return map;
      }
    return std::nullopt;
  }
  return contains_generic(g, p, budget, stats);
}

bool is_free(const Graph& g, const Pattern& p, const SearchBudget& budget,
             SearchStats* stats) {
  return !contains(g, p, budget, stats).has_value();
}

}  // namespace pturan
