#include "pturan/planar.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <stdexcept>

#include "pturan/errors.hpp"

namespace pturan {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(static_cast<std::size_t>(g.order()));
  int idx = 0;
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, idx++, bg);
  return bg;
}

std::vector<std::vector<int>> rotation_from(const BoostGraph& bg,
                                            const std::vector<std::vector<BoostEdge>>& emb,
                                            int n) {
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    for (const BoostEdge& e : emb[static_cast<std::size_t>(v)]) {
      int u = static_cast<int>(boost::source(e, bg));
      int w = static_cast<int>(boost::target(e, bg));
      rot[static_cast<std::size_t>(v)].push_back(u == v ? w : u);
    }
  }
  return rot;
}

// Trace faces of a rotation system. Successor of the directed edge (u,v) is
// (v,w) where w precedes u in the rotation at v; each directed edge lies on
// exactly one walk.
std::vector<std::vector<int>> trace_faces(const std::vector<std::vector<int>>& rot) {
  int n = static_cast<int>(rot.size());
  std::vector<std::map<int, int>> pos(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < static_cast<int>(rot[static_cast<std::size_t>(v)].size()); ++i)
      pos[static_cast<std::size_t>(v)][rot[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)]] = i;

  std::set<std::pair<int, int>> used;
  std::vector<std::vector<int>> walks;
  for (int u = 0; u < n; ++u) {
    for (int v : rot[static_cast<std::size_t>(u)]) {
      if (used.count({u, v})) continue;
      std::vector<int> walk;
      int a = u, b = v;
      do {
        used.insert({a, b});
        walk.push_back(a);
        const auto& rb = rot[static_cast<std::size_t>(b)];
        int i = pos[static_cast<std::size_t>(b)].at(a);
        int w = rb[static_cast<std::size_t>((i + rb.size() - 1) % rb.size())];
        a = b;
        b = w;
      } while (!(a == u && b == v));
      walks.push_back(std::move(walk));
    }
  }
  return walks;
}

KuratowskiWitness classify_witness(const std::vector<std::pair<int, int>>& edges) {
  std::map<int, int> deg;
  for (auto [u, v] : edges) {
    deg[u]++;
    deg[v]++;
  }
  int deg4 = 0;
  for (auto [v, d] : deg)
    if (d >= 4) ++deg4;
  return {deg4 > 0 ? KuratowskiWitness::Kind::K5 : KuratowskiWitness::Kind::K33,
          edges};
}

}  // namespace

bool is_planar_quick(const Graph& g) {
  int n = g.order();
  if (n <= 4) return true;
  if (g.edge_count() > 3 * n - 6) return false;
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

PlanarityResult is_planar(const Graph& g) {
  PlanarityResult res;
  int n = g.order();
  BoostGraph bg = to_boost(g);
  std::vector<std::vector<BoostEdge>> emb(static_cast<std::size_t>(n));
  std::vector<BoostEdge> kur;
  // The Euler prefilter (e > 3n-6 for n >= 3) settles the decision early,
  // but the witness contract still requires the structural pass.
  bool euler_reject = n >= 3 && g.edge_count() > 3 * n - 6;
  res.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = emb.data(),
      boost::boyer_myrvold_params::kuratowski_subgraph =
          std::back_inserter(kur));
  if (euler_reject && res.planar)
    throw ContractError("Euler prefilter contradicts planarity test");
  if (res.planar) {
    PlaneEmbedding pe;
    pe.n = n;
    pe.rotation = rotation_from(bg, emb, n);
    pe.face_walks = trace_faces(pe.rotation);
    res.embedding = std::move(pe);
  } else {
    std::vector<std::pair<int, int>> es;
    es.reserve(kur.size());
    for (const BoostEdge& e : kur)
      es.emplace_back(static_cast<int>(boost::source(e, bg)),
                      static_cast<int>(boost::target(e, bg)));
    res.witness = classify_witness(es);
  }
  return res;
}

PlaneEmbedding embed(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("embed requires a connected graph");
  PlanarityResult res = is_planar(g);
  if (!res.planar) throw std::invalid_argument("embed requires a planar graph");
  return *std::move(res.embedding);
}

FaceCensus face_census(const PlaneEmbedding& emb) {
  FaceCensus fc;
  for (const auto& walk : emb.face_walks) {
    fc.f[static_cast<int>(walk.size())]++;
    fc.total++;
  }
  return fc;
}

bool is_triangulation(const Graph& g) {
  int n = g.order();
  if (n < 3) return false;
  if (g.edge_count() != 3 * n - 6) return false;
  if (!is_connected(g)) return false;
  return is_planar_quick(g);
}

bool is_outerplanar(const Graph& g) {
  return is_planar_quick(join(complete(1), g));
}

}  // namespace pturan
