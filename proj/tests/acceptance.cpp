// Acceptance suite: one test case per criterion, one printed PASS/FAIL line
// each. Values are exact integer comparisons; time budgets are enforced as
// ctest timeouts. Two sub-checks are expected to stay red — the stated
// values at (2C3, n=6) and (K_{2,3}, n=7 and n=13) are unattainable; see the
// FAIL messages they print for the verified true values.

#include <doctest.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "pturan/bounds.hpp"
#include "pturan/canonical.hpp"
#include "pturan/enumerate.hpp"
#include "pturan/errors.hpp"
#include "pturan/extremal.hpp"
#include "pturan/family.hpp"
#include "pturan/graph.hpp"
#include "pturan/graph6.hpp"
#include "pturan/pattern.hpp"
#include "pturan/planar.hpp"

using namespace pturan;

namespace {

struct Criterion {
  std::string id;
  bool ok = true;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  explicit Criterion(std::string id_) : id(std::move(id_)) {}
  void expect(bool cond, const std::string& what) {
    if (!cond) ok = false;
    CHECK_MESSAGE(cond, id, ": ", what);
  }
  ~Criterion() {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             t0)
                   .count();
    std::printf("%s: %s (%.1f s)\n", id.c_str(), ok ? "PASS" : "FAIL", s);
    std::fflush(stdout);
  }
};

long bound_int(const std::string& id, BoundParams p) {
  return boost::rational_cast<long>(eval_bound(id, p).value);
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PTURAN_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::set<CanonKey> key_set(const std::vector<Graph>& gs) {
  std::set<CanonKey> s;
  for (const Graph& g : gs) s.insert(canonical(g).key);
  return s;
}

}  // namespace

TEST_CASE("criterion-01 lemma 1: cubic planar K4-free graphs on 8 vertices") {
  Criterion c("criterion-01");
  RunResult r = run_cli(
      "enumerate --class graphs --n 8 --regular 3 --planar "
      "--then-filter K4-free");
  c.expect(r.exit_code == 0, "CLI run succeeds");
  std::vector<Graph> found;
  std::size_t pos = 0;
  while (pos < r.out.size()) {
    std::size_t nl = r.out.find('\n', pos);
    if (nl == std::string::npos) break;
    found.push_back(g6_decode(r.out.substr(pos, nl - pos)));
    pos = nl + 1;
  }
  c.expect(found.size() == 3, "exactly 3 isomorphism classes");
  Pattern k4 = parse_pattern("K4");
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Graph& g = found[i];
    c.expect(g.order() == 8 && g.min_degree() == 3 && g.max_degree() == 3,
             "cubic on 8 vertices");
    c.expect(is_planar_quick(g), "planar");
    c.expect(is_free(g, k4), "K4-free");
    for (std::size_t j = i + 1; j < found.size(); ++j)
      c.expect(!isomorphic(found[i], found[j]), "pairwise non-isomorphic");
  }
}

TEST_CASE("criterion-02 theorem 1(a): ex(n, C3) = 2n-4") {
  Criterion c("criterion-02");
  Pattern c3 = parse_pattern("C3");
  for (int n = 3; n <= 9; ++n) {
    ExtremalResult f = ex_filter(n, c3);
    c.expect(f.value == 2 * n - 4,
             "filter value at n=" + std::to_string(n));
    if (n >= 4) {
      ExtremalResult t = ex_tri_bb(n, c3, 2);
      c.expect(t.value == f.value,
               "tri-bb cross-check at n=" + std::to_string(n));
    }
  }
}

TEST_CASE("criterion-03 theorem 5: prism values and constructions") {
  Criterion c("criterion-03");
  Pattern prism = parse_pattern("prism");
  const int want[] = {11, 14, 17, 20};
  for (int n = 6; n <= 9; ++n) {
    ExtremalResult r = ex_tri_bb(n, prism, 2);
    c.expect(r.value == want[n - 6], "ex(n, prism) at n=" + std::to_string(n));
    for (const Graph& t : enumerate_triangulations(n))
      c.expect(!is_free(t, prism),
               "triangulation on " + std::to_string(n) + " contains prism");
  }
  for (int n = 10; n <= 50; ++n) {
    Graph q = q_triangulation((n - 2) / 4, (n - 2) % 4);
    c.expect(q.order() == n && q.edge_count() == 3 * n - 6,
             "Q_k^l order/size at n=" + std::to_string(n));
    c.expect(is_free(q, prism), "Q_k^l prism-free at n=" + std::to_string(n));
  }
}

TEST_CASE("criterion-04 theorem 6: ex(n, 2C3) and the apex-path bound") {
  Criterion c("criterion-04");
  Pattern p = parse_pattern("2C3");
  for (int n = 6; n <= 10; ++n) {
    long stated = (5L * n + 1) / 2 - 5;  // ceil(5n/2) - 5
    ExtremalResult r = ex_tri_bb(n, p, 2);
    c.expect(r.value == stated,
             "stated value at n=" + std::to_string(n) + " (computed " +
                 std::to_string(r.value) +
                 (n == 6 ? "; the stated 10 is unattainable: K_2+(P_3 u P_1) "
                           "is 2C_3-free with 11 edges, so ex = 11"
                         : ""));
  }
  for (int n = 6; n <= 60; ++n) {
    Graph g = tc3_lower(n);
    c.expect(g.edge_count() == bound_int("tc3", {.n = n, .t = 2}),
             "edge identity at n=" + std::to_string(n));
    c.expect(is_free(g, p), "2C3-freeness at n=" + std::to_string(n));
  }
}

TEST_CASE("criterion-05 proposition 1: ex(n, C3^+) = ex(n, C3)") {
  Criterion c("criterion-05");
  Pattern c3 = parse_pattern("C3");
  Pattern c3p = parse_pattern("C3^+");
  for (int n = 4; n <= 9; ++n) {
    int a = compute_ex(n, c3p, "auto", 2).value;
    int b = compute_ex(n, c3, "auto", 2).value;
    c.expect(a == b && b == 2 * n - 4, "equality at n=" + std::to_string(n));
  }
}

TEST_CASE("criterion-06 corollary 1 slice: ex(n, C3 u C3^+) = ex(n, 2C3)") {
  Criterion c("criterion-06");
  Pattern lhs = parse_pattern("C3 U C3^+");
  Pattern rhs = parse_pattern("2C3");
  for (int n = 7; n <= 9; ++n) {
    int a = ex_tri_bb(n, lhs, 2).value;
    int b = ex_tri_bb(n, rhs, 2).value;
    c.expect(a == b, "equality at n=" + std::to_string(n));
  }
}

TEST_CASE("criterion-07 theorem 8: K_{2,4} and K_{2,3}") {
  Criterion c("criterion-07");
  Pattern k24 = parse_pattern("K2,4");
  for (int n = 6; n <= 8; ++n)
    c.expect(ex_tri_bb(n, k24, 4).value == 3 * n - 7,
             "ex(n, K2,4) = 3n-7 at n=" + std::to_string(n));
  c.expect(ex_tri_bb(9, k24, 4).value == 21, "ex(9, K2,4) = 21");

  Pattern k23 = parse_pattern("K2,3");
  for (int n = 5; n <= 10; ++n) {
    int v = compute_ex(n, k23, n <= 8 ? "filter" : "tri-bb", 4).value;
    c.expect(v == 3 * n - 8,
             "ex(n, K2,3) = 3n-8 at n=" + std::to_string(n) +
                 " (computed " + std::to_string(v) +
                 (n == 7 ? "; the stated 13 is unattainable: brute force "
                           "gives ex_P(7, K_{2,3}) = 12, the described O_7' "
                           "does not exist"
                         : ""));
  }
  // extended case n = 11 under a flagged budget
  try {
    SearchBudget b{2'000'000'000ULL};
    c.expect(ex_tri_bb(11, k23, 4, b).value == 25, "extended n=11 value");
  } catch (const BudgetError&) {
    std::printf("criterion-07: n=11 extended case hit its flagged budget\n");
  }
  for (int n = 12; n <= 60; ++n) {
    if (n == 13) {
      bool built = false;
      try {
        hex_family_for_order(13);
        built = true;
      } catch (const std::invalid_argument&) {
      }
      c.expect(built,
               "R_k^r at n=13 (no K_{2,3}-free triangulation on 13 vertices "
               "exists; ex_P(13, K_{2,3}) = 32 = 3n-7, so this stated "
               "sub-check is unattainable)");
      continue;
    }
    Graph r = hex_family_for_order(n);
    c.expect(is_triangulation(r), "R triangulation at n=" + std::to_string(n));
    c.expect(!contains_k2t(r, 3), "R K2,3-free at n=" + std::to_string(n));
  }
  for (int n = 7; n <= 60; ++n) {
    Graph g = join(complete(1), outer_snake(n - 1));
    c.expect(g.edge_count() == 3 * n - 6,
             "K1+O edge count at n=" + std::to_string(n));
    c.expect(!contains_k2t(g, 5), "K1+O K2,5-free at n=" + std::to_string(n));
  }
}

TEST_CASE("criterion-08 lemmas 2 and 3: lower-bound constructions") {
  Criterion c("criterion-08");
  for (int k = 4; k <= 9; ++k) {
    Pattern p = parse_pattern("2C" + std::to_string(k));
    for (int n = 2 * k; n <= 60; ++n) {
      Graph g = two_ck_lower(n, k);
      c.expect(is_planar_quick(g), "lemma2 planar");
      c.expect(g.edge_count() == bound_int("lemma2ck", {.n = n, .k = k}),
               "lemma2 edges k=" + std::to_string(k) +
                   " n=" + std::to_string(n));
      c.expect(is_free(g, p),
               "lemma2 freeness k=" + std::to_string(k) +
                   " n=" + std::to_string(n));
    }
    if (k < 7) continue;
    bool odd = k % 2 == 1;
    for (int n = (odd ? 3 * k - 3 : 3 * k - 6); n <= 60; ++n) {
      Graph g = two_ck_lower_improved(n, k);
      c.expect(is_planar_quick(g), "lemma3 planar");
      c.expect(g.edge_count() == bound_int("lemma3ck", {.n = n, .k = k}),
               "lemma3 edges k=" + std::to_string(k) +
                   " n=" + std::to_string(n));
      c.expect(is_free(g, p),
               "lemma3 freeness k=" + std::to_string(k) +
                   " n=" + std::to_string(n));
    }
  }
  // pasting identity, restated from the parts, k = 7 odd case and k = 8 even
  for (int k : {7, 8}) {
    bool odd = k % 2 == 1;
    int p = odd ? (k - 1) / 2 : k / 2;
    int d = odd ? 3 * p - 3 : 3 * p - 6;
    for (int n = (odd ? 3 * k - 3 : 3 * k - 6); n <= 60; ++n) {
      int eps = (n - (2 * k - 1)) % d;
      int t = (n - (2 * k - 1) - eps) / d;
      std::vector<MarkedGraph> parts;
      for (int i = 0; i < t; ++i)
        parts.push_back(odd ? t_stack(p + 1, 3 * p - 1)
                            : t_stack(p, 3 * p - 4));
      if (eps + 2 <= k - 1)
        parts.push_back(t_stack(eps + 2, eps + 2));
      else
        parts.push_back(odd ? t_stack(p + 1, eps + 2) : t_stack(p, eps + 2));
      parts.push_back(t_stack(2 * k - 1, 2 * k - 1));
      long sum = 1;
      for (const MarkedGraph& mg : parts) sum += mg.graph.edge_count() - 1;
      Graph g = paste_along_k2(parts);
      c.expect(g.edge_count() == sum,
               "pasting identity k=" + std::to_string(k) +
                   " n=" + std::to_string(n));
      c.expect(g == two_ck_lower_improved(n, k),
               "generator matches the explicit pasting");
    }
  }
}

TEST_CASE("criterion-09 conjecture scans") {
  Criterion c("criterion-09");
  Report weak = scan_conjecture("weak", 3, 9, 3, 9, 4);
  c.expect(!weak.items.empty(), "weak scan produced items");
  int pairs = 0;
  for (const ReportItem& it : weak.items) {
    c.expect(it.status == "PASS", "no counterexample at " + it.params);
    ++pairs;
  }
  c.expect(pairs == 1 + 2 + 3 + 4 + 5 + 6 + 7,
           "exhaustion certificate covers every (n,k), got " +
               std::to_string(pairs));

  Report c4 = scan_conjecture("c4", 8, 9, 0, 0, 4);
  c.expect(c4.items.size() == 2, "c4 scan covers n = 8, 9");
  for (const ReportItem& it : c4.items) {
    c.expect(!it.note.empty(), "report states the relation at " + it.params);
    c.expect(it.status != "BUDGET", "exact value computed at " + it.params);
    std::printf("criterion-09: c4 %s expected=%s computed=%s (%s)\n",
                it.params.c_str(), it.expected.c_str(), it.computed.c_str(),
                it.note.c_str());
  }
}

TEST_CASE("criterion-10 enumeration self-consistency") {
  Criterion c("criterion-10");
  for (int n = 1; n <= 8; ++n) {
    EnumerationConstraints profiles[5];
    for (auto& p : profiles) p.n = n;
    profiles[1].regular = 3;
    profiles[2].planar_only = true;
    profiles[3].planar_only = true;
    profiles[3].min_edges = profiles[3].max_edges = 3 * n - 6;
    profiles[4].connected_only = true;
    const char* names[5] = {"unconstrained", "cubic", "planar",
                            "triangulation-count", "connected"};
    for (int i = 0; i < 5; ++i) {
      auto a = enumerate_graphs(profiles[i], 4);
      auto b = filter_oracle(profiles[i]);
      c.expect(key_set(a) == key_set(b),
               std::string(names[i]) + " profile matches the oracle at n=" +
                   std::to_string(n));
    }
  }
  const std::size_t want[] = {1, 1, 1, 2, 5, 14};
  for (int n = 3; n <= 8; ++n)
    c.expect(enumerate_triangulations(n).size() == want[n - 3],
             "triangulation count at n=" + std::to_string(n));
  for (int n = 9; n <= 11; ++n) {
    auto a = enumerate_triangulations(n, 1);
    auto b = enumerate_triangulations(n, 8);
    c.expect(a.size() == b.size(), "same count across worker counts");
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i] == b[i];
    c.expect(same, "identical stream across --jobs 1 and --jobs 8 at n=" +
                       std::to_string(n));
  }
}

TEST_CASE("criterion-11 method agreement on the pattern suite") {
  Criterion c("criterion-11");
  for (const char* pat :
       {"C3", "C3^+", "2C3", "prism", "K2,3", "K2,4", "2C4"}) {
    Pattern p = parse_pattern(pat);
    for (int n = 4; n <= 8; ++n) {
      ExtremalResult a = ex_filter(n, p);
      ExtremalResult b = ex_tri_bb(n, p, 4);
      c.expect(a.value == b.value, std::string(pat) + " at n=" +
                                       std::to_string(n) + ": " +
                                       std::to_string(a.value) + " vs " +
                                       std::to_string(b.value));
    }
  }
}

TEST_CASE("criterion-12 flagged discrepancies in reports") {
  Criterion c("criterion-12");
  Report k4 = verify_theorem("dowden.k4", 4, 5, {}, 2);
  c.expect(k4.items.size() == 2, "two items");
  c.expect(k4.items[0].status == "FAIL" && k4.items[0].computed == "5",
           "n=4 FAIL with value 5");
  c.expect(k4.items[1].status == "FAIL" && k4.items[1].computed == "8",
           "n=5 FAIL with value 8");
  bool cites = false;
  for (const ReportItem& it : k4.items)
    cites = cites || it.note.find("n >= 6") != std::string::npos;
  for (const std::string& n : k4.notes)
    cites = cites || n.find("n >= 6") != std::string::npos;
  c.expect(cites, "cites the registered range n >= 6");

  for (int k : {7, 8}) {
    Report l3 = verify_theorem("lemma3", 3 * k - 6, 3 * k + 2,
                               {.n = 0, .k = k}, 2);
    bool noted = false;
    for (const std::string& n : l3.notes)
      noted = noted || n.find("3m-4") != std::string::npos;
    c.expect(noted, "t_stack range note in every lemma-3 report (k=" +
                        std::to_string(k) + ")");
  }
}
