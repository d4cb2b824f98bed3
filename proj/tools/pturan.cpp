// Command-line surface: construct / check / ex / enumerate / verify / scan.
// Exit codes: 0 pass or complete, 1 FAIL or counterexample, 2 usage error,
// 3 search budget exceeded.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pturan/bounds.hpp"
#include "pturan/canonical.hpp"
#include "pturan/enumerate.hpp"
#include "pturan/errors.hpp"
#include "pturan/extremal.hpp"
#include "pturan/family.hpp"
#include "pturan/graph6.hpp"
#include "pturan/pattern.hpp"
#include "pturan/planar.hpp"
#include "pturan/report.hpp"

namespace pt = pturan;

namespace {

struct Options {
  std::string format = "json";
  int jobs = 1;
  std::uint64_t budget = pt::SearchBudget{}.max_nodes;
};

void emit(const pt::Report& rep, const Options& opt) {
  if (opt.format == "text")
    std::cout << pt::to_text(rep);
  else
    std::cout << pt::to_json(rep) << "\n";
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

// ---- construct ----------------------------------------------------------

struct FamilyArgs {
  std::string family, id;
  int n = -1, k = -1, l = -1, r = -1, m = -1, s = -1, t = -1;
};

int need(int v, const char* what) {
  if (v < 0) throw CLI::ValidationError(std::string("missing --") + what);
  return v;
}

// Builds the graph and returns the freeness pattern + expected edge count
// used for the contract check (empty pattern text = no freeness check).
pt::Graph build_family(const FamilyArgs& a, std::string& freeness,
                       long& expected_edges, std::string& note) {
  using pt::BoundParams;
  if (a.family == "q") {
    pt::Graph g = pt::q_triangulation(need(a.k, "k"), need(a.l, "l"));
    freeness = "prism";
    expected_edges = 3L * g.order() - 6;
    return g;
  }
  if (a.family == "double_wheel") {
    pt::Graph g = pt::double_wheel(need(a.n, "n"));
    freeness = "K4";
    expected_edges = 3L * g.order() - 6;
    return g;
  }
  if (a.family == "tc3") {
    pt::Graph g = pt::tc3_lower(need(a.n, "n"));
    freeness = "2C3";
    expected_edges = boost::rational_cast<long>(
        pt::eval_bound("tc3", BoundParams{.n = a.n, .t = 2}).value);
    return g;
  }
  if (a.family == "two_ck") {
    pt::Graph g = pt::two_ck_lower(need(a.n, "n"), need(a.k, "k"));
    freeness = "2C" + std::to_string(a.k);
    expected_edges = boost::rational_cast<long>(
        pt::eval_bound("lemma2ck", BoundParams{.n = a.n, .k = a.k}).value);
    return g;
  }
  if (a.family == "two_ck_improved") {
    pt::Graph g = pt::two_ck_lower_improved(need(a.n, "n"), need(a.k, "k"));
    freeness = "2C" + std::to_string(a.k);
    expected_edges = boost::rational_cast<long>(
        pt::eval_bound("lemma3ck", BoundParams{.n = a.n, .k = a.k}).value);
    note = pt::kTStackRangeNote;
    return g;
  }
  if (a.family == "t_stack") {
    pt::Graph g = pt::t_stack(need(a.m, "m"), need(a.s, "s")).graph;
    freeness = "";
    expected_edges = g.order() >= 3 ? 3L * g.order() - 6 : g.order() - 1;
    note = pt::kTStackRangeNote;
    return g;
  }
  if (a.family == "hex_cyl") {
    pt::Graph g = pt::hex_cylinder(need(a.l, "l"));
    freeness = "";
    expected_edges = g.edge_count();
    return g;
  }
  if (a.family == "r") {
    pt::Graph g = a.n >= 0 ? pt::hex_family_for_order(a.n)
                           : pt::hex_family(need(a.k, "k"), need(a.r, "r"));
    freeness = "K2,3";
    expected_edges = 3L * g.order() - 6;
    return g;
  }
  if (a.family == "o") {
    pt::Graph g = pt::outer_snake(need(a.n, "n"));
    freeness = "K2,3";
    expected_edges = 2L * g.order() - 3;
    return g;
  }
  if (a.family == "k1_o") {
    pt::Graph g = pt::join(pt::complete(1), pt::outer_snake(need(a.n, "n") - 1));
    freeness = "K2,5";
    expected_edges = 3L * g.order() - 6;
    return g;
  }
  if (a.family == "witness") {
    if (a.id.empty()) throw CLI::ValidationError("missing --id");
    pt::Graph g = pt::small_witness(a.id);
    freeness = "";
    expected_edges = g.edge_count();
    if (a.id == "j" || a.id == "jp" || a.id == "jpp") note = pt::kJFamilyNote;
    return g;
  }
  throw CLI::ValidationError("unknown family: " + a.family);
}

int cmd_construct(const FamilyArgs& a, const Options& opt) {
  std::string freeness, note;
  long expected_edges = 0;
  pt::Graph g = build_family(a, freeness, expected_edges, note);

  bool ok = g.edge_count() == expected_edges && pt::is_planar_quick(g);
  std::string fail;
  if (!ok) fail = "edge count or planarity contract failed";
  if (ok && !freeness.empty()) {
    pt::Pattern p = pt::parse_pattern(freeness);
    pt::SearchBudget b{opt.budget};
    if (!pt::is_free(g, p, b)) {
      ok = false;
      fail = "freeness contract failed (" + freeness + ")";
    }
  }
  std::cout << pt::g6_encode(g) << "\n";
  if (!note.empty()) std::cerr << "note: " << note << "\n";
  if (!ok) {
    std::cerr << "contract FAIL: " << fail << "\n";
    return 1;
  }
  std::cerr << "contract ok: n=" << g.order() << " e=" << g.edge_count()
            << (freeness.empty() ? "" : " free=" + freeness) << "\n";
  return 0;
}

// ---- check --------------------------------------------------------------

std::vector<std::string> gather_hosts(const std::string& host) {
  std::vector<std::string> lines;
  auto take = [&](std::istream& in) {
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) lines.push_back(line);
  };
  if (host.empty() || host == "-") {
    take(std::cin);
  } else if (std::filesystem::exists(host)) {
    std::ifstream in(host);
    take(in);
  } else {
    lines.push_back(host);
  }
  return lines;
}

int cmd_check(const std::string& host, const std::string& pattern,
              const Options& opt, const std::string& command) {
  pt::Pattern p = pt::parse_pattern(pattern);
  pt::Report rep;
  rep.command = command;
  for (const std::string& line : gather_hosts(host)) {
    pt::Graph g = pt::g6_decode(line);
    auto t0 = std::chrono::steady_clock::now();
    pt::SearchStats ss;
    auto m = pt::contains(g, p, pt::SearchBudget{opt.budget}, &ss);
    pt::ReportItem it;
    it.id = "check";
    it.params = "host=" + pt::g6_encode(g) + " pattern=" + p.display_name;
    it.computed = m ? "present" : "absent";
    it.expected = "free=" + std::string(m ? "false" : "true");
    it.status = "INFO";
    if (m) {
      std::string w;
      for (std::size_t i = 0; i < m->size(); ++i) {
        if (i) w += ' ';
        w += std::to_string(i) + "->" + std::to_string((*m)[i]);
      }
      it.note = "witness map: " + w;
    }
    it.stats = "search_nodes=" + std::to_string(ss.nodes);
    it.runtime_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    rep.items.push_back(std::move(it));
  }
  emit(rep, opt);
  return 0;
}

// ---- ex -----------------------------------------------------------------

int cmd_ex(int n, const std::string& pattern, const std::string& method,
           const Options& opt, const std::string& command) {
  pt::Pattern p = pt::parse_pattern(pattern);
  pt::ExtremalResult r =
      pt::compute_ex(n, p, method, opt.jobs, pt::SearchBudget{opt.budget});
  pt::Report rep;
  rep.command = command;
  pt::ReportItem it;
  it.id = "ex";
  it.params = "n=" + std::to_string(n) + " pattern=" + p.display_name +
              " method=" + r.method;
  it.computed = std::to_string(r.value);
  it.status = "INFO";
  it.witnesses = r.witnesses;
  it.stats = r.stats.summary();
  it.runtime_ms = r.stats.runtime_ms;
  rep.items.push_back(std::move(it));
  emit(rep, opt);
  return 0;
}

// ---- enumerate ----------------------------------------------------------

int cmd_enumerate(const std::string& klass, int n, int regular, bool planar,
                  bool connected, int min_deg, int max_deg, long min_edges,
                  long max_edges, const std::string& then_filter,
                  const Options& opt) {
  std::vector<pt::Graph> out;
  if (klass == "triangulations") {
    out = pt::enumerate_triangulations(n, opt.jobs);
  } else {
    pt::EnumerationConstraints c;
    c.n = n;
    c.planar_only = planar;
    c.connected_only = connected;
    c.min_degree = min_deg;
    c.max_degree = max_deg;
    c.min_edges = min_edges;
    c.max_edges = max_edges;
    if (klass == "cubic")
      c.regular = 3;
    else if (regular >= 0)
      c.regular = regular;
    if (klass != "graphs" && klass != "cubic")
      throw CLI::ValidationError("unknown class: " + klass);
    out = pt::enumerate_graphs(c, opt.jobs);
  }
  if (!then_filter.empty()) {
    std::string expr = then_filter;
    if (expr.size() > 5 && expr.substr(expr.size() - 5) == "-free")
      expr = expr.substr(0, expr.size() - 5);
    pt::Pattern p = pt::parse_pattern(expr);
    std::erase_if(out, [&](const pt::Graph& g) {
      return !pt::is_free(g, p, pt::SearchBudget{opt.budget});
    });
  }
  for (const pt::Graph& g : out) std::cout << pt::g6_encode(g) << "\n";
  std::cerr << out.size() << " graphs\n";
  return 0;
}

// ---- verify / scan ------------------------------------------------------

int cmd_verify(const std::string& theorem, int from, int to, int k, int t,
               const Options& opt, const std::string& command) {
  pt::BoundParams params;
  params.n = from;
  if (k >= 0) params.k = k;
  if (t >= 0) params.t = t;
  pt::Report rep = pt::verify_theorem(theorem, from, to, params, opt.jobs);
  rep.command = command;
  emit(rep, opt);
  return rep.exit_code();
}

int cmd_scan(const std::string& conjecture, int n_from, int n_to, int k_from,
             int k_to, const Options& opt, const std::string& command) {
  pt::Report rep =
      pt::scan_conjecture(conjecture, n_from, n_to, k_from, k_to, opt.jobs);
  rep.command = command;
  emit(rep, opt);
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar Turan toolkit: constructions, exact ex_P(n,H) search, "
               "theorem verification"};
  app.set_version_flag("--version",
                       std::string(pt::kToolName) + " " + pt::kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Report format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", opt.jobs, "Worker threads (output is identical)")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", opt.budget, "Search node budget");

  std::string command = join_args(argc, argv);

  FamilyArgs fa;
  CLI::App* construct =
      app.add_subcommand("construct", "Emit a named construction as graph6");
  construct->add_option("--family", fa.family, "Family id")->required();
  construct->add_option("--id", fa.id, "Witness id (family=witness)");
  construct->add_option("--n", fa.n);
  construct->add_option("--k", fa.k);
  construct->add_option("--l", fa.l);
  construct->add_option("--r", fa.r);
  construct->add_option("--m", fa.m);
  construct->add_option("--s", fa.s);
  construct->add_option("--t", fa.t);

  std::string host, pattern;
  CLI::App* check = app.add_subcommand("check", "Pattern freeness + witness");
  check->add_option("--host", host, "graph6 string, file, or - for stdin");
  check->add_option("--pattern", pattern, "Pattern expression")->required();

  int ex_n = 0;
  std::string ex_pattern, ex_method = "auto";
  CLI::App* ex = app.add_subcommand("ex", "Exact planar Turan number");
  ex->add_option("--n", ex_n)->required();
  ex->add_option("--pattern", ex_pattern)->required();
  ex->add_option("--method", ex_method, "filter|tri-bb|auto")
      ->check(CLI::IsMember({"filter", "tri-bb", "auto"}));

  std::string en_class = "graphs", then_filter;
  int en_n = 0, en_regular = -1, en_min_deg = 0, en_max_deg = 64;
  long en_min_edges = 0, en_max_edges = 1L << 30;
  bool en_planar = false, en_connected = false;
  CLI::App* en = app.add_subcommand("enumerate", "Isomorph-free streams");
  en->add_option("--class", en_class, "graphs|triangulations|cubic");
  en->add_option("--n", en_n)->required();
  en->add_option("--regular", en_regular);
  en->add_flag("--planar", en_planar);
  en->add_flag("--connected", en_connected);
  en->add_option("--min-deg", en_min_deg);
  en->add_option("--max-deg", en_max_deg);
  en->add_option("--min-edges", en_min_edges);
  en->add_option("--max-edges", en_max_edges);
  en->add_option("--then-filter", then_filter,
                 "Post-filter, e.g. K4-free or 2C3-free");

  std::string theorem;
  int v_from = 0, v_to = 0, v_k = -1, v_t = -1;
  CLI::App* verify = app.add_subcommand("verify", "Check a registered theorem");
  verify->add_option("--theorem", theorem)->required();
  verify->add_option("--from", v_from);
  verify->add_option("--to", v_to);
  verify->add_option("--k", v_k);
  verify->add_option("--t", v_t);

  std::string conjecture;
  int s_nfrom = 3, s_nto = 9, s_kfrom = 3, s_kto = 9;
  CLI::App* scan = app.add_subcommand("scan", "Conjecture counterexample scan");
  scan->add_option("--conjecture", conjecture)->required();
  scan->add_option("--n-from", s_nfrom);
  scan->add_option("--n-to", s_nto);
  scan->add_option("--k-from", s_kfrom);
  scan->add_option("--k-to", s_kto);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (construct->parsed()) return cmd_construct(fa, opt);
    if (check->parsed()) return cmd_check(host, pattern, opt, command);
    if (ex->parsed()) return cmd_ex(ex_n, ex_pattern, ex_method, opt, command);
    if (en->parsed())
      return cmd_enumerate(en_class, en_n, en_regular, en_planar, en_connected,
                           en_min_deg, en_max_deg, en_min_edges, en_max_edges,
                           then_filter, opt);
    if (verify->parsed())
      return cmd_verify(theorem, v_from, v_to, v_k, v_t, opt, command);
    if (scan->parsed())
      return cmd_scan(conjecture, s_nfrom, s_nto, s_kfrom, s_kto, opt, command);
  } catch (const pt::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const pt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const pt::SizeError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
