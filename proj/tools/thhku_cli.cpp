// Command-line front end. Exit status: 0 when every check passes, 1 on a
// check failure, 2 on a usage error or an unwritable output path.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "thhku/bockstein.hpp"
#include "thhku/consistency.hpp"
#include "thhku/differential_graph.hpp"
#include "thhku/json_io.hpp"
#include "thhku/render.hpp"
#include "thhku/resolutions.hpp"
#include "thhku/sweep.hpp"
#include "thhku/thh_presentations.hpp"
#include "thhku/torsion_block.hpp"

namespace {

using namespace thhku;

constexpr const char* kOutputDirEnv = "THHKU_OUTPUT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  long p = 3;
  int D = -1;  // 2p^3 + 4p when unset
  std::string format;
  std::string out;
  std::string ss = "u";
  std::string module = "ku";
  std::string page = "uz";
  std::string tor_case = "all";
  int n = 1;
  int k = 1;
  long long n_max = -1;  // p^6 when unset
  std::uint64_t seed = 0;
  int count = 250;
  int jobs = 1;
};

int resolved_D(const RunConfig& c) {
  const int D = c.D < 0 ? static_cast<int>(2 * c.p * c.p * c.p + 4 * c.p) : c.D;
  if (D < 2 * c.p) throw UsageError("--D must be at least 2p = " + std::to_string(2 * c.p));
  return D;
}

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (c.format == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw UsageError("--format must be one of: " + list);
}

// Writes to --out, else to $THHKU_OUTPUT_DIR/<default_name>, else to stdout.
void emit(const RunConfig& c, const std::string& text, const std::string& default_name) {
  std::filesystem::path path;
  if (!c.out.empty()) {
    path = c.out;
  } else if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
    path = std::filesystem::path(dir) / default_name;
  } else {
    std::cout << text;
    return;
  }
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) throw UsageError("cannot write " + path.string());
  std::cerr << "wrote " << path.string() << "\n";
}

std::string stem(const RunConfig& c, const std::string& what) {
  return what + "_p" + std::to_string(c.p) + "_D" + std::to_string(resolved_D(c));
}

// ---- pages ----

std::string pages_table(const SSRun& run, long p) {
  std::ostringstream out;
  auto page = [&](const RulePage& pg, const std::string& head) {
    out << head << "\n";
    for (const auto& [key, grp] : pg.groups) {
      const auto [degree, y] = key;
      out << "  (" << degree - y << "," << y << ")  " << grp.value.to_string(p) << "  {";
      for (size_t i = 0; i < grp.basis.size(); ++i) out << (i ? ", " : "") << grp.basis[i];
      out << "}\n";
    }
    for (const auto& d : pg.differentials)
      out << "  d^" << d.r << " [s=" << d.shift << ", " << d.family << "]: " << d.from << " -> " << d.to
          << "  (p^" << d.coeff_valuation << ")\n";
  };
  for (const auto& pg : run.pages()) page(pg, "E^" + std::to_string(pg.r) + " (s = " + std::to_string(pg.shift) + ")");
  page(run.engine->einfty_page(), "E^inf");
  if (!run.edge_uncertain.empty()) {
    out << "edge-uncertain (degree above D):";
    for (const auto& s : run.edge_uncertain) out << " " << s;
    out << "\n";
  }
  return out.str();
}

int cmd_pages(RunConfig c) {
  if (c.format.empty()) c.format = "json";
  require_format(c, {"json", "table"});
  const auto id = parse_ss_id(c.ss);
  if (!id) throw UsageError("unknown spectral sequence '" + c.ss + "'");
  const int D = resolved_D(c);
  const NamedSS ss = build_e1(*id, c.p, D);
  const SSRun run = run_rules(ss);
  emit(c, c.format == "json" ? pages_json(run, c.p) : pages_table(run, c.p),
       stem(c, "pages_" + c.ss) + (c.format == "json" ? ".json" : ".txt"));
  return 0;
}

// ---- presentation ----

Presentation chosen_presentation(const RunConfig& c, int D) {
  if (c.module == "l") return presentation_thh_l(c.p, D);
  if (c.module == "modv1") return presentation_thh_ku_modv1(c.p, D);
  if (c.module == "ku") return presentation_thh_ku(c.p, D);
  throw UsageError("--module must be one of: l, modv1, ku");
}

std::string summand_name(long p, int e) {
  if (e == 0) return "Z_(" + std::to_string(p) + ")";
  return e == 1 ? "Z/" + std::to_string(p) : "Z/" + std::to_string(p) + "^" + std::to_string(e);
}

std::string presentation_table(const PresentedModule& M, int D) {
  const Presentation& P = M.presentation();
  std::ostringstream out;
  out << P.title << ", degrees 0.." << D << "\n";
  out << "degree  group\n";
  for (int d = 0; d <= D; ++d) {
    auto parts = describe_group(M, d);
    if (parts.empty()) continue;
    // Free summands first, then cyclic ones by increasing order.
    std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
      return a.exponent < b.exponent;
    });
    std::string row;
    for (const auto& s : parts)
      row += (row.empty() ? "" : " + ") + summand_name(P.p, s.exponent) + " {" + s.representative + "}";
    char lead[16];
    std::snprintf(lead, sizeof lead, "%-6d  ", d);
    out << lead << row << "\n";
  }
  out << "generators:\n";
  for (const auto& g : P.generators)
    if (g.degree <= D) out << "  " << g.name << "  |" << g.degree << "|\n";
  out << "relations:\n";
  for (const auto& r : P.relations)
    if (!r.lhs.empty() && P.term_degree(r.lhs.front()) <= D)
      out << "  " << P.side_string(r.lhs) << " = " << (r.rhs.empty() ? "0" : P.side_string(r.rhs)) << "\n";
  return out.str();
}

int cmd_presentation(RunConfig c) {
  if (c.format.empty()) c.format = "table";
  require_format(c, {"json", "table"});
  const int D = resolved_D(c);
  const PresentedModule M(chosen_presentation(c, D));
  emit(c, c.format == "json" ? presentation_json(M, D) : presentation_table(M, D),
       stem(c, "presentation_" + c.module) + (c.format == "json" ? ".json" : ".txt"));
  return 0;
}

// ---- diagram ----

int cmd_diagram(RunConfig c) {
  if (c.format.empty()) c.format = "svg";
  require_format(c, {"svg", "tikz", "json"});
  if (c.n < 1) throw UsageError("--n must be at least 1");
  if (c.k < 1 || c.k > c.p - 1) throw UsageError("--k must lie in [1, p-1]");
  TorsionBlock block;
  try {
    block = torsion_block(c.p, c.n, c.k);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::string text;
  if (c.format == "svg") text = render_svg(block);
  else if (c.format == "tikz") text = render_tikz(block);
  else text = block_json(block);
  const std::string name = "T" + std::to_string(c.n) + "_p" + std::to_string(c.p) + "_k" + std::to_string(c.k);
  emit(c, text, name + (c.format == "svg" ? ".svg" : c.format == "tikz" ? ".tikz" : ".json"));
  std::cerr << block.nodes.size() << " nodes, " << block.edges.size() << " edges\n";
  return 0;
}

// ---- verify ----

int cmd_verify(RunConfig c) {
  if (c.format.empty()) c.format = "table";
  require_format(c, {"json", "table"});
  const int D = resolved_D(c);
  const ConsistencyReport r = verify_consistency(c.p, D);
  std::string text;
  if (c.format == "json") {
    text = report_json(r);
  } else {
    std::ostringstream out;
    for (const auto& ch : r.checks) {
      out << (ch.passed ? "PASS " : "FAIL ") << ch.name << "  [" << ch.degrees_checked << " degrees]";
      if (!ch.passed) out << "  first failure at degree " << ch.first_failing_degree << ": " << ch.detail;
      out << "\n";
    }
    out << (r.passed() ? "all checks passed" : "some checks failed") << "\n";
    text = out.str();
  }
  emit(c, text, stem(c, "verify") + (c.format == "json" ? ".json" : ".txt"));
  if (const CheckOutcome* f = r.first_failure())
    std::cerr << "first failure: " << f->name << " at degree " << f->first_failing_degree << "\n";
  return r.passed() ? 0 : 1;
}

// ---- lint ----

int cmd_lint(RunConfig c) {
  if (c.format.empty()) c.format = "table";
  require_format(c, {"json", "table"});
  const int D = resolved_D(c);
  std::vector<LintCandidate> cands;
  std::string title;
  std::optional<LintVerdict> verdict;
  if (c.page == "uz") {
    const LintPage pg = uz_page(c.p, D);
    title = pg.title;
    cands = collapse_linter(pg);
    verdict = lint_uz(c.p, D);
  } else if (c.page == "kunneth" || c.page == "brun") {
    const LintPage pg = c.page == "kunneth" ? kunneth_truncated_page(c.p, D) : brun_coefficient_page(c.p, D);
    title = pg.title;
    cands = collapse_linter(pg);
    verdict = lint_indecomposables(pg);
  } else if (const auto id = parse_ss_id(c.page)) {
    // A named E^1 page has genuine differentials; the scan is a report only.
    const NamedSS ss = build_e1(*id, c.p, D);
    title = to_string(*id);
    cands = collapse_linter(ss);
  } else {
    throw UsageError("--page must be uz, kunneth, brun or a spectral sequence id");
  }
  std::string text;
  if (c.format == "json") {
    text = lint_json(title, cands);
  } else {
    std::ostringstream out;
    out << title << ": " << cands.size() << " candidates\n";
    for (const auto& x : cands) {
      out << "  d^" << x.r << ": " << x.source << " -> " << x.target;
      if (x.source_zero || x.target_zero)
        out << "  [zero " << (x.source_zero ? (x.target_zero ? "ends" : "source") : "target") << "]";
      if (x.source_indecomposable) out << "  [indecomposable]";
      out << "\n";
    }
    if (verdict) {
      for (const auto& o : verdict->offenders) out << "  offender: " << o << "\n";
      out << (verdict->passed() ? "PASS" : "FAIL") << "\n";
    }
    text = out.str();
  }
  emit(c, text, stem(c, "lint_" + c.page) + (c.format == "json" ? ".json" : ".txt"));
  if (verdict && !verdict->passed()) {
    std::cerr << "first failure: " << verdict->offenders.front() << "\n";
    return 1;
  }
  return 0;
}

// ---- graph ----

int cmd_graph(RunConfig c) {
  if (c.format.empty()) c.format = "table";
  require_format(c, {"json", "table"});
  long long n_max = c.n_max;
  if (n_max < 0) {
    n_max = 1;
    for (int i = 0; i < 6; ++i) n_max *= c.p;
  }
  if (n_max < c.p * c.p) throw UsageError("--N-max must be at least p^2");
  const GraphReport r = differential_graph(c.p, n_max);
  std::string text;
  if (c.format == "json") {
    text = report_json(r);
  } else {
    std::ostringstream out;
    out << "p = " << r.p << ", N_max = " << r.N_max << ": " << r.vertices.size() << " vertices, " << r.edges.size()
        << " edges, " << r.components.size() << " components\n";
    out << (r.bipartite ? "PASS" : "FAIL") << " bipartite\n";
    out << (r.acyclic ? "PASS" : "FAIL") << " acyclic" << (r.acyclic ? "" : " (cycle closed by " + r.cycle_edge + ")")
        << "\n";
    out << (r.unique_edge_ok() ? "PASS" : "FAIL") << " unique non-decreasing-valuation edge (" << r.exempt.size()
        << " exempt)\n";
    for (const auto& v : r.uniqueness_violations) out << "  violation: " << v << "\n";
    text = out.str();
  }
  emit(c, text, "graph_p" + std::to_string(c.p) + "_N" + std::to_string(n_max) + (c.format == "json" ? ".json" : ".txt"));
  if (!r.passed()) {
    std::cerr << "first failure: "
              << (!r.bipartite ? std::string("not bipartite")
                  : !r.acyclic ? "cycle at " + r.cycle_edge
                               : r.uniqueness_violations.front())
              << "\n";
    return 1;
  }
  return 0;
}

// ---- proptest ----

int cmd_proptest(RunConfig c) {
  if (c.format.empty()) c.format = "table";
  require_format(c, {"json", "table"});
  int jobs = c.jobs;
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  RandomComplexParams params;
  params.ring = {c.p, false};
  const SweepReport r = run_sweep(c.seed, c.count, jobs, params);
  std::string text;
  if (c.format == "json") {
    text = report_json(r);
  } else {
    std::ostringstream out;
    out << "seeds " << r.first_seed << ".." << r.first_seed + r.count - 1 << " over Z_(" << c.p << ")\n";
    for (const auto& [t, tally] : r.theorems) {
      out << (tally.failures == 0 ? "PASS " : "FAIL ") << to_string(t) << "  " << tally.instances << " instances, "
          << tally.failures << " failures";
      if (!tally.first_failure.empty()) out << "  first: " << tally.first_failure;
      out << "\n";
    }
    out << (r.oracle_mismatches == 0 ? "PASS " : "FAIL ") << "E^inf = einfty_oracle  " << r.oracle_mismatches
        << " mismatches\n";
    out << (r.fixture_passed ? "PASS " : "FAIL ") << "counterexample fixture\n";
    text = out.str();
  }
  emit(c, text, "proptest_seed" + std::to_string(c.seed) + "_n" + std::to_string(c.count) +
                    (c.format == "json" ? ".json" : ".txt"));
  return r.passed() ? 0 : 1;
}

// ---- tor ----

int cmd_tor(RunConfig c) {
  if (c.format.empty()) c.format = "table";
  require_format(c, {"json", "table"});
  const int D = c.D < 0 ? static_cast<int>(6 * c.p) : resolved_D(c);
  std::vector<TorCase> cases;
  if (c.tor_case == "all") cases = all_tor_cases();
  else if (const auto tc = parse_tor_case(c.tor_case)) cases = {*tc};
  else throw UsageError("--case must be all, ku_res, trunc_tensor, divided_power or rational");
  bool ok = true;
  std::ostringstream out;
  for (TorCase tc : cases) {
    const BigradedGroup h = periodic_resolution_homology(resolution_spec(tc, c.p, D), D);
    const bool same = h == tor_closed_form(tc, c.p, D);
    const bool stable = stable_under_extra_period(tc, c.p, D);
    ok = ok && same && stable;
    if (c.format == "json") {
      out << bigraded_json(h);
    } else {
      out << ((same && stable) ? "PASS " : "FAIL ") << to_string(tc) << "  closed form " << (same ? "agrees" : "differs")
          << ", extra period " << (stable ? "stable" : "changes") << "\n";
      for (const auto& [key, v] : h.entries())
        out << "  (" << key.first << "," << key.second << ")  " << v.to_string(c.p) << "\n";
    }
  }
  emit(c, out.str(), "tor_p" + std::to_string(c.p) + "_D" + std::to_string(D) + (c.format == "json" ? ".json" : ".txt"));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bockstein spectral sequences and THH of connective K-theory"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool with_D = true) {
    sub->add_option("--p", cfg.p, "odd prime")->check(CLI::IsMember({3L, 5L, 7L}));
    if (with_D) sub->add_option("--D", cfg.D, "degree bound (default 2p^3 + 4p)");
    sub->add_option("--format", cfg.format, "json, table, svg or tikz");
    sub->add_option("--out", cfg.out, std::string("output path (default: $") + kOutputDirEnv + " or stdout)");
  };

  auto* pages = app.add_subcommand("pages", "dump the page sequence of a named spectral sequence");
  common(pages);
  pages->add_option("--ss", cfg.ss, "lZ, l, uT, uTB, v1 or u");

  auto* pres = app.add_subcommand("presentation", "degreewise table with generators and relations");
  common(pres);
  pres->add_option("--module", cfg.module, "l, modv1 or ku");

  auto* diagram = app.add_subcommand("diagram", "render a torsion block T_n");
  common(diagram, false);
  diagram->add_option("--n", cfg.n, "block index n >= 1");
  diagram->add_option("--k", cfg.k, "periodic copy in [1, p-1]");

  auto* verify = app.add_subcommand("verify", "cross-consistency checks");
  common(verify);

  auto* lint = app.add_subcommand("lint", "bidegree scan for possible differentials");
  common(lint);
  lint->add_option("--page", cfg.page, "uz, kunneth, brun or a spectral sequence id");

  auto* graph = app.add_subcommand("graph", "differential graph report");
  common(graph, false);
  graph->add_option("--N-max", cfg.n_max, "largest μ-index (default p^6)");

  auto* prop = app.add_subcommand("proptest", "transfer and oracle sweeps over random filtered complexes");
  common(prop, false);
  prop->add_option("--seed", cfg.seed, "first seed");
  prop->add_option("--count", cfg.count, "number of seeds")->check(CLI::PositiveNumber);
  prop->add_option("--jobs", cfg.jobs, "worker threads; 0 for all cores");

  auto* tor = app.add_subcommand("tor", "periodic resolutions against closed-form Tor");
  common(tor);
  tor->add_option("--case", cfg.tor_case, "all, ku_res, trunc_tensor, divided_power or rational");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*pages) return cmd_pages(cfg);
    if (*pres) return cmd_presentation(cfg);
    if (*diagram) return cmd_diagram(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*lint) return cmd_lint(cfg);
    if (*graph) return cmd_graph(cfg);
    if (*prop) return cmd_proptest(cfg);
    if (*tor) return cmd_tor(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
