#include "thhku/json_io.hpp"

#include <json.hpp>

namespace thhku {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json torsion_array(const GroupValue& g) { return json(g.torsion); }

std::string position(int x, int y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

}  // namespace

std::string pages_json(const SpectralSequence& ss) {
  json out = json::array();
  for (const Page& pg : ss.pages()) {
    json page;
    page["r"] = pg.r;
    json entries = json::array();
    json diffs = json::array();
    for (const auto& [key, e] : pg.entries) {
      const GroupValue g = e.group.value();
      entries.push_back({{"x", e.x()}, {"y", e.y()}, {"free_rank", g.free_rank}, {"torsion", torsion_array(g)},
                         {"basis", e.names}});
      const PageEntry* tgt = pg.find(e.degree - 1, e.level + pg.r);
      if (!tgt) continue;
      for (int j = 0; j < e.differential.cols(); ++j)
        for (int i = 0; i < e.differential.rows() && i < static_cast<int>(tgt->names.size()); ++i) {
          const Scalar& c = e.differential.at(i, j);
          if (c == 0) continue;
          diffs.push_back({{"r", pg.r},
                           {"s", pg.r},
                           {"from", e.names[j] + " @" + position(e.x(), e.y())},
                           {"to", tgt->names[i] + " @" + position(tgt->x(), tgt->y())},
                           {"coeff", c.get_str()}});
        }
    }
    page["entries"] = std::move(entries);
    page["differentials"] = std::move(diffs);
    out.push_back(std::move(page));
  }
  return dump(out);
}

std::string pages_json(const SSRun& run, long p) {
  json out = json::array();
  auto emit = [&](const RulePage& pg) {
    json page;
    page["r"] = pg.r;
    page["s"] = pg.shift;
    json entries = json::array();
    for (const auto& [key, grp] : pg.groups) {
      const auto [degree, y] = key;
      entries.push_back({{"x", degree - y},
                         {"y", y},
                         {"free_rank", grp.value.free_rank},
                         {"torsion", torsion_array(grp.value)},
                         {"basis", grp.basis}});
    }
    json diffs = json::array();
    for (const RuleDifferential& d : pg.differentials) {
      const std::string coeff = d.coeff_valuation == 0 ? "1" : std::to_string(p) + "^" + std::to_string(d.coeff_valuation);
      diffs.push_back({{"r", d.r},
                       {"s", d.shift},
                       {"family", d.family},
                       {"from", d.from + " @" + position(d.degree - d.y, d.y)},
                       {"to", d.to + " @" + position(d.degree - 1 - d.y - d.r, d.y + d.r)},
                       {"coeff", coeff}});
    }
    page["entries"] = std::move(entries);
    page["differentials"] = std::move(diffs);
    out.push_back(std::move(page));
  };
  for (const RulePage& pg : run.pages()) emit(pg);
  emit(run.engine->einfty_page());
  return dump(out);
}

std::vector<DescribedSummand> describe_group(const PresentedModule& module, int degree) {
  const auto& pc = module.piece(degree);
  std::vector<DescribedSummand> out;
  for (int i = 0; i < pc.module.size(); ++i)
    out.push_back({pc.module.exponent(i), module.describe(degree, pc.module.representative(i))});
  return out;
}

std::string presentation_json(const PresentedModule& module, int max_degree) {
  const Presentation& P = module.presentation();
  json out;
  out["title"] = P.title;
  out["p"] = P.p;
  out["variable"] = P.variable;
  out["variable_degree"] = P.variable_degree;
  out["truncation"] = P.truncation;
  json gens = json::array();
  for (const auto& g : P.generators)
    if (g.degree <= max_degree) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  out["generators"] = std::move(gens);
  json rels = json::array();
  for (const auto& r : P.relations) {
    if (r.lhs.empty() || P.term_degree(r.lhs.front()) > max_degree) continue;
    rels.push_back({{"lhs", P.side_string(r.lhs)}, {"rhs", r.rhs.empty() ? "0" : P.side_string(r.rhs)}, {"family", r.family}});
  }
  out["relations"] = std::move(rels);
  json groups = json::array();
  for (int d = 0; d <= max_degree; ++d) {
    const GroupValue g = module.group(d);
    if (g.is_zero()) continue;
    json basis = json::array();
    for (const auto& s : describe_group(module, d)) basis.push_back({{"order", s.exponent}, {"generator", s.representative}});
    groups.push_back({{"degree", d}, {"group", g.to_string(P.p)}, {"basis", std::move(basis)}});
  }
  out["groups"] = std::move(groups);
  return dump(out);
}

std::string bigraded_json(const BigradedGroup& g) {
  json out = json::array();
  for (const auto& [key, v] : g.entries())
    out.push_back({{"x", key.first}, {"y", key.second}, {"free_rank", v.free_rank}, {"torsion", torsion_array(v)}});
  return dump(out);
}

std::string report_json(const ConsistencyReport& report) {
  json out;
  out["kind"] = "verify";
  out["p"] = report.p;
  out["D"] = report.D;
  out["passed"] = report.passed();
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"first_failing_degree", c.first_failing_degree},
                      {"degrees_checked", c.degrees_checked},
                      {"detail", c.detail}});
  out["checks"] = std::move(checks);
  return dump(out);
}

std::string report_json(const GraphReport& report) {
  json out;
  out["kind"] = "graph";
  out["p"] = report.p;
  out["N_max"] = report.N_max;
  out["passed"] = report.passed();
  out["vertices"] = report.vertices.size();
  out["edges"] = report.edges.size();
  out["bipartite"] = report.bipartite;
  out["acyclic"] = report.acyclic;
  out["cycle_edge"] = report.cycle_edge;
  json exempt = json::array();
  for (int v : report.exempt) exempt.push_back(report.vertices[v].name());
  out["exempt"] = std::move(exempt);
  out["uniqueness_violations"] = report.uniqueness_violations;
  json comps = json::array();
  for (const auto& c : report.components)
    comps.push_back({{"root", report.vertices[c.root].name()}, {"size", c.size}, {"edges", c.edges}});
  out["components"] = std::move(comps);
  return dump(out);
}

std::string report_json(const SweepReport& report) {
  json out;
  out["kind"] = "proptest";
  out["first_seed"] = report.first_seed;
  out["count"] = report.count;
  out["passed"] = report.passed();
  json th = json::array();
  for (const auto& [t, tally] : report.theorems)
    th.push_back({{"theorem", to_string(t)},
                  {"instances", tally.instances},
                  {"failures", tally.failures},
                  {"first_failure", tally.first_failure}});
  out["theorems"] = std::move(th);
  out["oracle_mismatches"] = report.oracle_mismatches;
  out["mismatched_seeds"] = report.mismatched_seeds;
  out["fixture_passed"] = report.fixture_passed;
  return dump(out);
}

std::string block_json(const TorsionBlock& block) {
  json out;
  out["kind"] = "torsion_block";
  out["p"] = block.p;
  out["n"] = block.n;
  out["k"] = block.k;
  out["degrees"] = {block.lo, block.hi};
  json nodes = json::array();
  for (const auto& n : block.nodes)
    nodes.push_back({{"id", n.tikz_id()},
                     {"name", n.name()},
                     {"N", n.N},
                     {"h", n.h},
                     {"j", n.j},
                     {"degree", n.degree},
                     {"mark", n.from_l ? "circ" : "bullet"},
                     {"named", n.named}});
  out["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const auto& e : block.edges)
    edges.push_back({{"from", block.nodes[e.from].tikz_id()},
                     {"to", block.nodes[e.to].tikz_id()},
                     {"kind", e.kind == EdgeKind::U ? "u" : "p"},
                     {"bent", e.bent},
                     {"sum", e.sum}});
  out["edges"] = std::move(edges);
  return dump(out);
}

std::string lint_json(const std::string& title, const std::vector<LintCandidate>& candidates) {
  json out;
  out["kind"] = "lint";
  out["page"] = title;
  json cs = json::array();
  for (const auto& c : candidates)
    cs.push_back({{"source", c.source},
                  {"target", c.target},
                  {"r", c.r},
                  {"source_zero", c.source_zero},
                  {"target_zero", c.target_zero},
                  {"source_indecomposable", c.source_indecomposable}});
  out["candidates"] = std::move(cs);
  return dump(out);
}

}  // namespace thhku
