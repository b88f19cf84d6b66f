#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "thhku/bockstein.hpp"
#include "thhku/consistency.hpp"
#include "thhku/differential_graph.hpp"
#include "thhku/thh_presentations.hpp"
#include "thhku/torsion_block.hpp"

using namespace thhku;

namespace {

const BasisClass* find_class(const NamedSS& ss, const std::string& name) {
  for (const auto& c : ss.classes)
    if (c.label.name() == name) return &c;
  return nullptr;
}

// lhs == rhs in the degree of lhs, both given as sums of terms.
bool holds(const PresentedModule& m, const std::vector<PresTerm>& lhs, const std::vector<PresTerm>& rhs) {
  const int d = m.presentation().term_degree(lhs.front());
  Vec x = m.vector(d, lhs);
  if (!rhs.empty()) {
    const Vec y = m.vector(d, rhs);
    for (size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
  }
  return m.is_zero(d, x);
}

PresTerm term(const PresentedModule& m, const std::string& name, int power = 0, long coeff = 1) {
  const int g = m.presentation().index_of(name);
  REQUIRE_MESSAGE(g >= 0, name);
  return {Scalar(coeff), power, g};
}

const RuleDifferential* find_differential(const SSRun& run, const std::string& from) {
  for (const auto& pg : run.pages())
    for (const auto& d : pg.differentials)
      if (d.from == from) return &d;
  return nullptr;
}

// (free rank, torsion length) per total degree, compared lexicographically.
std::map<int, std::pair<int, int>> sizes(const RulePage& pg, int max_degree) {
  std::map<int, std::pair<int, int>> out;
  for (const auto& [key, grp] : pg.groups) {
    if (key.first > max_degree) continue;
    auto& s = out[key.first];
    s.first += grp.value.free_rank;
    s.second += grp.value.torsion_length();
  }
  return out;
}

}  // namespace

TEST_CASE("E^1 pages") {
  const NamedSS u = build_e1(SSId::u, 3, 6);
  const BasisClass* mu3 = find_class(u, "μ_3");
  REQUIRE(mu3 != nullptr);
  CHECK(mu3->degree == 5);
  CHECK(mu3->y == 0);
  CHECK(mu3->order == 1);

  std::set<int> heights;
  const NamedSS ut = build_e1(SSId::uT, 3, 20);
  for (const auto& c : ut.classes)
    if (c.label.mu == 0 && c.label.su == 0) heights.insert(c.y);
  CHECK(heights == std::set<int>{0, 2});

  // The smallest admissible window is D = 2p; the classes through degree 5 are the same.
  const NamedSS lz = build_e1(SSId::lZ, 3, 6);
  std::map<std::string, std::pair<int, int>> low;
  for (const auto& c : lz.classes)
    if (c.degree <= 5) low[c.label.name()] = {c.x(), c.y};
  CHECK(low == std::map<std::string, std::pair<int, int>>{{"1", {0, 0}}, {"σv₁", {0, 5}}, {"μ_3", {5, 0}}});
}

TEST_CASE("E^1 argument errors") {
  CHECK_THROWS_AS(build_e1(SSId::u, 2, 20), std::invalid_argument);
  CHECK_THROWS_AS(build_e1(SSId::u, 9, 40), std::invalid_argument);
  CHECK_THROWS_AS(build_e1(SSId::u, 3, 5), std::invalid_argument);
  for (SSId id : all_ss_ids()) CHECK(parse_ss_id(to_string(id)) == id);
  CHECK_FALSE(parse_ss_id("uZ").has_value());
}

TEST_CASE("rule differentials") {
  const SSRun u = run_rules(build_e1(SSId::u, 3, 20));
  const RuleDifferential* d6 = find_differential(u, "μ_6");
  REQUIRE(d6 != nullptr);
  CHECK(d6->to == "uσuμ_3");
  CHECK(d6->coeff_valuation == 0);
  // μ_9 is hit by nothing and its only differential lands on uσuμ_6 at n = 0, k = 2.
  const RuleDifferential* d9 = find_differential(u, "μ_9");
  REQUIRE(d9 != nullptr);
  CHECK(d9->to == "uσuμ_6");

  const SSRun lz = run_rules(build_e1(SSId::lZ, 3, 20));
  const RuleDifferential* z6 = find_differential(lz, "μ_6");
  REQUIRE(z6 != nullptr);
  CHECK(z6->to == "σv₁μ_3");
  CHECK(z6->coeff_valuation == 0);
  CHECK(z6->r == 5);
}

TEST_CASE("each page is no larger than the one before") {
  for (long p : {3L, 5L})
    for (SSId id : all_ss_ids()) {
      const int D = static_cast<int>(2 * p * p + 6);
      const SSRun run = run_rules(build_e1(id, p, D));
      std::vector<const RulePage*> seq;
      for (const auto& pg : run.pages()) seq.push_back(&pg);
      seq.push_back(&run.engine->einfty_page());
      for (size_t i = 1; i < seq.size(); ++i) {
        const auto before = sizes(*seq[i - 1], D), after = sizes(*seq[i], D);
        for (const auto& [d, s] : after) {
          const auto it = before.find(d);
          REQUIRE(it != before.end());
          CHECK_MESSAGE(s <= it->second, to_string(id) << " p=" << p << " degree " << d);
        }
      }
    }
}

TEST_CASE("collapse linter") {
  CHECK(collapse_linter(LintPage{}).empty());

  const long p = 3;
  const auto small = collapse_linter(build_e1(SSId::lZ, p, 6));
  for (const auto& c : small) CHECK(c.r == 2 * p - 1);
  const auto wide = collapse_linter(build_e1(SSId::lZ, p, 54));
  CHECK_FALSE(wide.empty());
  for (const auto& c : wide) CHECK_MESSAGE(c.r == 2 * p - 1, c.source << " -> " << c.target);

  for (long q : {3L, 5L}) {
    const LintVerdict uz = lint_uz(q, static_cast<int>(4 * q * q));
    CHECK(uz.candidates > 0);
    CHECK_MESSAGE(uz.passed(), uz.offenders.front());
    CHECK(lint_indecomposables(kunneth_truncated_page(q, static_cast<int>(6 * q))).passed());
    CHECK(lint_indecomposables(brun_coefficient_page(q, static_cast<int>(6 * q))).passed());
  }
}

TEST_CASE("THH(l) presentation") {
  for (long p : {3L, 5L}) {
    const PresentedModule m(presentation_thh_l(p, static_cast<int>(4 * p * p)));
    CHECK(holds(m, {term(m, mu_name(0, "", p), 0, p)}, {term(m, "σv₁")}));
    CHECK(m.group(0) == GroupValue::free(1));
    const std::string g = mu_name(0, "σv₁", p * p);
    CHECK(holds(m, {term(m, g, static_cast<int>(p))}, {}));
    CHECK_FALSE(holds(m, {term(m, g, static_cast<int>(p - 1))}, {}));
  }
}

TEST_CASE("THH(ku; ku/v1) presentation") {
  for (long p : {3L, 5L}) {
    const PresentedModule m(presentation_thh_ku_modv1(p, static_cast<int>(4 * p * p)));
    const int e = static_cast<int>(p - 2);
    CHECK(holds(m, {term(m, "σu", e)}, {term(m, mu_name(0, "", p), 0, p)}));
    // k = 2: at k = 1 the class v₀μ_p is μ_p itself.
    const std::string v0 = mu_name(1, "", 2 * p), up = "uμ_" + std::to_string(2 * p);
    CHECK(holds(m, {term(m, v0, 1)}, {term(m, up, 0, p)}));
    CHECK(m.group(static_cast<int>(2 * p - 1)) == GroupValue::free(1));
  }
}

TEST_CASE("THH(ku) presentation at p = 3") {
  const PresentedModule m(presentation_thh_ku(3, 60));
  CHECK(holds(m, {term(m, "σuμ_3", 1)}, {}));
  CHECK(holds(m, {term(m, "σuμ_3", 0, 3)}, {}));
  CHECK(m.group(8) == GroupValue(1, {1}));  // u^4 and σuμ_3
  CHECK(holds(m, {term(m, "σuμ_15", 0, 3)}, {term(m, "σuμ_9", 6)}));
  CHECK(holds(m, {term(m, mu_name(1, "", 9), 0, 3)}, {term(m, "μ_3", 6)}));
  CHECK_FALSE(holds(m, {term(m, mu_name(1, "", 9))}, {}));
}

TEST_CASE("consistency checks") {
  const ConsistencyReport r = verify_consistency(3, 20);
  CHECK(r.passed());
  CHECK(r.checks.size() == 6);
  const PresentedModule m(presentation_thh_ku(3, 20));
  CHECK(m.group(0) == GroupValue::free(1));
  CHECK(m.group(1).is_zero());
  CHECK(m.group(2) == GroupValue::free(1));
  CHECK(m.group(3) == GroupValue::free(1));

  // The torsion of degree 8 is Z/3 σuμ_3, killed by p and by u alike.
  const PresentedModule wide(presentation_thh_ku(3, 2 * 8 + 4));
  CHECK(wide.p_torsion(8).contains(wide.vector(8, {term(wide, "σuμ_3")})));
  CHECK_FALSE(wide.p_torsion(8).contains(wide.vector(8, {term(wide, "1", 4)})));
  CHECK(wide.variable_kernel(8, 1) == wide.p_torsion(8));
  CHECK(check_torsion_coincidence(3, 8).passed);
}

TEST_CASE("consistency at p = 3, D = 110") {
  const ConsistencyReport r = verify_consistency(3, 110);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
}

TEST_CASE("torsion coincidence across degrees") {
  for (long p : {3L, 5L}) {
    const int D = static_cast<int>(2 * p * p + 10);
    const PresentedModule m(presentation_thh_ku(p, 2 * D + 4));
    CHECK(first_torsion_mismatch(m, D) == -1);
  }
}

TEST_CASE("differential graph") {
  const GraphReport g = differential_graph(3, 243);
  CHECK(g.bipartite);
  CHECK(g.acyclic);
  CHECK(g.unique_edge_ok());

  int mu9 = -1;
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
    if (g.vertices[i].mu && g.vertices[i].N == 9) mu9 = i;
  REQUIRE(mu9 >= 0);
  std::map<std::string, bool> partners;  // name -> valuation non-decreasing
  for (const auto& e : g.edges)
    if (e.mu_vertex == mu9) {
      const GraphVertex& s = g.vertices[e.su_vertex];
      partners[s.name()] = s.valuation >= g.vertices[mu9].valuation;
    }
  CHECK(partners == std::map<std::string, bool>{{"σu", true}, {"σuμ_6", false}});

  // Smallest instance: the edges with both ends at N <= p.
  const GraphReport h = differential_graph(3, 9);
  std::vector<std::pair<std::string, std::string>> low;
  for (const auto& e : h.edges)
    if (h.vertices[e.mu_vertex].N <= 3 && h.vertices[e.su_vertex].N <= 3)
      low.emplace_back(h.vertices[e.mu_vertex].name(), h.vertices[e.su_vertex].name());
  CHECK(low == std::vector<std::pair<std::string, std::string>>{{"μ_3", "σu"}});

  CHECK_THROWS_AS(differential_graph(3, 8), std::invalid_argument);
  CHECK_THROWS_AS(differential_graph(4, 64), std::invalid_argument);
}

TEST_CASE("differential graph up to p^6") {
  for (long p : {3L, 5L}) {
    long long n = 1;
    for (int i = 0; i < 6; ++i) n *= p;
    const GraphReport g = differential_graph(p, n);
    CHECK(g.passed());
    // A forest: edges = vertices - components.
    CHECK(g.edges.size() + g.components.size() == g.vertices.size());
  }
}

TEST_CASE("torsion block inventories") {
  const TorsionBlock t31 = torsion_block(3, 1);
  REQUIRE(t31.nodes.size() == 1);
  CHECK(t31.nodes[0].name() == "σuμ_3");
  CHECK(t31.edges.empty());

  const TorsionBlock t32 = torsion_block(3, 2);
  CHECK(t32.nodes.size() == 10);
  CHECK(t32.edges.size() == 8);
  bool bent = false, vertical = false;
  for (const auto& e : t32.edges) {
    const auto& a = t32.nodes[e.from];
    const auto& b = t32.nodes[e.to];
    if (e.bent && a.name() == "σuμ_15" && b.name() == "u^6σuμ_9") bent = true;
    if (e.kind == EdgeKind::P && !e.bent && b.name() == "v₀σuμ_9") vertical = true;
  }
  CHECK(bent);
  CHECK(vertical);
  int tower = 0;
  for (const auto& n : t32.nodes)
    if (n.N == 9 && n.h == 0) ++tower;
  CHECK(tower == 7);

  const TorsionBlock t51 = torsion_block(5, 1);
  std::vector<std::string> names;
  for (const auto& n : t51.nodes) names.push_back(n.name());
  CHECK(names == std::vector<std::string>{"σuμ_5", "uσuμ_5", "u^2σuμ_5"});
  CHECK(t51.edges.size() == 2);
  for (const auto& e : t51.edges) CHECK(e.kind == EdgeKind::U);

  CHECK_THROWS_AS(torsion_block(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(torsion_block(3, 1, 3), std::invalid_argument);
}

TEST_CASE("torsion blocks repeat p - 1 times") {
  for (auto [p, n] : std::vector<std::pair<long, int>>{{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}}) {
    const PeriodicityReport r = periodicity(p, n);
    CHECK(r.copies.size() == static_cast<size_t>(p - 2));
    CHECK_MESSAGE(r.passed(), "p=" << p << " n=" << n);
  }
  CHECK(isomorphic_blocks(torsion_block(3, 2, 1), torsion_block(3, 2, 2), 9));
  CHECK_FALSE(isomorphic_blocks(torsion_block(3, 2, 1), torsion_block(3, 1, 1), 0));
}
