#include "thhku/bockstein.hpp"

#include <map>
#include <stdexcept>

#include "thhku/monomial.hpp"
#include "thhku/presentation.hpp"
#include "thhku/thh_presentations.hpp"

namespace thhku {

namespace {

long long lpow(long p, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

long long geometric(long p, int n) {
  long long s = 0;
  for (int i = 1; i <= n; ++i) s += lpow(p, i);
  return s;
}

Scalar p_power(long p, int e) {
  return e >= 0 ? Scalar(ipow(p, e)) : Scalar(1) / Scalar(ipow(p, -e));
}

int mu_degree(long long N) { return N == 0 ? 0 : static_cast<int>(2 * N - 1); }

struct Cyclic {
  ClassLabel label;
  int degree = 0;
  int order = 0;
};

// Bökstedt: THH_{2n-1}(HZ_(p)) = Z/p^{ν(n)}, plus Z_(p) in degree 0.
std::vector<Cyclic> thh_hz(long p, int max_degree) {
  std::vector<Cyclic> out{{ClassLabel{}, 0, 0}};
  for (long long N = p; mu_degree(N) <= max_degree; N += p) out.push_back({ClassLabel{N}, mu_degree(N), nu(N, p)});
  return out;
}

void set_factor(ClassLabel& l, const std::string& name, int e) {
  if (name == "σu") l.su = e;
  else if (name == "σv₁") l.sv = e;
  else if (name == "u") l.u = e;
  else if (name == "v₁") l.v1 = e;
  else if (name == "φu") l.gamma = e;
  else throw std::logic_error("unknown factor " + name);
}

// base ⊠ algebra, with the algebra's bidegrees added to the base class at (degree, 0).
std::vector<BasisClass> tensor(const std::vector<Cyclic>& base, const MonomialAlgebra& alg, int max_degree) {
  std::vector<BasisClass> out;
  for (const Cyclic& b : base)
    for (int t = 0; b.degree + t <= max_degree; ++t)
      for (const Monomial& m : alg.basis_in_total_degree(t)) {
        BasisClass c;
        c.label = b.label;
        for (int i = 0; i < alg.generator_count(); ++i)
          if (m[i] > 0) set_factor(c.label, alg.generators()[i].name, m[i]);
        const Degree d = alg.degree(m);
        c.degree = b.degree + d.total();
        c.y = d.y;
        c.order = b.order;
        out.push_back(c);
      }
  return out;
}

std::optional<std::vector<RuleTerm>> single(ClassLabel target, Scalar coeff) {
  return std::vector<RuleTerm>{{target, std::move(coeff)}};
}

// THH_*(ℓ; HZ_(p)): Z_(p){1, μ_p} plus Z/p^{ν(k)}{v0 μ_{kp}, σv1 μ_{kp}} for k >= 2.
std::vector<Cyclic> thh_l_hz(long p, int max_degree) {
  std::vector<Cyclic> out{{ClassLabel{}, 0, 0}};
  if (mu_degree(p) <= max_degree) out.push_back({ClassLabel{p}, mu_degree(p), 0});
  for (long long k = 2; mu_degree(k * p) <= max_degree; ++k) {
    const int e = nu(k, p);
    if (e == 0) continue;
    ClassLabel v0{k * p};
    v0.v0 = 1;
    out.push_back({v0, mu_degree(k * p), e});
    ClassLabel sv{k * p};
    sv.sv = 1;
    const int d = static_cast<int>(2 * k * p + 2 * p - 2);
    if (d <= max_degree) out.push_back({sv, d, e});
  }
  return out;
}

// Additive basis of THH_*(ku; ku/v1).
std::vector<Cyclic> thh_ku_modv1(long p, int max_degree) {
  std::vector<Cyclic> out;
  auto add = [&](ClassLabel l, int d, int e) {
    if (d <= max_degree) out.push_back({l, d, e});
  };
  for (int i = 0; i <= p - 2; ++i) add(ClassLabel{0, 0, 0, 0, 0, i}, 2 * i, 0);
  for (int i = 0; i <= p - 3; ++i) add(ClassLabel{0, 0, 1, 0, 0, i}, 3 + 2 * i, 0);
  add(ClassLabel{p}, mu_degree(p), 0);  // u^{p-2}σu = p μ_p
  for (long long k = 1; mu_degree(k * p) <= max_degree; ++k) {
    const int e = nu(k, p);
    const long long N = k * p;
    for (int i = 1; i <= p - 2; ++i) add(ClassLabel{N, 0, 0, 0, 0, i}, mu_degree(N) + 2 * i, e + 1);
    if (k >= 2 && e > 0) add(ClassLabel{N, 1}, mu_degree(N), e);
    for (int i = 0; i <= p - 3; ++i) add(ClassLabel{N, 0, 1, 0, 0, i}, static_cast<int>(2 * N + 2 + 2 * i), e + 1);
    if (e > 0) add(ClassLabel{N, 0, 1, 0, 0, static_cast<int>(p - 2)}, static_cast<int>(2 * N + 2 * p - 2), e);
  }
  return out;
}

GroupValue class_group(const std::vector<Cyclic>& cls, int degree) {
  GroupValue g;
  for (const auto& c : cls)
    if (c.degree == degree) g += c.order == 0 ? GroupValue::free(1) : GroupValue::cyclic(c.order);
  return g;
}

std::vector<BasisClass> times_v1(const std::vector<Cyclic>& base, long p, int max_degree) {
  const MonomialAlgebra alg = make_algebra({polynomial("v₁", {0, static_cast<int>(2 * p - 2)}, Axis::Right)}, {p, false});
  return tensor(base, alg, max_degree);
}

bool divisible(long long n, long long m) { return m != 0 && n % m == 0; }

void require_inputs(long p, int D) {
  require_odd_prime(p);
  if (D < 2 * p) throw std::invalid_argument("degree bound D must be at least 2p");
}

}  // namespace

std::string to_string(SSId id) {
  switch (id) {
    case SSId::lZ: return "lZ";
    case SSId::l: return "l";
    case SSId::uT: return "uT";
    case SSId::uTB: return "uTB";
    case SSId::v1: return "v1";
    case SSId::u: return "u";
  }
  return "?";
}

std::optional<SSId> parse_ss_id(std::string_view name) {
  for (SSId id : all_ss_ids())
    if (to_string(id) == name) return id;
  return std::nullopt;
}

const std::vector<SSId>& all_ss_ids() {
  static const std::vector<SSId> ids{SSId::lZ, SSId::l, SSId::uT, SSId::uTB, SSId::v1, SSId::u};
  return ids;
}

NamedSS build_e1(SSId id, long p, int D) {
  require_inputs(p, D);
  NamedSS ss;
  ss.id = id;
  ss.p = p;
  ss.D = D;
  const int top = ss.edge_degree();
  const Ring ring{p, false};
  const auto not_mu = [p](const ClassLabel& l) { return l.mu > 0 && l.mu % p != 0; };
  const int pm2 = static_cast<int>(p - 2);

  switch (id) {
    case SSId::lZ: {
      ss.unit = 1;
      const auto alg = make_algebra({exterior("σv₁", {0, static_cast<int>(2 * p - 1)}, Axis::Right)}, ring);
      ss.classes = tensor(thh_hz(p, top), alg, top);
      ss.rules.push_back({"d(μ_{(k+1)p}) = p^{ν(k)} σv₁μ_{kp}", static_cast<int>(2 * p - 1),
                          static_cast<int>(2 * p - 1), [p](const ClassLabel& l) -> std::optional<std::vector<RuleTerm>> {
                            if (l.sv || l.mu < 2 * p) return std::nullopt;
                            const long long k = l.mu / p - 1;
                            ClassLabel t = l;
                            t.mu = k * p;
                            t.sv = 1;
                            return single(t, Scalar(ipow(p, nu(k, p))));
                          }});
      ss.vanishes = not_mu;
      break;
    }
    case SSId::l: {
      ss.unit = static_cast<int>(2 * p - 2);
      ss.classes = times_v1(thh_l_hz(p, top), p, top);
      for (int n = 1; 4 * lpow(p, n + 1) - 1 <= top; ++n) {
        const long long S = geometric(p, n);
        const long long step = lpow(p, n + 1);
        ss.rules.push_back({"d(p^{n-1} v₀μ_{(k+1)p^{n+1}}) = p^{ν(k)} v₁^{S_n} σv₁μ_{kp^{n+1}}, n=" + std::to_string(n),
                            static_cast<int>(S * (2 * p - 2)), static_cast<int>(S),
                            [p, n, S, step](const ClassLabel& l) -> std::optional<std::vector<RuleTerm>> {
                              if (l.v0 != 1 || l.sv || !divisible(l.mu, step) || l.mu / step < 2) return std::nullopt;
                              const long long k = l.mu / step - 1;
                              ClassLabel t = l;
                              t.mu = k * step;
                              t.v0 = 0;
                              t.sv = 1;
                              t.v1 += static_cast<int>(S);
                              return single(t, p_power(p, nu(k, p) - (n - 1)));
                            }});
      }
      ss.vanishes = [p](const ClassLabel& l) { return l.mu > 0 && nu(l.mu / p, p) == 0 && l.mu != p; };
      break;
    }
    case SSId::uT:
    case SSId::u: {
      ss.unit = 2;
      const bool truncated_u = id == SSId::uT;
      const auto alg = make_algebra(
          {exterior("σu", {3, 0}),
           truncated_u ? truncated("u", {0, 2}, static_cast<int>(p - 1), Axis::Right) : polynomial("u", {0, 2}, Axis::Right)},
          ring);
      ss.classes = tensor(thh_hz(p, top), alg, top);
      const int n_max = truncated_u ? 0 : 64;
      for (int n = 0; n <= n_max && 4 * lpow(p, n + 1) - 1 <= top; ++n) {
        const long long s = lpow(p, n + 1) - 2;
        const long long step = lpow(p, n + 1);
        ss.rules.push_back({"d(u^j p^n μ_{(k+1)p^{n+1}}) = p^{ν(k)} u^{j+p^{n+1}-2} σuμ_{kp^{n+1}}, n=" + std::to_string(n),
                            static_cast<int>(2 * s), static_cast<int>(s),
                            [p, n, s, step](const ClassLabel& l) -> std::optional<std::vector<RuleTerm>> {
                              if (l.su || !divisible(l.mu, step) || l.mu / step < 2) return std::nullopt;
                              const long long k = l.mu / step - 1;
                              ClassLabel t = l;
                              t.mu = k * step;
                              t.su = 1;
                              t.u += static_cast<int>(s);
                              return single(t, p_power(p, nu(k, p) - n));
                            }});
      }
      ss.vanishes = [p, truncated_u, not_mu](const ClassLabel& l) { return not_mu(l) || (truncated_u && l.u > p - 2); };
      break;
    }
    case SSId::uTB: {
      ss.unit = 1;
      const auto alg = make_algebra({exterior("σu", {3, 0}), divided_power("φu", {static_cast<int>(2 * p), 0}),
                                     exterior("σv₁", {0, static_cast<int>(2 * p - 1)}, Axis::Right),
                                     truncated("u", {0, 2}, static_cast<int>(p - 1), Axis::Right)},
                                    ring);
      ss.classes = tensor(thh_hz(p, top), alg, top);
      ss.rules.push_back({"d(γ_kφu) = u^{p-2}σu γ_{k-1}φu", 2 * pm2, 2 * pm2,
                          [pm2](const ClassLabel& l) -> std::optional<std::vector<RuleTerm>> {
                            if (l.gamma < 1 || l.su || l.u) return std::nullopt;
                            ClassLabel t = l;
                            t.gamma -= 1;
                            t.su = 1;
                            t.u = pm2;
                            return single(t, 1);
                          }});
      ss.rules.push_back({"d(μ_{(i+1)p}) = p^{ν(i)} σv₁μ_{ip}", static_cast<int>(2 * p - 1), static_cast<int>(2 * p - 1),
                          [p](const ClassLabel& l) -> std::optional<std::vector<RuleTerm>> {
                            if (l.sv || l.mu < 2 * p) return std::nullopt;
                            const long long i = l.mu / p - 1;
                            ClassLabel t = l;
                            t.mu = i * p;
                            t.sv = 1;
                            return single(t, Scalar(ipow(p, nu(i, p))));
                          }});
      ss.vanishes = [p, not_mu](const ClassLabel& l) { return not_mu(l) || l.u > p - 2; };
      break;
    }
    case SSId::v1: {
      ss.unit = static_cast<int>(2 * p - 2);
      const auto base = thh_ku_modv1(p, top);
      // The additive basis must reproduce the presented module degreewise.
      const PresentedModule pres(presentation_thh_ku_modv1(p, top));
      for (int d = 0; d <= top; ++d)
        if (class_group(base, d) != pres.group(d))
          throw std::logic_error("THH(ku;ku/v1) additive basis disagrees with its presentation in degree " +
                                 std::to_string(d));
      ss.classes = times_v1(base, p, top);
      ss.rules.push_back({"d(u^iμ_{(k+1)p}) = p^{ν(k)} v₁u^{i-1}σuμ_{kp}", ss.unit, 1,
                          [p](const ClassLabel& l) -> std::optional<std::vector<RuleTerm>> {
                            if (l.v0 || l.su || l.u < 1 || l.mu < 2 * p) return std::nullopt;
                            const long long k = l.mu / p - 1;
                            ClassLabel t = l;
                            t.mu = k * p;
                            t.su = 1;
                            t.u -= 1;
                            t.v1 += 1;
                            return single(t, Scalar(ipow(p, nu(k, p))));
                          }});
      for (int n = 1; 4 * lpow(p, n + 1) - 1 <= top; ++n) {
        const long long S = geometric(p, n);
        const long long step = lpow(p, n + 1);
        ss.rules.push_back({"d(p^{n-1} v₀μ_{(k+1)p^{n+1}}) = p^{ν(k)} v₁^{S_n} u^{p-2}σuμ_{kp^{n+1}}, n=" + std::to_string(n),
                            static_cast<int>(S * ss.unit), static_cast<int>(S),
                            [p, n, S, step, pm2](const ClassLabel& l) -> std::optional<std::vector<RuleTerm>> {
                              if (l.v0 != 1 || !divisible(l.mu, step) || l.mu / step < 2) return std::nullopt;
                              const long long k = l.mu / step - 1;
                              ClassLabel t = l;
                              t.mu = k * step;
                              t.v0 = 0;
                              t.su = 1;
                              t.u = pm2;
                              t.v1 += static_cast<int>(S);
                              return single(t, p_power(p, nu(k, p) - (n - 1)));
                            }});
        ss.rules.push_back({"d(p^n u^iμ_{(k+1)p^{n+1}}) = p^{ν(k)} v₁^{S_n+1} u^{i-1}σuμ_{kp^{n+1}}, n=" + std::to_string(n),
                            static_cast<int>((S + 1) * ss.unit), static_cast<int>(S + 1),
                            [p, n, S, step](const ClassLabel& l) -> std::optional<std::vector<RuleTerm>> {
                              if (l.v0 || l.su || l.u < 1 || !divisible(l.mu, step) || l.mu / step < 2)
                                return std::nullopt;
                              const long long k = l.mu / step - 1;
                              ClassLabel t = l;
                              t.mu = k * step;
                              t.su = 1;
                              t.u -= 1;
                              t.v1 += static_cast<int>(S + 1);
                              return single(t, p_power(p, nu(k, p) - n));
                            }});
      }
      ss.vanishes = [p](const ClassLabel& l) {
        // u^{p-2}σuμ_{kp} has order p^{ν(k)}, so it is zero when p does not divide k.
        return l.u > p - 2 || (l.su && l.u == p - 2 && l.mu > 0 && nu(l.mu / p, p) == 0);
      };
      break;
    }
  }
  return ss;
}

SSRun run_rules(const NamedSS& ss) {
  SSRun out;
  auto engine = std::make_shared<RuleSS>(ss.p, ss.D, ss.classes, ss.rules, ss.vanishes);
  out.e1 = engine->e1();
  out.einfty = engine->einfty();
  out.totals = out.einfty.total();
  for (const auto& [key, g] : engine->einfty_page().groups)
    if (key.first > ss.D)
      for (const auto& name : g.basis) out.edge_uncertain.push_back(name);
  out.engine = std::move(engine);
  return out;
}

std::vector<LintCandidate> collapse_linter(const LintPage& page) {
  std::map<int, std::vector<const LintClass*>> by_total;
  for (const auto& c : page.classes) by_total[c.x + c.y].push_back(&c);
  std::vector<LintCandidate> out;
  for (const auto& [t, sources] : by_total) {
    auto it = by_total.find(t - 1);
    if (it == by_total.end()) continue;
    for (const LintClass* s : sources)
      for (const LintClass* tg : it->second) {
        const int r = page.grading == LintGrading::Serre ? tg->y - s->y : s->x - tg->x;
        if (r < (page.grading == LintGrading::Serre ? 1 : 2)) continue;
        out.push_back({s->name, tg->name, r, s->is_zero(), tg->is_zero(), s->indecomposable});
      }
  }
  return out;
}

std::vector<LintCandidate> collapse_linter(const NamedSS& ss) {
  LintPage page;
  page.title = to_string(ss.id);
  for (const auto& c : ss.classes)
    if (c.degree <= ss.D) page.classes.push_back({c.label.name(), c.x(), c.y, c.order, false});
  return collapse_linter(page);
}

namespace {

std::string candidate_string(const LintCandidate& c) {
  return c.source + " -> " + c.target + " (d^" + std::to_string(c.r) + ")";
}

}  // namespace

LintVerdict lint_uz(long p, int D) {
  const LintPage page = uz_page(p, D);
  const auto cands = collapse_linter(page);
  LintVerdict v{page.title, static_cast<int>(cands.size()), {}};
  for (const auto& c : cands) {
    bool shape = c.r == 3 && c.source.rfind("μ_", 0) == 0;
    if (shape) {
      const long long m = std::stoll(c.source.substr(std::string("μ_").size()));
      shape = m >= 2 && c.target == (m == 2 ? std::string("σu") : "σuμ_" + std::to_string(m - 2));
    }
    if (!shape || c.feasible_nonzero()) v.offenders.push_back(candidate_string(c));
  }
  return v;
}

LintVerdict lint_indecomposables(const LintPage& page) {
  const auto cands = collapse_linter(page);
  LintVerdict v{page.title, static_cast<int>(cands.size()), {}};
  for (const auto& c : cands)
    if (c.source_indecomposable && c.feasible_nonzero()) v.offenders.push_back(candidate_string(c));
  return v;
}

LintPage uz_page(long p, int D) {
  require_odd_prime(p);
  LintPage page;
  page.title = "THH(HZ) ⊗ E(σu)";
  for (long long n = 0; mu_degree(n) <= D; ++n) {
    const int e = n == 0 ? 0 : (n % p == 0 ? nu(n, p) : -1);
    const std::string mu = n == 0 ? "" : "μ_" + std::to_string(n);
    const int x = mu_degree(n);
    page.classes.push_back({n == 0 ? "1" : mu, x, 0, e, false});
    if (x + 3 <= D) page.classes.push_back({"σu" + mu, x, 3, e, n == 0});
  }
  return page;
}

LintPage kunneth_truncated_page(long p, int D) {
  require_odd_prime(p);
  LintPage page;
  page.title = "Tor^{P_{p-1}(u)}(Z_(p), Z_(p))";
  page.grading = LintGrading::Homological;
  const auto alg = make_algebra({exterior("σu", {1, 2}), divided_power("φu", {2, static_cast<int>(2 * p - 2)})},
                                {p, false});
  for (int t = 0; t <= D; ++t)
    for (const Monomial& m : alg.basis_in_total_degree(t)) {
      const Degree d = alg.degree(m);
      const bool indec = (m[0] == 1 && m[1] == 0) || (m[0] == 0 && m[1] > 0 && lpow(p, nu(m[1], p)) == m[1]);
      page.classes.push_back({alg.name(m), d.x, d.y, 0, indec});
    }
  return page;
}

LintPage brun_coefficient_page(long p, int D) {
  require_odd_prime(p);
  LintPage page;
  page.title = "THH(HZ) ⊠ (E(σu) ⊗ Γ(φu))";
  const auto alg = make_algebra({exterior("σu", {0, 3}), divided_power("φu", {0, static_cast<int>(2 * p)})}, {p, false});
  for (long long n = 0; mu_degree(n) <= D; ++n) {
    const int e = n == 0 ? 0 : (n % p == 0 ? nu(n, p) : -1);
    for (int t = 0; mu_degree(n) + t <= D; ++t)
      for (const Monomial& m : alg.basis_in_total_degree(t)) {
        const bool indec = n == 0 && ((m[0] == 1 && m[1] == 0) || (m[0] == 0 && m[1] > 0 && lpow(p, nu(m[1], p)) == m[1]));
        std::string name = alg.name(m);
        if (n > 0) name = (name == "1" ? "" : name + " ") + "μ_" + std::to_string(n);
        page.classes.push_back({name, mu_degree(n), alg.degree(m).y, e, indec});
      }
  }
  return page;
}

}  // namespace thhku
