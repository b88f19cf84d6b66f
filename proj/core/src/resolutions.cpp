#include "thhku/resolutions.hpp"

#include "thhku/thh_presentations.hpp"

namespace thhku {

std::string to_string(TorCase c) {
  switch (c) {
    case TorCase::ku_res: return "ku_res";
    case TorCase::trunc_tensor: return "trunc_tensor";
    case TorCase::divided_power: return "divided_power";
    case TorCase::rational: return "rational";
  }
  return "?";
}

std::optional<TorCase> parse_tor_case(std::string_view name) {
  for (TorCase c : all_tor_cases())
    if (to_string(c) == name) return c;
  return std::nullopt;
}

const std::vector<TorCase>& all_tor_cases() {
  static const std::vector<TorCase> cases{TorCase::ku_res, TorCase::trunc_tensor, TorCase::divided_power,
                                          TorCase::rational};
  return cases;
}

namespace {

Element psi_of(const ResolutionSpec& spec, const Monomial& m) {
  Element out = spec.coefficients.one();
  for (size_t i = 0; i < m.size(); ++i)
    for (int e = 0; e < m[i]; ++e) out = spec.coefficients.multiply(out, spec.psi[i]);
  return out;
}

Element psi_of(const ResolutionSpec& spec, const Element& x) {
  Element out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    Element t = spec.coefficients.scale(psi_of(spec, m), c);
    out = first ? t : spec.coefficients.add(out, t);
    first = false;
  }
  return first ? spec.coefficients.scale(spec.coefficients.one(), 0) : out;
}

// The coefficient algebra in one internal degree.
std::vector<Monomial> coefficient_basis(const ResolutionSpec& spec, int t) {
  if (t < 0) return {};
  return spec.coefficients.basis_in_degree({0, t});
}

// Multiplication by c from internal degree t into t + deg(c).
LocalMatrix multiplication(const ResolutionSpec& spec, const Element& c, const std::vector<Monomial>& from,
                           const std::vector<Monomial>& to) {
  const Ring ring = spec.coefficients.ring();
  LocalMatrix M(static_cast<int>(to.size()), static_cast<int>(from.size()), ring);
  for (size_t j = 0; j < from.size(); ++j) {
    const Element prod = spec.coefficients.multiply(spec.coefficients.element(from[j]), c);
    for (const auto& [m, coeff] : prod.terms()) {
      for (size_t i = 0; i < to.size(); ++i)
        if (to[i] == m) M.add_to(static_cast<int>(i), static_cast<int>(j), Scalar(coeff));
    }
  }
  return M;
}

int stage_count_for(const std::vector<int>& degrees, int D) {
  int s = 0;
  while (s < static_cast<int>(degrees.size()) && s + degrees[s] <= D + 1) ++s;
  return s;
}

}  // namespace

ResolutionSpec resolution_spec(TorCase c, long p, int D, int extra_periods) {
  require_odd_prime(p);
  const Ring ring{p, false};
  ResolutionSpec spec;
  spec.name = to_string(c);
  const int pm = static_cast<int>(p);
  switch (c) {
    case TorCase::ku_res: {
      // Z_(p) over ku_* = P(u): 0 <- P(u) <-u- P(u){σu}.
      spec.base = make_algebra({polynomial("u", {0, 2})}, ring);
      spec.coefficients = make_algebra({}, ring);
      spec.psi = {spec.coefficients.scale(spec.coefficients.one(), 0)};
      spec.stage_degrees = {0, 2};
      spec.multipliers = {spec.base.generator("u")};
      break;
    }
    case TorCase::trunc_tensor: {
      // P_{p-1}(u) over P(u): 0 <- P(u) <-u^{p-1}- P(u){σv1}, then ⊗ P_{p-1}(u).
      spec.base = make_algebra({polynomial("u", {0, 2})}, ring);
      spec.coefficients = make_algebra({truncated("u", {0, 2}, pm - 1)}, ring);
      spec.psi = {spec.coefficients.generator("u")};
      spec.stage_degrees = {0, 2 * pm - 2};
      spec.multipliers = {spec.base.generator("u", pm - 1)};
      break;
    }
    case TorCase::divided_power: {
      // Z_(p) over P_{p-1}(u): periodic with multipliers u, u^{p-2}, u, ...
      spec.base = make_algebra({truncated("u", {0, 2}, pm - 1)}, ring);
      spec.coefficients = make_algebra({}, ring);
      spec.psi = {spec.coefficients.scale(spec.coefficients.one(), 0)};
      spec.stage_degrees = {0};
      const int periods = (D + 1) / (2 * pm) + 1 + extra_periods;
      for (int s = 1; s <= 2 * periods; ++s) {
        const int e = s % 2 == 1 ? 1 : pm - 2;
        spec.multipliers.push_back(spec.base.generator("u", e));
        spec.stage_degrees.push_back(spec.stage_degrees.back() + 2 * e);
      }
      break;
    }
    case TorCase::rational: {
      // ku_Q* over ku_Q* ⊗ ku_Q*: d(σu) = 1 ⊗ u - u ⊗ 1, then ⊗ down to P(u).
      spec.base = make_algebra({polynomial("u₁", {0, 2}), polynomial("u₂", {0, 2})}, ring);
      spec.coefficients = make_algebra({polynomial("u", {0, 2})}, ring);
      spec.psi = {spec.coefficients.generator("u"), spec.coefficients.generator("u")};
      spec.stage_degrees = {0, 2};
      spec.multipliers = {spec.base.add(spec.base.generator("u₂"), spec.base.scale(spec.base.generator("u₁"), -1))};
      spec.rational = true;
      break;
    }
  }
  return spec;
}

BigradedGroup periodic_resolution_homology(const ResolutionSpec& spec, int D) {
  const long p = spec.base.ring().p;
  if (spec.multipliers.size() + 1 != spec.stage_degrees.size())
    throw ResolutionError("one multiplier per positive stage is required");
  if (spec.psi.size() != static_cast<size_t>(spec.base.generator_count()))
    throw ResolutionError("psi needs one image per base generator");
  for (size_t s = 0; s + 1 < spec.multipliers.size(); ++s)
    if (!spec.base.multiply(spec.multipliers[s], spec.multipliers[s + 1]).is_zero())
      throw ResolutionError("multipliers at stages " + std::to_string(s + 1) + " and " + std::to_string(s + 2) +
                            " do not compose to zero");
  for (size_t s = 0; s < spec.multipliers.size(); ++s) {
    if (!spec.base.is_homogeneous(spec.multipliers[s]))
      throw ResolutionError("multiplier at stage " + std::to_string(s + 1) + " is not homogeneous");
    for (const auto& [m, c] : spec.multipliers[s].terms())
      if (spec.base.degree(m).y != spec.stage_degrees[s + 1] - spec.stage_degrees[s])
        throw ResolutionError("multiplier at stage " + std::to_string(s + 1) + " has the wrong degree");
  }

  std::vector<Element> images;
  for (const auto& m : spec.multipliers) images.push_back(psi_of(spec, m));
  const int S = stage_count_for(spec.stage_degrees, D);
  const Ring ring = spec.coefficients.ring();
  BigradedGroup out(p);
  for (int s = 0; s < S; ++s) {
    for (int t = spec.stage_degrees[s]; s + t <= D; ++t) {
      // (T ⊗ F_s) in internal degree t is T_{t - |g_s|}.
      const auto here = coefficient_basis(spec, t - spec.stage_degrees[s]);
      if (here.empty()) continue;
      const auto below = s > 0 ? coefficient_basis(spec, t - spec.stage_degrees[s - 1]) : std::vector<Monomial>{};
      const bool has_above = s + 1 < static_cast<int>(spec.stage_degrees.size());
      const auto above = has_above ? coefficient_basis(spec, t - spec.stage_degrees[s + 1]) : std::vector<Monomial>{};
      const LocalMatrix d_out = s > 0 ? multiplication(spec, images[s - 1], here, below)
                                      : LocalMatrix(0, static_cast<int>(here.size()), ring);
      const LocalMatrix d_in = has_above ? multiplication(spec, images[s], above, here)
                                         : LocalMatrix(static_cast<int>(here.size()), 0, ring);
      const GroupValue h = homology_at(d_in, d_out);
      if (spec.rational && !h.torsion.empty())
        throw ResolutionError("rational case produced torsion at (" + std::to_string(s) + ", " + std::to_string(t) +
                              ")");
      if (!h.is_zero()) out.set(s, t, h);
    }
  }
  return out;
}

BigradedGroup tor_closed_form(TorCase c, long p, int D) {
  require_odd_prime(p);
  const Ring ring{p, false};
  const int pm = static_cast<int>(p);
  MonomialAlgebra alg;
  switch (c) {
    case TorCase::ku_res: alg = make_algebra({exterior("σu", {1, 2})}, ring); break;
    case TorCase::trunc_tensor:
      alg = make_algebra({truncated("u", {0, 2}, pm - 1), exterior("σv₁", {1, 2 * pm - 2})}, ring);
      break;
    case TorCase::divided_power:
      alg = make_algebra({exterior("σu", {1, 2}), divided_power("φu", {2, 2 * pm - 2})}, ring);
      break;
    case TorCase::rational: alg = make_algebra({polynomial("u", {0, 2}), exterior("σu", {1, 2})}, ring); break;
  }
  BigradedGroup out(p);
  for (int t = 0; t <= D; ++t)
    for (const Monomial& m : alg.basis_in_total_degree(t)) {
      const Degree d = alg.degree(m);
      out.add(d.x, d.y, GroupValue::free(1));
    }
  return out;
}

bool stable_under_extra_period(TorCase c, long p, int D) {
  return periodic_resolution_homology(resolution_spec(c, p, D, 0), D) ==
         periodic_resolution_homology(resolution_spec(c, p, D, 1), D);
}

}  // namespace thhku
