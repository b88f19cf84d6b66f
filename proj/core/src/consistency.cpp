#include "thhku/consistency.hpp"

#include <algorithm>

#include "thhku/thh_presentations.hpp"

namespace thhku {

namespace {

void fail(CheckOutcome& c, int degree, std::string detail) {
  if (!c.passed) return;
  c.passed = false;
  c.first_failing_degree = degree;
  c.detail = std::move(detail);
}

}  // namespace

bool ConsistencyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const CheckOutcome* ConsistencyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

CheckOutcome compare_einfty_with_graded(const std::string& name, const SSRun& run, const NamedSS& ss,
                                        const PresentedModule& module, int step) {
  CheckOutcome out;
  out.name = name;
  const auto& groups = run.engine->einfty_page().groups;
  for (int d = 0; d <= ss.D; ++d) {
    const auto gr = module.associated_graded(d, step);
    // Positions above the top block must be empty on both sides.
    const int top = std::max(static_cast<int>(gr.size()), d / ss.unit + 1);
    for (int f = 0; f < top; ++f) {
      const auto it = groups.find({d, f * ss.unit});
      const GroupValue page = it == groups.end() ? GroupValue{} : it->second.value;
      const GroupValue pres = f < static_cast<int>(gr.size()) ? gr[f] : GroupValue{};
      if (page != pres)
        fail(out, d,
             "degree " + std::to_string(d) + ", filtration " + std::to_string(f) + ": E^∞ " + page.to_string(ss.p) +
                 ", presentation " + pres.to_string(ss.p));
    }
    ++out.degrees_checked;
    if (!out.passed) break;
  }
  return out;
}

CheckOutcome check_u_page(long p, int D) {
  const NamedSS ss = build_e1(SSId::u, p, D);
  const SSRun run = run_rules(ss);
  const PresentedModule M(presentation_thh_ku(p, D));
  return compare_einfty_with_graded("(i) E^∞(u) = gr_u THH_*(ku)", run, ss, M, 1);
}

CheckOutcome check_gathered(long p, int D) {
  const NamedSS ut = build_e1(SSId::uT, p, D);
  const SSRun ut_run = run_rules(ut);
  const NamedSS v1 = build_e1(SSId::v1, p, D);
  const NamedSS u = build_e1(SSId::u, p, D);
  const SSRun v1_run = run_rules(v1);
  const SSRun u_run = run_rules(u);
  const PresentedModule ku(presentation_thh_ku(p, D));
  const PresentedModule modv1(presentation_thh_ku_modv1(p, ut.edge_degree()));

  CheckOutcome out;
  out.name = "(ii) (uT) -> (v1) agrees with (u)";
  // The (uT) abutment is the E^1 input of (v1): compare the u-adic graded of
  // the additive input with E^∞(uT).
  const CheckOutcome input = compare_einfty_with_graded("", ut_run, ut, modv1, 1);
  if (!input.passed) fail(out, input.first_failing_degree, "(uT) abutment: " + input.detail);
  const CheckOutcome v1_side = compare_einfty_with_graded("", v1_run, v1, ku, static_cast<int>(p - 1));
  if (!v1_side.passed) fail(out, v1_side.first_failing_degree, "(v1) vs gr_{v1}: " + v1_side.detail);
  const CheckOutcome u_side = compare_einfty_with_graded("", u_run, u, ku, 1);
  if (!u_side.passed) fail(out, u_side.first_failing_degree, "(u) vs gr_u: " + u_side.detail);
  for (int d = 0; d <= D; ++d) {
    const GroupValue a = v1_run.totals.at(d), b = u_run.totals.at(d);
    if (a.free_rank != b.free_rank)
      fail(out, d, "degree " + std::to_string(d) + ": rank of E^∞(v1) " + a.to_string(p) + ", of E^∞(u) " +
                       b.to_string(p));
  }
  out.degrees_checked = D + 1;
  return out;
}

int first_torsion_mismatch(const PresentedModule& module, int D) {
  const int ext = module.presentation().bound;
  const int vd = module.presentation().variable_degree;
  // p-torsion dies under a u-power: u^K T_p(d) = 0 for the largest K in range.
  for (int d = 0; d <= D; ++d) {
    const int K = (ext - d) / vd;
    if (!module.variable_kernel(d, K).contains(module.p_torsion(d))) return d;
  }
  // u is injective modulo p-torsion: u x in T_p forces x in T_p, so no u-power
  // kills a class of infinite order.
  for (int d = 0; d + vd <= ext; ++d) {
    const Lattice T = module.p_torsion(d);
    const Lattice pre = Lattice::whole(T.ambient(), module.ring())
                            .preimage(module.multiply_by_variable(d, 1), module.p_torsion(d + vd));
    if (!(pre == T)) return d;
  }
  return -1;
}

CheckOutcome check_torsion_coincidence(long p, int D) {
  CheckOutcome out;
  out.name = "(iii) p-torsion = u-torsion in THH_*(ku)";
  const PresentedModule M(presentation_thh_ku(p, 2 * D + 4));
  const int d = first_torsion_mismatch(M, D);
  if (d >= 0) fail(out, d, "degree " + std::to_string(d) + ": p-power torsion and u-power torsion differ");
  out.degrees_checked = D + 1;
  return out;
}

CheckOutcome check_extension_of_scalars(long p, int D) {
  CheckOutcome out;
  out.name = "(iv) ku_* ⊗ THH_*(ℓ) injects with cokernel C";
  const PresentedModule src(presentation_ku_tensor_thh_l(p, D));
  const PresentedModule tgt(presentation_thh_ku(p, D));
  const PresentedModule coker(presentation_cokernel(p, D));
  const ModuleMap f(src, tgt, extension_of_scalars_images(src.presentation(), tgt.presentation()));
  for (int d = 0; d <= D && out.passed; ++d) {
    if (!f.well_defined(d)) fail(out, d, "degree " + std::to_string(d) + ": relations are not preserved");
    else if (!f.injective(d)) fail(out, d, "degree " + std::to_string(d) + ": the map has a kernel");
    else if (f.cokernel(d) != coker.group(d))
      fail(out, d, "degree " + std::to_string(d) + ": cokernel " + f.cokernel(d).to_string(p) + ", C " +
                       coker.group(d).to_string(p));
    ++out.degrees_checked;
  }
  return out;
}

CheckOutcome check_l_page(long p, int D) {
  const NamedSS ss = build_e1(SSId::l, p, D);
  const SSRun run = run_rules(ss);
  const PresentedModule M(presentation_thh_l(p, D));
  return compare_einfty_with_graded("E^∞(l) = gr_{v1} THH_*(ℓ)", run, ss, M, 1);
}

CheckOutcome check_ut_page(long p, int D) {
  const NamedSS ss = build_e1(SSId::uT, p, D);
  const SSRun run = run_rules(ss);
  const PresentedModule M(presentation_thh_ku_modv1(p, D));
  return compare_einfty_with_graded("E^∞(uT) = gr THH_*(ku;ku/v1), nominal u-exponent", run, ss, M, 1);
}

ConsistencyReport verify_consistency(long p, int D) {
  ConsistencyReport r;
  r.p = p;
  r.D = D;
  r.checks.push_back(check_u_page(p, D));
  r.checks.push_back(check_gathered(p, D));
  r.checks.push_back(check_torsion_coincidence(p, D));
  r.checks.push_back(check_extension_of_scalars(p, D));
  r.checks.push_back(check_l_page(p, D));
  r.checks.push_back(check_ut_page(p, D));
  return r;
}

}  // namespace thhku
