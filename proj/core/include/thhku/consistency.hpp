#pragma once

#include <string>
#include <vector>

#include "thhku/bockstein.hpp"
#include "thhku/presentation.hpp"

namespace thhku {

struct CheckOutcome {
  std::string name;
  bool passed = true;
  int first_failing_degree = -1;  // -1 when passed
  std::string detail;             // both sides at the first failure
  int degrees_checked = 0;
};

struct ConsistencyReport {
  long p = 3;
  int D = 0;
  std::vector<CheckOutcome> checks;

  bool passed() const;
  const CheckOutcome* first_failure() const;
};

// E^infinity of a run against the associated graded of a presented module,
// position (d, f·unit) against gr_f M_d for the filtration by v^{f·step}.
CheckOutcome compare_einfty_with_graded(const std::string& name, const SSRun& run, const NamedSS& ss,
                                        const PresentedModule& module, int step);

// (i) E^infinity(u) is the u-adic associated graded of THH_*(ku).
CheckOutcome check_u_page(long p, int D);
// (ii) the gathered path: (v1), fed by (uT), is the v1-adic associated graded
// of the same module that (u) grades u-adically, and the two free ranks agree.
CheckOutcome check_gathered(long p, int D);
// (iii) p-power torsion equals u-power torsion, as element sets, in degrees <= D.
CheckOutcome check_torsion_coincidence(long p, int D);
// (iv) ku_* ⊗ THH_*(ℓ) -> THH_*(ku) is well defined and injective with cokernel C.
CheckOutcome check_extension_of_scalars(long p, int D);
// E^infinity(l) is the v1-adic associated graded of THH_*(ℓ).
CheckOutcome check_l_page(long p, int D);
// E^infinity(uT) is the associated graded of THH_*(ku;ku/v1) for the nominal
// u-exponent filtration: uμ_{kp} is not a u-multiple there, yet it sits in
// filtration 1.
CheckOutcome check_ut_page(long p, int D);

// All of the above, in this order.
ConsistencyReport verify_consistency(long p, int D);

// p^K-torsion and u^K-torsion lattices differ in this degree, or -1. Uses a
// presentation instantiated to 2D + 4 so that u-towers can be followed.
int first_torsion_mismatch(const PresentedModule& module, int D);

}  // namespace thhku
