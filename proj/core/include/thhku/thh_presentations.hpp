#pragma once

#include <vector>

#include "thhku/presentation.hpp"

namespace thhku {

// Throws std::invalid_argument unless p is an odd prime.
void require_odd_prime(long p);

// "μ_9", "v₀μ_9", "v₀^2σuμ_27".
std::string mu_name(int h, const std::string& middle, long long N);

// THH_*(ℓ) over Z_(p)[v1], generators of degree <= D.
Presentation presentation_thh_l(long p, int D);

// THH_*(ku; ku/v1) over Z_(p)[u]/(u^{p-1}).
Presentation presentation_thh_ku_modv1(long p, int D);

// THH_*(ku) over Z_(p)[u].
Presentation presentation_thh_ku(long p, int D);

// The cokernel of ku_* ⊗ THH_*(ℓ) -> THH_*(ku):
// P_{p-2}(u){σu} plus P_{p-2}(u){σuμ_{ap^n}} / p^n.
Presentation presentation_cokernel(long p, int D);

// ku_* ⊗_{ℓ_*} THH_*(ℓ): the THH_*(ℓ) presentation with v1 replaced by u^{p-1}.
Presentation presentation_ku_tensor_thh_l(long p, int D);

// Generator images of ku_* ⊗ THH_*(ℓ) -> THH_*(ku), in terms of the generators
// of `ku`: σv1 goes to u^{p-2}σu and v0^h σv1 μ_N to u^{p-2} v0^h σu μ_N.
std::vector<std::vector<PresTerm>> extension_of_scalars_images(const Presentation& ku_tensor_l,
                                                               const Presentation& ku);

}  // namespace thhku
