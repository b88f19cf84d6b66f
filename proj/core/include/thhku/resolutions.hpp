#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "thhku/graded_group.hpp"
#include "thhku/monomial.hpp"

namespace thhku {

struct ResolutionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A free resolution with one generator g_s per stage, d(g_s) = m_s g_{s-1},
// tensored down to the coefficient algebra along psi. Gradings are internal
// (the y-part of each Degree); homological degree is the stage index.
struct ResolutionSpec {
  std::string name;
  MonomialAlgebra base;
  std::vector<int> stage_degrees;    // internal degree of g_s, s >= 0
  std::vector<Element> multipliers;  // m_s for s >= 1, stored at index s - 1
  MonomialAlgebra coefficients;
  std::vector<Element> psi;  // image of each base generator
  bool rational = false;     // free ranks only; torsion must be absent
};

enum class TorCase { ku_res, trunc_tensor, divided_power, rational };

std::string to_string(TorCase c);
std::optional<TorCase> parse_tor_case(std::string_view name);
const std::vector<TorCase>& all_tor_cases();

// Enough stages to cover total degree D, plus `extra_periods` further periods.
ResolutionSpec resolution_spec(TorCase c, long p, int D, int extra_periods = 0);

// Keyed by (homological, internal). Throws ResolutionError when consecutive
// multipliers do not compose to zero in the base ring, or when the rational
// case produces torsion.
BigradedGroup periodic_resolution_homology(const ResolutionSpec& spec, int D);

BigradedGroup tor_closed_form(TorCase c, long p, int D);

// Below D, homology does not change when one more period is added.
bool stable_under_extra_period(TorCase c, long p, int D);

}  // namespace thhku
