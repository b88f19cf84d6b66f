#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thhku/filtered_complex.hpp"
#include "thhku/ss_pages.hpp"

namespace thhku {

// short: d^r inside one phi-block agrees with the truncated sequence.
// long:  a total differential crossing blocks becomes a gathered differential.
// back:  a gathered differential comes from some total differential d(x') = y.
// null_a / null_b: cycles transfer between the gathered and total sequences.
enum class TransferTheorem { Short, Long, Back, NullA, NullB };

std::string to_string(TransferTheorem t);
std::optional<TransferTheorem> parse_transfer_theorem(std::string_view name);
const std::vector<TransferTheorem>& all_transfer_theorems();

struct TransferInstance {
  std::string description;
  bool passed = true;
  std::string witness;  // set on failure
};

struct TransferReport {
  TransferTheorem theorem = TransferTheorem::Short;
  std::vector<TransferInstance> instances;

  int checked() const { return static_cast<int>(instances.size()); }
  int failures() const;
  bool passed() const { return failures() == 0; }
  const TransferInstance* first_failure() const;
};

TransferReport transfer_check(const FilteredComplex& fc, const GatherMap& phi, TransferTheorem theorem);

// Chain-level moves behind the lifting lemma. All chains live in fc / F_{n_max}.

// Largest m with d(c - w) in F_m for some w in F_s, together with w and d(c - w).
struct BoundaryLift {
  int level = 0;
  Vec correction;
  Vec boundary;
};
BoundaryLift maximize_boundary_level(const FilteredComplex& fc, int degree, const Vec& c, int s);

// Largest n with z = d c' for some c' in F_n (c' in degree `degree`); nullopt
// when z is not a boundary.
std::optional<std::pair<int, Vec>> deepest_preimage(const FilteredComplex& fc, int degree, const Vec& z);

// Largest k in [s, cap) with c in F_k + d(F_s) together with the adjusted
// chain in F_k; returns cap when c lies in F_cap + d(F_s).
std::pair<int, Vec> representing_level(const FilteredComplex& fc, int degree, const Vec& c, int s, int cap);

// The three displayed patterns of the counterexample tower.
struct FixtureReport {
  bool total_pattern = false;      // d(x̂′) = ȳ and x̂−x̂′ survives
  bool truncated_pattern = false;  // no nonzero differential in the [0,2) truncation
  bool gathered_pattern = false;   // d(x̄′) = ȳ, d(x̄−x̄′) = 0, d(x̄) = ȳ
  std::vector<std::string> lines;
  bool passed() const { return total_pattern && truncated_pattern && gathered_pattern; }
};
FixtureReport verify_counterexample_fixture();

}  // namespace thhku
