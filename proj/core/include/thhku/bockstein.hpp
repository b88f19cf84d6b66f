#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thhku/rule_ss.hpp"

namespace thhku {

// lZ and uTB are Brun sequences, filtered by y itself; l and v1 are v1-Bockstein
// sequences, uT and u are u-Bockstein sequences.
enum class SSId { lZ, l, uT, uTB, v1, u };

std::string to_string(SSId id);
std::optional<SSId> parse_ss_id(std::string_view name);
const std::vector<SSId>& all_ss_ids();

struct NamedSS {
  SSId id = SSId::u;
  long p = 3;
  int D = 0;
  int unit = 1;  // y-jump of one power of the Bockstein element
  // Classes of total degree <= D + 1: the extra degree feeds the differentials
  // out of degree D + 1 into degree D, so degrees <= D are exact.
  std::vector<BasisClass> classes;
  std::vector<RuleFamily> rules;
  std::function<bool(const ClassLabel&)> vanishes;

  int edge_degree() const { return D + 1; }
};

// Throws std::invalid_argument for an even or composite p or D < 2p.
NamedSS build_e1(SSId id, long p, int D);

struct SSRun {
  std::shared_ptr<const RuleSS> engine;
  BigradedGroup e1;
  BigradedGroup einfty;  // degrees <= D
  GradedGroup totals;    // degreewise direct sum of einfty
  std::vector<std::string> edge_uncertain;  // E^infinity classes above D

  const std::vector<RulePage>& pages() const { return engine->pages(); }
};

// Throws RuleError when a rule self-check fails.
SSRun run_rules(const NamedSS& ss);

// One page of classes for bidegree scans.
struct LintClass {
  std::string name;
  int x = 0;
  int y = 0;
  int order = 0;  // exponent of p; 0 for Z_(p); -1 for a zero class
  bool indecomposable = false;

  bool is_zero() const { return order < 0; }
};

// Serre and Bockstein pages: |d^r| = (-r-1, r), r >= 1. Künneth pages in
// (homological, internal) grading: |d^r| = (-r, r-1), r >= 2.
enum class LintGrading { Serre, Homological };

struct LintPage {
  std::string title;
  std::vector<LintClass> classes;
  LintGrading grading = LintGrading::Serre;
};

struct LintCandidate {
  std::string source, target;
  int r = 0;
  bool source_zero = false;
  bool target_zero = false;
  bool source_indecomposable = false;

  bool feasible_nonzero() const { return !source_zero && !target_zero; }
};

// Every (source, target) pair whose bidegree difference is that of some d^r.
std::vector<LintCandidate> collapse_linter(const LintPage& page);
std::vector<LintCandidate> collapse_linter(const NamedSS& ss);

struct LintVerdict {
  std::string title;
  int candidates = 0;
  std::vector<std::string> offenders;  // "source -> target (d^r)"

  bool passed() const { return offenders.empty(); }
};

// Every candidate on uz_page(p, D) is a d^3 from μ_{n+2} to σuμ_n with at
// least one zero end.
LintVerdict lint_uz(long p, int D);
// No indecomposable source admits a candidate with both ends nonzero.
LintVerdict lint_indecomposables(const LintPage& page);

// THH_*(HZ_(p)) ⊗ E(σu) with σu on the vertical axis at (0, 3); μ_n for all n,
// zero when p does not divide n.
LintPage uz_page(long p, int D);
// Tor^{P_{p-1}(u)}(Z_(p), Z_(p)) = E(σu) ⊗ Γ(φu), |σu| = (1, 2), |φu| = (2, 2p-2).
LintPage kunneth_truncated_page(long p, int D);
// THH_*(HZ_(p)) ⊠ (E(σu) ⊗ Γ(φu)) with the coefficient algebra on the vertical
// axis: |σu| = (0, 3), |φu| = (0, 2p).
LintPage brun_coefficient_page(long p, int D);

}  // namespace thhku
