#pragma once

#include <string>
#include <vector>

#include "thhku/bockstein.hpp"
#include "thhku/consistency.hpp"
#include "thhku/differential_graph.hpp"
#include "thhku/presentation.hpp"
#include "thhku/resolutions.hpp"
#include "thhku/ss_pages.hpp"
#include "thhku/sweep.hpp"
#include "thhku/torsion_block.hpp"

namespace thhku {

// Every dump is pretty-printed with two-space indentation, keys in a fixed
// order and arrays in the order of the underlying containers, so equal inputs
// give equal bytes.

// [{r, entries: [{x, y, free_rank, torsion, basis}], differentials: [{r, s, from, to, coeff}]}]
std::string pages_json(const SpectralSequence& ss);
// Rule pages in increasing r, then E^infinity with r = 0. `coeff` is the
// p-power of the leading image coordinate.
std::string pages_json(const SSRun& run, long p);

// {title, p, variable, generators: [{name, degree}], relations: [{lhs, rhs, family}],
//  groups: [{degree, group, basis}]} with groups for degrees 0..max_degree.
std::string presentation_json(const PresentedModule& module, int max_degree);

std::string bigraded_json(const BigradedGroup& g);
std::string report_json(const ConsistencyReport& report);
std::string report_json(const GraphReport& report);
std::string report_json(const SweepReport& report);
std::string block_json(const TorsionBlock& block);
std::string lint_json(const std::string& title, const std::vector<LintCandidate>& candidates);

// Cyclic summands of the degree-d group, each with a representative.
struct DescribedSummand {
  int exponent = 0;  // 0 for Z_(p)
  std::string representative;
};
std::vector<DescribedSummand> describe_group(const PresentedModule& module, int degree);

}  // namespace thhku
