#include "thhku/sweep.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "thhku/ss_pages.hpp"

namespace thhku {

bool SweepReport::passed() const {
  for (const auto& [t, tally] : theorems)
    if (tally.failures > 0) return false;
  return oracle_mismatches == 0 && fixture_passed;
}

namespace {

void sweep_range(std::uint64_t lo, std::uint64_t hi, const RandomComplexParams& params, SweepReport& out) {
  for (std::uint64_t s = lo; s < hi; ++s) {
    const FilteredComplex fc = random_filtered_complex(s, params);
    const GatherMap phi = random_gather_map(s, fc);
    for (TransferTheorem t : all_transfer_theorems()) {
      const TransferReport r = transfer_check(fc, phi, t);
      TheoremTally& tally = out.theorems[t];
      tally.instances += r.checked();
      tally.failures += r.failures();
      if (r.failures() > 0 && tally.first_failure.empty())
        tally.first_failure =
            "seed " + std::to_string(s) + ": " + r.first_failure()->description + " :: " + r.first_failure()->witness;
    }
    const SpectralSequence ss = ss_pages(fc, std::max(1, fc.n_max() - fc.n_min()));
    if (!(ss.einfty_groups() == einfty_oracle(fc))) {
      ++out.oracle_mismatches;
      out.mismatched_seeds.push_back(s);
    }
  }
}

}  // namespace

SweepReport run_sweep(std::uint64_t first_seed, int count, int jobs, const RandomComplexParams& params) {
  if (count < 1) throw std::invalid_argument("sweep count must be at least 1");
  jobs = std::clamp(jobs, 1, count);
  SweepReport report;
  report.first_seed = first_seed;
  report.count = count;
  for (TransferTheorem t : all_transfer_theorems()) report.theorems[t];

  // Contiguous shards, merged in seed order so first failures stay the same.
  std::vector<std::future<SweepReport>> shards;
  for (int j = 0; j < jobs; ++j) {
    const std::uint64_t lo = first_seed + static_cast<std::uint64_t>(count) * j / jobs;
    const std::uint64_t hi = first_seed + static_cast<std::uint64_t>(count) * (j + 1) / jobs;
    shards.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, [lo, hi, &params] {
      SweepReport part;
      sweep_range(lo, hi, params, part);
      return part;
    }));
  }
  for (auto& f : shards) {
    const SweepReport part = f.get();
    for (const auto& [t, tally] : part.theorems) {
      TheoremTally& acc = report.theorems[t];
      acc.instances += tally.instances;
      acc.failures += tally.failures;
      if (acc.first_failure.empty()) acc.first_failure = tally.first_failure;
    }
    report.oracle_mismatches += part.oracle_mismatches;
    report.mismatched_seeds.insert(report.mismatched_seeds.end(), part.mismatched_seeds.begin(),
                                   part.mismatched_seeds.end());
  }
  report.fixture_passed = verify_counterexample_fixture().passed();
  return report;
}

}  // namespace thhku
