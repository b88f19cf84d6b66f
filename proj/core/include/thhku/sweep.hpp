#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "thhku/transfer.hpp"

namespace thhku {

struct TheoremTally {
  int instances = 0;
  int failures = 0;
  std::string first_failure;  // "seed s: description :: witness"
};

// Seeds [first_seed, first_seed + count) of random filtered complexes, each
// with its own random gather map.
struct SweepReport {
  std::uint64_t first_seed = 0;
  int count = 0;
  std::map<TransferTheorem, TheoremTally> theorems;
  int oracle_mismatches = 0;  // stabilized page vs einfty_oracle
  std::vector<std::uint64_t> mismatched_seeds;
  bool fixture_passed = false;

  bool passed() const;
};

// jobs > 1 shards the seed range; the report does not depend on jobs.
SweepReport run_sweep(std::uint64_t first_seed, int count, int jobs = 1, const RandomComplexParams& params = {});

}  // namespace thhku
