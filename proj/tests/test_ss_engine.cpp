#include <doctest.h>

#include <algorithm>

#include "thhku/filtered_complex.hpp"
#include "thhku/json_io.hpp"
#include "thhku/ss_pages.hpp"
#include "thhku/sweep.hpp"
#include "thhku/transfer.hpp"

using namespace thhku;

namespace {

const Ring Z3{3, false};

SpectralSequence to_stabilization(const FilteredComplex& fc) {
  return ss_pages(fc, std::max(1, fc.n_max() - fc.n_min()));
}

// Whole homology of C / F_{n_max}, degree by degree, straight from the boundaries.
GradedGroup total_homology(const FilteredComplex& input) {
  const FilteredComplex fc = input.limit_quotient();
  GradedGroup out(fc.ring().p);
  for (int d = fc.deg_min(); d <= fc.deg_max(); ++d) {
    const LocalMatrix d_in = d + 1 <= fc.deg_max() ? fc.boundary(d + 1) : LocalMatrix(fc.rank(d), 0, fc.ring());
    const LocalMatrix d_out = d - 1 >= fc.deg_min() ? fc.boundary(d) : LocalMatrix(0, fc.rank(d), fc.ring());
    const GroupValue h = homology_at(d_in, d_out);
    if (!h.is_zero()) out.set(d, h);
  }
  return out;
}

int nonzero_d1_rank(const SpectralSequence& ss) {
  int count = 0;
  for (const auto& [key, e] : ss.page(1).entries)
    for (int i = 0; i < e.differential.rows(); ++i)
      for (int j = 0; j < e.differential.cols(); ++j)
        if (e.differential.at(i, j) != 0) ++count;
  return count;
}

}  // namespace

TEST_CASE("two-step filtration has no differentials") {
  FilteredComplex fc(Z3, 0, 1, 0, 1);
  const int a = fc.add_cell(1, "a", 0);
  const int b = fc.add_cell(0, "b", 0);
  fc.add_cell(0, "c", 0);
  fc.add_boundary(1, a, b, 3);
  fc.validate();
  const SpectralSequence ss = to_stabilization(fc);
  CHECK_FALSE(ss.page(1).has_nonzero_differential());
  BigradedGroup want(3);
  want.set(0, 0, GroupValue(1, {1}));  // Z_(3) + Z/3 in degree 0
  CHECK(ss.einfty_groups() == want);
  CHECK(einfty_oracle(fc) == want);
}

TEST_CASE("zero boundaries: E^1 is already the oracle answer") {
  FilteredComplex fc(Z3, 0, 2, 0, 3);
  for (int d = 0; d <= 2; ++d)
    for (int l = 0; l < 3; ++l) fc.add_cell(d, "c" + std::to_string(d) + std::to_string(l), l);
  fc.validate();
  const SpectralSequence ss = ss_pages(fc, 1);
  CHECK(ss.page(1).groups(3) == einfty_oracle(fc));
}

TEST_CASE("ss_pages argument errors") {
  FilteredComplex fc(Z3, 0, 1, 0, 4);
  fc.add_cell(0, "y", 3);
  const int x = fc.add_cell(1, "x", 0);
  fc.add_boundary(1, x, 0, 1);
  fc.validate();
  CHECK_THROWS_AS(ss_pages(fc, 0), std::invalid_argument);
  // Stopping before stabilization is reported, not silently truncated.
  const SpectralSequence early = ss_pages(fc, 2);
  CHECK_FALSE(early.stabilized());
  CHECK_THROWS(early.einfty());
  CHECK(to_stabilization(fc).einfty_groups().entries().empty());
}

TEST_CASE("invalid complexes are rejected") {
  FilteredComplex fc(Z3, 0, 1, 0, 2);
  const int y = fc.add_cell(0, "y", 0);
  const int x = fc.add_cell(1, "x", 1);
  fc.add_boundary(1, x, y, 1);
  CHECK_THROWS_AS(fc.validate(), InvalidComplexError);  // d lowers filtration
  CHECK_THROWS_AS(FilteredComplex(Z3, 0, 1, 3, 2), InvalidComplexError);
}

TEST_CASE("truncation") {
  const FilteredComplex fc = random_filtered_complex(5);
  CHECK_THROWS_AS(truncate(fc, 2, 1), std::invalid_argument);
  CHECK(total_homology(truncate(fc, 1, 1)).entries().empty());
  // Quotienting by the limit does not change the spectral sequence.
  const SpectralSequence full = to_stabilization(fc);
  const SpectralSequence same = to_stabilization(truncate(fc, fc.n_min(), fc.n_max()));
  for (int r = 1; r <= full.r_max(); ++r) CHECK(full.page(r).groups(3) == same.page(r).groups(3));
}

TEST_CASE("gather map validation") {
  CHECK_THROWS_AS(GatherMap(0, {0, 2, 1}), std::invalid_argument);
  const GatherMap phi(0, {0, 2, 3});
  CHECK(phi(1) == 2);
  CHECK(phi(3) == 4);
  CHECK(phi(4) == 5);
  CHECK(phi(-2) == -2);
  CHECK(phi.floor_inverse(1) == 0);
  CHECK(phi.ceil_inverse(1) == 1);
}

TEST_CASE("gathering by the identity changes nothing") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const FilteredComplex fc = random_filtered_complex(seed);
    const SpectralSequence a = to_stabilization(fc);
    const SpectralSequence b = to_stabilization(gather(fc, GatherMap::identity()));
    REQUIRE(a.r_max() == b.r_max());
    for (int r = 1; r <= a.r_max(); ++r) {
      for (const auto& [key, e] : a.page(r).entries) {
        const PageEntry* f = b.page(r).find(key.first, key.second);
        REQUIRE(f != nullptr);
        CHECK(f->group.value() == e.group.value());
        CHECK(f->names == e.names);
        CHECK(f->differential == e.differential);
      }
      CHECK(a.page(r).entries.size() == b.page(r).entries.size());
    }
  }
}

TEST_CASE("doubling phi turns d^2 and d^3 into gathered d^1") {
  FilteredComplex fc(Z3, 0, 1, 0, 6);
  const int y = fc.add_cell(0, "y", 2);
  const int z = fc.add_cell(0, "z", 3);
  const int x = fc.add_cell(1, "x", 0);
  const int w = fc.add_cell(1, "w", 0);
  fc.add_boundary(1, x, y, 1);
  fc.add_boundary(1, w, z, 1);
  fc.validate();
  const SpectralSequence total = to_stabilization(fc);
  CHECK(nonzero_d1_rank(total) == 0);
  CHECK(total.page(2).has_nonzero_differential());
  CHECK(total.page(3).has_nonzero_differential());

  const SpectralSequence g = to_stabilization(gather(fc, GatherMap(0, {0, 2, 4}, 1, 2)));
  CHECK(nonzero_d1_rank(g) == 2);
  for (int r = 2; r <= g.r_max(); ++r) CHECK_FALSE(g.page(r).has_nonzero_differential());
  CHECK(g.einfty_groups().entries().empty());
}

TEST_CASE("random complexes honour the generator contract") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const FilteredComplex fc = random_filtered_complex(seed);
    CHECK_NOTHROW(fc.validate());
    CHECK(fc.deg_max() - fc.deg_min() + 1 <= 8);
    CHECK(fc.n_max() - fc.n_min() <= 6);
    for (int d = fc.deg_min(); d <= fc.deg_max(); ++d) CHECK(fc.rank(d) <= 4);
  }
  RandomComplexParams one;
  one.max_steps = 1;
  const FilteredComplex two_step = random_filtered_complex(0, one);
  CHECK(two_step.n_max() - two_step.n_min() == 1);
  CHECK_THROWS_AS(random_filtered_complex(0, {0, 1, 1, Z3}), std::invalid_argument);
  // Deterministic in the seed.
  CHECK(pages_json(to_stabilization(random_filtered_complex(17))) ==
        pages_json(to_stabilization(random_filtered_complex(17))));
}

TEST_CASE("pages are homology of the previous page and square to zero") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const FilteredComplex fc = random_filtered_complex(seed);
    const SpectralSequence ss = to_stabilization(fc);
    for (int r = 1; r < ss.r_max(); ++r) {
      CHECK(differential_squares_to_zero(ss, r));
      for (const auto& [key, e] : ss.page(r).entries) {
        const GroupValue h = page_homology(ss, r, key.first, key.second);
        const PageEntry* next = ss.page(r + 1).find(key.first, key.second);
        CHECK(h == (next ? next->group.value() : GroupValue::zero()));
      }
    }
  }
}

TEST_CASE("the oracle sums to the homology of C / F_max") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const FilteredComplex fc = random_filtered_complex(seed);
    GradedGroup sum(3);
    const BigradedGroup graded = einfty_oracle(fc);
    for (const auto& [key, g] : graded.entries()) sum.add(key.first + key.second, g);
    const GradedGroup whole = total_homology(fc);
    // Free ranks add up exactly; torsion can only be split, never lost.
    for (int d = fc.deg_min(); d <= fc.deg_max(); ++d) {
      CHECK(sum.at(d).free_rank == whole.at(d).free_rank);
      CHECK(sum.at(d).torsion_length() == whole.at(d).torsion_length());
    }
  }
}

TEST_CASE("counterexample fixture") {
  const FixtureReport rep = verify_counterexample_fixture();
  CHECK(rep.total_pattern);
  CHECK(rep.truncated_pattern);
  CHECK(rep.gathered_pattern);
  const CounterexampleFixture f = counterexample_fixture();
  CHECK(f.names.at("y") == "ȳ");
  for (TransferTheorem t : all_transfer_theorems()) {
    const TransferReport r = transfer_check(f.complex, f.phi, t);
    CHECK_MESSAGE(r.passed(), to_string(t));
  }
  CHECK(transfer_check(f.complex, f.phi, TransferTheorem::Long).checked() >= 1);
}

TEST_CASE("transfer theorem names round-trip") {
  for (TransferTheorem t : all_transfer_theorems()) CHECK(parse_transfer_theorem(to_string(t)) == t);
  CHECK_FALSE(parse_transfer_theorem("sideways").has_value());
}

TEST_CASE("transfer checkers on a seed range") {
  const SweepReport r = run_sweep(1000, 40, 2);
  for (const auto& [t, tally] : r.theorems) {
    CHECK_MESSAGE(tally.failures == 0, to_string(t) << ": " << tally.first_failure);
    CHECK(tally.instances > 0);
  }
  CHECK(r.oracle_mismatches == 0);
  // Sharding does not change the report.
  const SweepReport one = run_sweep(1000, 40, 1);
  CHECK(report_json(one) == report_json(r));
}

TEST_CASE("F_p coefficients") {
  RandomComplexParams params;
  params.ring = {3, true};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const FilteredComplex fc = random_filtered_complex(seed, params);
    CHECK(to_stabilization(fc).einfty_groups() == einfty_oracle(fc));
  }
}
