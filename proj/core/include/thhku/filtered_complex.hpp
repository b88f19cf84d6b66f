#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "thhku/local_matrix.hpp"

namespace thhku {

struct InvalidComplexError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// One basis element of a chain group. F_n is spanned by the elements with
// level >= n, so the filtration is basis-adapted. The id survives truncation
// and gathering, which lets chains move between derived complexes.
struct ChainCell {
  std::string name;
  int level = 0;
  int id = 0;
};

// Bounded chain complex with a decreasing filtration by subcomplexes.
// All filtration levels lie in [n_min, n_max]; F_{n_min} is everything and
// F_{n_max} is the limit that every page computation quotients away.
class FilteredComplex {
 public:
  FilteredComplex() = default;
  FilteredComplex(Ring ring, int deg_min, int deg_max, int n_min, int n_max);

  // A negative id draws a fresh one; derived complexes pass the parent's id.
  int add_cell(int degree, std::string name, int level, int id = -1);
  // Adds coeff * target to the boundary of source (target lives in degree - 1).
  void add_boundary(int degree, int source, int target, const Scalar& coeff);

  // Throws InvalidComplexError unless d∘d = 0 and every F_n is a subcomplex.
  void validate() const;

  const Ring& ring() const { return ring_; }
  int deg_min() const { return deg_min_; }
  int deg_max() const { return deg_max_; }
  int n_min() const { return n_min_; }
  int n_max() const { return n_max_; }

  int rank(int degree) const;
  const std::vector<ChainCell>& cells(int degree) const;
  // d_degree : C_degree -> C_{degree-1}; shape rank(degree-1) x rank(degree).
  LocalMatrix boundary(int degree) const;

  // Indices of cells in the given degree with level >= n (resp. < n).
  std::vector<int> at_least(int degree, int n) const;
  std::vector<int> below(int degree, int n) const;

  // C / F_{n_max}: drops the cells of the limit.
  FilteredComplex limit_quotient() const;
  int total_cells() const;

  std::string describe_chain(int degree, const Vec& v) const;

 private:
  Ring ring_{};
  int deg_min_ = 0, deg_max_ = -1;
  int n_min_ = 0, n_max_ = 0;
  int next_id_ = 0;
  std::map<int, std::vector<ChainCell>> cells_;
  // (degree, source, target) -> coefficient
  std::map<std::tuple<int, int, int>, Scalar> d_;
};

// Strictly increasing phi: Z -> Z, given by a table on [first, first + size)
// and extended linearly with the given slopes on both sides.
class GatherMap {
 public:
  GatherMap();  // identity
  GatherMap(int first, std::vector<int> table, int slope_below = 1, int slope_above = 1);

  static GatherMap identity() { return GatherMap(); }
  static GatherMap from_function(int lo, int hi, int (*f)(int));

  int operator()(int n) const;
  // max { n : phi(n) <= level }
  int floor_inverse(int level) const;
  // min { n : phi(n) >= level }
  int ceil_inverse(int level) const { return floor_inverse(level - 1) + 1; }
  std::string to_string() const;

 private:
  int first_ = 0;
  std::vector<int> table_{0};
  int slope_below_ = 1, slope_above_ = 1;
};

// F_a / F_b, with the filtration clipped to [a, b].
FilteredComplex truncate(const FilteredComplex& fc, int a, int b);
// F'_n = F_{phi(n)}.
FilteredComplex gather(const FilteredComplex& fc, const GatherMap& phi);

struct RandomComplexParams {
  int max_degrees = 8;
  int max_steps = 6;
  int max_rank = 4;
  Ring ring{3, false};
};

// Deterministic in seed. The boundary is G D G^{-1} for a split filtered
// complex D and filtration-preserving automorphisms G, so d∘d = 0 and
// d(F_n) ⊆ F_n hold by construction.
FilteredComplex random_filtered_complex(std::uint64_t seed, const RandomComplexParams& params = {});
GatherMap random_gather_map(std::uint64_t seed, const FilteredComplex& fc);

// The three-cell tower Y_2 = HZ, Y_1 = *, Y_0 = ΣHZ with phi skipping level 1.
struct CounterexampleFixture {
  FilteredComplex complex;
  GatherMap phi;
  // Chain names used in the three displayed spectral sequences.
  std::map<std::string, std::string> names;
};
CounterexampleFixture counterexample_fixture();

}  // namespace thhku
