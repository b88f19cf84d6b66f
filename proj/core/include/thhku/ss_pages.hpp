#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thhku/filtered_complex.hpp"
#include "thhku/graded_group.hpp"
#include "thhku/lattice.hpp"

namespace thhku {

// E^r at total degree `degree` and filtration `level`; (x, y) = (degree - level, level).
struct PageEntry {
  int degree = 0;
  int level = 0;
  Quotient group;
  std::vector<std::string> names;  // one per generator, as chains
  // Column i holds the coordinates of d^r(generator i) in the target entry;
  // zero rows when the target lies outside the window.
  LocalMatrix differential;
  int target_size = 0;

  int x() const { return degree - level; }
  int y() const { return level; }
};

struct Page {
  int r = 1;
  std::map<std::pair<int, int>, PageEntry> entries;  // keyed by (degree, level)

  const PageEntry* find(int degree, int level) const;
  BigradedGroup groups(long p) const;  // keyed by (x, y)
  bool has_nonzero_differential() const;
};

// Pages of the spectral sequence of fc / F_{n_max}, computed from
//   Z^r_n = { c in F_n : d c in F_{n+r} },
//   E^r_n = Z^r_n / (Z^{r-1}_{n+1} + d Z^{r-1}_{n-r+1}),
// with d^r [c] = [d c]. Differentials have bidegree (-r-1, r).
class SpectralSequence {
 public:
  SpectralSequence() = default;
  SpectralSequence(const FilteredComplex& fc, int r_max);

  const FilteredComplex& complex() const { return fc_; }
  const Ring& ring() const { return fc_.ring(); }
  int r_max() const { return static_cast<int>(pages_.size()); }
  const std::vector<Page>& pages() const { return pages_; }
  const Page& page(int r) const;

  // E^L = E^infinity for L = max(1, n_max - n_min): no d^r with r >= L fits.
  int stabilization() const { return std::max(1, fc_.n_max() - fc_.n_min()); }
  bool stabilized() const { return r_max() >= stabilization(); }
  // Largest r with a nonzero d^r among the computed pages (0 when none).
  int last_nonzero_differential() const;
  const Page& einfty() const;
  BigradedGroup einfty_groups() const;

  Lattice filtration(int degree, int n) const;
  Lattice cycles(int degree, int n, int r) const;       // Z^r_n
  Lattice boundaries(int degree, int n, int r) const;   // denominator of E^r_n
  Quotient page_group(int degree, int n, int r) const;

  // Class in E^r_n of a chain, or nullopt when the chain is not in Z^r_n.
  std::optional<Vec> class_of(int degree, int n, int r, const Vec& chain) const;
  // d^r applied to coordinates via the stored page matrix.
  Vec apply_differential(int degree, int n, int r, const Vec& coords) const;

 private:
  FilteredComplex fc_;
  std::vector<Page> pages_;
  mutable std::map<std::tuple<int, int, int>, Lattice> cycle_cache_;
};

// Throws std::invalid_argument when r_max < 1.
SpectralSequence ss_pages(const FilteredComplex& fc, int r_max);

// Associated graded of H_*(F_{n_min}/F_{n_max}) under the images of
// H_*(F_y/F_{n_max}), computed directly from kernels and images.
BigradedGroup einfty_oracle(const FilteredComplex& fc);

// H(E^r, d^r) at one position, from the page data alone.
GroupValue page_homology(const SpectralSequence& ss, int r, int degree, int level);
// d^r ∘ d^r = 0 on page r, checked on generators.
bool differential_squares_to_zero(const SpectralSequence& ss, int r);

}  // namespace thhku
