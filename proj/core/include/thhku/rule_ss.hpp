#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thhku/graded_group.hpp"
#include "thhku/lattice.hpp"

namespace thhku {

// Name of an E^1 basis class as a product of the named factors. mu = 0 is
// μ_0 = 1; v0 is a name prefix on μ, never a multiplication.
struct ClassLabel {
  long long mu = 0;
  int v0 = 0;
  int su = 0;     // σu
  int sv = 0;     // σv1
  int gamma = 0;  // γ_k φu
  int u = 0;
  int v1 = 0;

  auto operator<=>(const ClassLabel&) const = default;
  bool operator==(const ClassLabel&) const = default;
  std::string name() const;
};

struct BasisClass {
  ClassLabel label;
  int degree = 0;  // total degree x + y
  int y = 0;       // filtration coordinate
  int order = 0;   // exponent e of p^e; 0 for Z_(p)

  int x() const { return degree - y; }
};

struct RuleTerm {
  ClassLabel target;
  Scalar coeff = 1;
};

// d^r on E^1 basis classes, extended linearly. `apply` returns nullopt when
// the family does not touch the class and an empty list when it sends it to 0.
// Rational coefficients are allowed: a source written p^n·c is encoded as
// c -> p^{-n}·target and must be p-integral on the r-cycles.
struct RuleFamily {
  std::string name;
  int r = 1;      // y-jump: |d^r| = (-r-1, r)
  int shift = 1;  // the same jump in powers of the Bockstein element
  std::function<std::optional<std::vector<RuleTerm>>(const ClassLabel&)> apply;
};

struct RuleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PositionGroup {
  GroupValue value;
  std::vector<std::string> basis;  // representatives, as E^1 combinations
};

struct RuleDifferential {
  int r = 0;
  int shift = 0;
  std::string family;
  int degree = 0;  // source total degree
  int y = 0;       // source filtration
  std::string from, to;
  int coeff_valuation = 0;  // smallest p-adic valuation among the image coordinates
};

// E^r with the d^r acting on it; r = 0 marks E^infinity.
struct RulePage {
  int r = 0;
  int shift = 0;
  std::map<std::pair<int, int>, PositionGroup> groups;  // keyed by (degree, y)
  std::vector<RuleDifferential> differentials;

  BigradedGroup bigraded(long p, int max_degree) const;  // keyed by (x, y)
};

// Runs rule families in increasing r over a page of cyclic basis classes. Each
// E^r position is a subquotient Z/B of its E^1 coordinates; every rule map is
// checked to be p-integral on Z^r, to land in Z^r of the target, to send B^r
// into B^r, and to square to zero.
class RuleSS {
 public:
  RuleSS(long p, int reliable_degree, std::vector<BasisClass> classes, std::vector<RuleFamily> families,
         std::function<bool(const ClassLabel&)> vanishes);

  long prime() const { return p_; }
  int reliable_degree() const { return reliable_; }
  const std::vector<BasisClass>& classes() const { return classes_; }
  const std::vector<RulePage>& pages() const { return pages_; }
  const RulePage& einfty_page() const { return einfty_; }
  // Degrees above reliable_degree() are dropped.
  BigradedGroup einfty() const { return einfty_.bigraded(p_, reliable_); }
  BigradedGroup e1() const;
  std::string describe(int degree, int y, const Vec& coords) const;

 private:
  struct Position {
    std::vector<int> classes;
    Lattice Z, B;
  };
  using Key = std::pair<int, int>;

  void run(const std::vector<RuleFamily>& families);
  RulePage snapshot(int r, int shift) const;
  // Column j: d^r of E^1 class j at `src` in coordinates of `dst`.
  std::vector<Vec> rule_columns(const Key& src, const Key& dst, const std::vector<const RuleFamily*>& fams,
                                bool& touched) const;

  long p_;
  int reliable_;
  Ring ring_;
  std::vector<BasisClass> classes_;
  std::map<ClassLabel, int> by_label_;
  std::map<Key, Position> positions_;
  std::function<bool(const ClassLabel&)> vanishes_;
  std::vector<RulePage> pages_;
  RulePage einfty_;
};

}  // namespace thhku
