#pragma once

#include <optional>
#include <vector>

#include "thhku/local_matrix.hpp"

namespace thhku {

// A submodule of Z_(p)^n (or F_p^n), stored with a basis of independent columns.
class Lattice {
 public:
  Lattice() = default;
  Lattice(int ambient, Ring ring);  // zero submodule

  static Lattice span(const LocalMatrix& generators);
  static Lattice span(const std::vector<Vec>& generators, int ambient, Ring ring);
  static Lattice whole(int ambient, Ring ring);

  int ambient() const { return ambient_; }
  int rank() const { return basis_.cols(); }
  const Ring& ring() const { return ring_; }
  const LocalMatrix& basis() const { return basis_; }

  // Coordinates with respect to basis(); nullopt when v is not in the lattice.
  std::optional<Vec> coordinates(const Vec& v) const;
  bool contains(const Vec& v) const { return coordinates(v).has_value(); }
  bool contains(const Lattice& other) const;
  bool operator==(const Lattice& other) const { return contains(other) && other.contains(*this); }

  Lattice operator+(const Lattice& other) const;
  // f(L) for f: Z^ambient -> Z^m.
  Lattice image(const LocalMatrix& f) const;
  // { x in L : f x in target }.
  Lattice preimage(const LocalMatrix& f, const Lattice& target) const;

  // Linear map sending x in L to its basis coordinates (rank x ambient).
  LocalMatrix coordinate_map() const;

 private:
  int ambient_ = 0;
  Ring ring_{};
  LocalMatrix basis_;
  LocalMatrix U_;                // U_ * basis_ = [diag(p^e); 0]
  std::vector<int> exponents_;
};

// The subquotient big/small as a direct sum of cyclic modules with explicit
// representatives.
class Quotient {
 public:
  Quotient() = default;
  Quotient(const Lattice& big, const Lattice& small);

  int size() const { return static_cast<int>(reps_.size()); }
  const Vec& representative(int i) const { return reps_[i]; }
  bool is_free(int i) const { return exponents_[i] == 0; }
  int exponent(int i) const { return exponents_[i]; }  // 0 for a free summand
  GroupValue value() const;

  const Lattice& big() const { return big_; }
  const Lattice& small() const { return small_; }

  // Reduced coordinates of the class of x; throws when x is not in big.
  Vec classify(const Vec& x) const;
  bool is_zero_class(const Vec& x) const;
  bool same_class(const Vec& a, const Vec& b) const;
  // Reduce a coordinate vector modulo the cyclic orders.
  Vec reduce(const Vec& coords) const;
  // A representative of the class with the given coordinates.
  Vec lift(const Vec& coords) const;

 private:
  Lattice big_, small_;
  std::vector<Vec> reps_;
  std::vector<int> exponents_;
  LocalMatrix coord_;  // size() x ambient
};

}  // namespace thhku
