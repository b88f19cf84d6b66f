#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "thhku/plocal.hpp"

namespace thhku {

// Bidegree (x, y); an integer degree d is stored as (d, 0).
struct Degree {
  int x = 0;
  int y = 0;

  int total() const { return x + y; }
  Degree operator+(const Degree& o) const { return {x + o.x, y + o.y}; }
  Degree operator*(int k) const { return {k * x, k * y}; }
  bool operator==(const Degree&) const = default;
  auto operator<=>(const Degree&) const = default;
};

enum class GeneratorKind { Polynomial, Truncated, Exterior, DividedPower };
enum class Axis { Left, Right };  // side of the box-tensor separator

struct GeneratorSpec {
  std::string name;
  Degree degree;
  GeneratorKind kind = GeneratorKind::Polynomial;
  int height = 0;  // Truncated only; Exterior is height 2
  Axis axis = Axis::Left;
};

struct AlgebraError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exponent vector, one entry per generator. For a divided-power generator the
// entry i stands for gamma_i x.
using Monomial = std::vector<int>;

class MonomialAlgebra;

// Finite integer combination of monomials; zero coefficients are never stored.
class Element {
 public:
  Element() = default;

  const std::map<Monomial, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint64_t algebra_id() const { return algebra_id_; }
  bool operator==(const Element&) const = default;

 private:
  friend class MonomialAlgebra;
  std::uint64_t algebra_id_ = 0;
  std::map<Monomial, mpz_class> terms_;
};

class MonomialAlgebra {
 public:
  MonomialAlgebra() = default;

  const Ring& ring() const { return ring_; }
  const std::vector<GeneratorSpec>& generators() const { return gens_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }
  int index_of(const std::string& name) const;  // throws AlgebraError when absent
  std::uint64_t id() const { return id_; }

  bool is_valid(const Monomial& m) const;
  Degree degree(const Monomial& m) const;
  // "1", "u^2 σu", "γ_2φu".
  std::string name(const Monomial& m) const;

  // Monomials of exactly this bidegree, lexicographic in (generator index,
  // exponent). A degree-zero generator without a height bound makes the
  // enumeration infinite; `max_exponent` caps its exponent.
  std::vector<Monomial> basis_in_degree(Degree d, int max_exponent = 0) const;
  // All bidegrees with total degree t.
  std::vector<Monomial> basis_in_total_degree(int t, int max_exponent = 0) const;

  Element element(const Monomial& m, const mpz_class& coeff = 1) const;
  Element generator(const std::string& name, int exponent = 1) const;
  Element one() const { return element(Monomial(gens_.size(), 0)); }
  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, const mpz_class& c) const;
  // Throws AlgebraError when an operand belongs to another algebra.
  Element multiply(const Element& a, const Element& b) const;
  bool is_homogeneous(const Element& a) const;
  std::string to_string(const Element& a) const;

 private:
  friend MonomialAlgebra make_algebra(const std::vector<GeneratorSpec>&, Ring);
  void insert(Element& e, const Monomial& m, const mpz_class& c) const;
  void require_same(const Element& e) const;

  Ring ring_{};
  std::vector<GeneratorSpec> gens_;
  std::uint64_t id_ = 0;
};

// Throws AlgebraError on a duplicate name or a truncation height below 2.
MonomialAlgebra make_algebra(const std::vector<GeneratorSpec>& spec, Ring ring);

GeneratorSpec polynomial(std::string name, Degree d, Axis axis = Axis::Left);
GeneratorSpec truncated(std::string name, Degree d, int height, Axis axis = Axis::Left);
GeneratorSpec exterior(std::string name, Degree d, Axis axis = Axis::Left);
GeneratorSpec divided_power(std::string name, Degree d, Axis axis = Axis::Left);

}  // namespace thhku
