#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "thhku/graded_group.hpp"
#include "thhku/lattice.hpp"

namespace thhku {

struct PresentationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// coeff · v^power · generator, where v is the presentation's variable (u or v1).
struct PresTerm {
  Scalar coeff = 1;
  int power = 0;
  int generator = 0;
};

struct PresGenerator {
  std::string name;  // v0 appears only as a name prefix
  int degree = 0;
  // Filtration offset: a generator named as u^w times a class sits in
  // filtration w of the nominal u-exponent filtration.
  int weight = 0;
};

// lhs = rhs; an empty rhs means lhs = 0.
struct Relation {
  std::vector<PresTerm> lhs;
  std::vector<PresTerm> rhs;
  std::string family;
};

// A graded Z_(p)[v]-module (or Z_(p)[v]/(v^h)-module) given by generators and
// homogeneous relations, instantiated for generator degrees <= bound.
struct Presentation {
  std::string title;
  long p = 3;
  int bound = 0;
  std::string variable = "u";
  int variable_degree = 2;
  int truncation = 0;  // v^truncation = 0 on every generator when positive
  std::vector<PresGenerator> generators;
  std::vector<Relation> relations;

  int index_of(const std::string& name) const;  // -1 when absent
  int add_generator(std::string name, int degree, int weight = 0);
  // Throws PresentationError when the relation is not homogeneous.
  void add_relation(Relation rel);
  int term_degree(const PresTerm& t) const;
  std::string term_string(const PresTerm& t) const;
  std::string side_string(const std::vector<PresTerm>& side) const;
};

// Replace v by w^factor, so v^k g becomes w^{k factor} g; generator degrees are unchanged.
Presentation base_change(const Presentation& pres, std::string variable, int variable_degree, int factor,
                         int truncation = 0);

// Degreewise evaluation: the degree-d part is the free module on the symbols
// v^a g of degree d modulo the v-multiples of all relations landing there.
class PresentedModule {
 public:
  struct Piece {
    std::vector<std::pair<int, int>> basis;  // (power, generator)
    std::map<std::pair<int, int>, int> index;
    Lattice relations;
    Quotient module;
    GroupValue group;
  };

  explicit PresentedModule(Presentation pres);

  const Presentation& presentation() const { return pres_; }
  Ring ring() const { return {pres_.p, false}; }
  const Piece& piece(int degree) const;
  GroupValue group(int degree) const { return piece(degree).group; }
  GradedGroup groups(int max_degree) const;

  // Coordinates of sum(terms) (all of one degree) in the basis of that degree.
  Vec vector(int degree, const std::vector<PresTerm>& terms) const;
  Vec basis_vector(int degree, int power, int generator) const;
  bool is_zero(int degree, const Vec& x) const;
  // Multiplication by v^k from degree d to degree d + k |v|.
  LocalMatrix multiply_by_variable(int degree, int k) const;

  // Elements killed by a power of p (the saturation of the relations).
  Lattice p_torsion(int degree) const;
  // x with v^k x = 0.
  Lattice variable_kernel(int degree, int k) const;
  // Span of v^a g with a + weight(g) >= f, plus the relations. With no
  // weights this is the image of v^f.
  Lattice filtration(int degree, int f) const;
  // gr_f at degree d: image(v^{fs}) / image(v^{(f+1)s}) for step s. The step
  // p - 1 gives the v1-adic filtration on a u-module.
  GroupValue graded_piece(int degree, int f, int step = 1) const;
  // All nonzero-length gr_f at once, indexed by f.
  std::vector<GroupValue> associated_graded(int degree, int step = 1) const;
  std::string describe(int degree, const Vec& x) const;

 private:
  Presentation pres_;
  std::map<int, std::vector<int>> rel_by_degree_;
  mutable std::map<int, std::unique_ptr<Piece>> cache_;
};

// Z_(p)[v]-linear map given on generators; images are term lists in the target.
class ModuleMap {
 public:
  ModuleMap(const PresentedModule& source, const PresentedModule& target,
            std::vector<std::vector<PresTerm>> generator_images);

  LocalMatrix matrix(int degree) const;
  // f(relations) lands in the target relations.
  bool well_defined(int degree) const;
  // f(x) = 0 forces x = 0 in the source.
  bool injective(int degree) const;
  GroupValue cokernel(int degree) const;
  Lattice image(int degree) const;  // in target coordinates, relations included

 private:
  const PresentedModule& src_;
  const PresentedModule& tgt_;
  std::vector<std::vector<PresTerm>> images_;
};

}  // namespace thhku
