#include "thhku/monomial.hpp"

#include <atomic>
#include <set>

namespace thhku {

namespace {

std::atomic<std::uint64_t> next_algebra_id{1};

int exponent_cap(const GeneratorSpec& g) {
  switch (g.kind) {
    case GeneratorKind::Exterior: return 1;
    case GeneratorKind::Truncated: return g.height - 1;
    default: return -1;  // unbounded
  }
}

mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

GeneratorSpec polynomial(std::string name, Degree d, Axis axis) {
  return {std::move(name), d, GeneratorKind::Polynomial, 0, axis};
}
GeneratorSpec truncated(std::string name, Degree d, int height, Axis axis) {
  return {std::move(name), d, GeneratorKind::Truncated, height, axis};
}
GeneratorSpec exterior(std::string name, Degree d, Axis axis) {
  return {std::move(name), d, GeneratorKind::Exterior, 2, axis};
}
GeneratorSpec divided_power(std::string name, Degree d, Axis axis) {
  return {std::move(name), d, GeneratorKind::DividedPower, 0, axis};
}

MonomialAlgebra make_algebra(const std::vector<GeneratorSpec>& spec, Ring ring) {
  std::set<std::string> seen;
  MonomialAlgebra alg;
  for (GeneratorSpec g : spec) {
    if (!seen.insert(g.name).second) throw AlgebraError("duplicate generator name: " + g.name);
    if (g.kind == GeneratorKind::Exterior) g.height = 2;
    if (g.kind == GeneratorKind::Truncated && g.height < 2)
      throw AlgebraError("truncation height below 2 for generator " + g.name);
    alg.gens_.push_back(std::move(g));
  }
  alg.ring_ = ring;
  alg.id_ = next_algebra_id++;
  return alg;
}

int MonomialAlgebra::index_of(const std::string& name) const {
  for (int i = 0; i < generator_count(); ++i)
    if (gens_[i].name == name) return i;
  throw AlgebraError("no generator named " + name);
}

bool MonomialAlgebra::is_valid(const Monomial& m) const {
  if (m.size() != gens_.size()) return false;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) return false;
    const int cap = exponent_cap(gens_[i]);
    if (cap >= 0 && m[i] > cap) return false;
  }
  return true;
}

Degree MonomialAlgebra::degree(const Monomial& m) const {
  Degree d;
  for (size_t i = 0; i < m.size(); ++i) d = d + gens_[i].degree * m[i];
  return d;
}

std::string MonomialAlgebra::name(const Monomial& m) const {
  std::string out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += " ";
    if (gens_[i].kind == GeneratorKind::DividedPower) {
      out += "γ_" + std::to_string(m[i]) + gens_[i].name;
    } else {
      out += gens_[i].name;
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> MonomialAlgebra::basis_in_degree(Degree d, int max_exponent) const {
  std::vector<Monomial> out;
  for (const Monomial& m : basis_in_total_degree(d.total(), max_exponent))
    if (degree(m) == d) out.push_back(m);
  return out;
}

std::vector<Monomial> MonomialAlgebra::basis_in_total_degree(int t, int max_exponent) const {
  std::vector<Monomial> out;
  Monomial cur(gens_.size(), 0);
  // Depth-first over generators in order; exponents ascend, so the output is
  // lexicographic in (generator index, exponent).
  auto rec = [&](auto&& self, size_t i, int remaining) -> void {
    if (i == gens_.size()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    const int step = gens_[i].degree.total();
    int cap = exponent_cap(gens_[i]);
    if (step > 0) {
      const int by_degree = remaining / step;
      cap = cap < 0 ? by_degree : std::min(cap, by_degree);
    } else if (cap < 0) {
      if (max_exponent <= 0)
        throw AlgebraError("generator " + gens_[i].name + " has degree zero; pass an exponent cap");
      cap = max_exponent;
    }
    for (int e = 0; e <= cap; ++e) {
      cur[i] = e;
      self(self, i + 1, remaining - e * step);
    }
    cur[i] = 0;
  };
  if (t >= 0 || max_exponent > 0) rec(rec, 0, t);
  return out;
}

void MonomialAlgebra::insert(Element& e, const Monomial& m, const mpz_class& c) const {
  mpz_class v = c;
  auto it = e.terms_.find(m);
  if (it != e.terms_.end()) v += it->second;
  if (ring_.field) {
    const mpz_class p = ring_.p;
    v %= p;
    if (v < 0) v += p;
  }
  if (v == 0) {
    if (it != e.terms_.end()) e.terms_.erase(it);
  } else if (it != e.terms_.end()) {
    it->second = v;
  } else {
    e.terms_.emplace(m, v);
  }
}

void MonomialAlgebra::require_same(const Element& e) const {
  if (e.algebra_id_ != id_) throw AlgebraError("element belongs to a different algebra");
}

Element MonomialAlgebra::element(const Monomial& m, const mpz_class& coeff) const {
  if (!is_valid(m)) throw AlgebraError("monomial violates the generator heights");
  Element e;
  e.algebra_id_ = id_;
  insert(e, m, coeff);
  return e;
}

Element MonomialAlgebra::generator(const std::string& name, int exponent) const {
  Monomial m(gens_.size(), 0);
  m[index_of(name)] = exponent;
  return element(m);
}

Element MonomialAlgebra::add(const Element& a, const Element& b) const {
  require_same(a);
  require_same(b);
  Element out = a;
  for (const auto& [m, c] : b.terms_) insert(out, m, c);
  return out;
}

Element MonomialAlgebra::scale(const Element& a, const mpz_class& c) const {
  require_same(a);
  Element out;
  out.algebra_id_ = id_;
  for (const auto& [m, v] : a.terms_) insert(out, m, v * c);
  return out;
}

Element MonomialAlgebra::multiply(const Element& a, const Element& b) const {
  require_same(a);
  require_same(b);
  Element out;
  out.algebra_id_ = id_;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(gens_.size());
      mpz_class c = ca * cb;
      bool zero = false;
      for (size_t i = 0; i < m.size() && !zero; ++i) {
        m[i] = ma[i] + mb[i];
        const int cap = exponent_cap(gens_[i]);
        if (cap >= 0 && m[i] > cap) zero = true;
        if (gens_[i].kind == GeneratorKind::DividedPower) c *= binomial(m[i], ma[i]);
      }
      if (!zero) insert(out, m, c);
    }
  return out;
}

bool MonomialAlgebra::is_homogeneous(const Element& a) const {
  if (a.terms_.empty()) return true;
  const Degree d = degree(a.terms_.begin()->first);
  for (const auto& [m, c] : a.terms_)
    if (degree(m) != d) return false;
  return true;
}

std::string MonomialAlgebra::to_string(const Element& a) const {
  if (a.terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : a.terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += c.get_str() + "·";
    out += name(m);
  }
  return out;
}

}  // namespace thhku
