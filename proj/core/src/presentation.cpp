#include "thhku/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace thhku {

int Presentation::index_of(const std::string& name) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return static_cast<int>(i);
  return -1;
}

int Presentation::add_generator(std::string name, int degree, int weight) {
  if (index_of(name) >= 0) throw PresentationError("duplicate generator " + name);
  generators.push_back({std::move(name), degree, weight});
  return static_cast<int>(generators.size()) - 1;
}

int Presentation::term_degree(const PresTerm& t) const {
  return generators.at(t.generator).degree + t.power * variable_degree;
}

std::string Presentation::term_string(const PresTerm& t) const {
  std::string out;
  if (t.coeff != 1) out += to_string(t.coeff) + "·";
  if (t.power > 0) {
    out += variable;
    if (t.power > 1) out += "^" + std::to_string(t.power);
    out += "·";
  }
  return out + generators.at(t.generator).name;
}

std::string Presentation::side_string(const std::vector<PresTerm>& side) const {
  if (side.empty()) return "0";
  std::string out;
  for (const auto& t : side) {
    if (!out.empty()) out += " + ";
    out += term_string(t);
  }
  return out;
}

void Presentation::add_relation(Relation rel) {
  if (rel.lhs.empty()) throw PresentationError("relation with empty left side");
  const int d = term_degree(rel.lhs.front());
  for (const auto* side : {&rel.lhs, &rel.rhs})
    for (const auto& t : *side)
      if (term_degree(t) != d)
        throw PresentationError("inhomogeneous relation " + side_string(rel.lhs) + " = " + side_string(rel.rhs));
  relations.push_back(std::move(rel));
}

Presentation base_change(const Presentation& pres, std::string variable, int variable_degree, int factor,
                         int truncation) {
  if (pres.variable_degree != factor * variable_degree)
    throw PresentationError("base change does not preserve degrees");
  Presentation out = pres;
  out.variable = std::move(variable);
  out.variable_degree = variable_degree;
  out.truncation = truncation;
  for (auto& rel : out.relations)
    for (auto* side : {&rel.lhs, &rel.rhs})
      for (auto& t : *side) t.power *= factor;
  return out;
}

PresentedModule::PresentedModule(Presentation pres) : pres_(std::move(pres)) {
  for (size_t i = 0; i < pres_.relations.size(); ++i)
    rel_by_degree_[pres_.term_degree(pres_.relations[i].lhs.front())].push_back(static_cast<int>(i));
}

const PresentedModule::Piece& PresentedModule::piece(int degree) const {
  if (degree > pres_.bound)
    throw PresentationError("degree " + std::to_string(degree) + " beyond the instantiated bound " +
                            std::to_string(pres_.bound));
  if (auto it = cache_.find(degree); it != cache_.end()) return *it->second;
  auto pc = std::make_unique<Piece>();
  const int vd = pres_.variable_degree;
  for (size_t g = 0; g < pres_.generators.size(); ++g) {
    const int gap = degree - pres_.generators[g].degree;
    if (gap < 0 || gap % vd != 0) continue;
    const int a = gap / vd;
    if (pres_.truncation > 0 && a >= pres_.truncation) continue;
    pc->index[{a, static_cast<int>(g)}] = static_cast<int>(pc->basis.size());
    pc->basis.emplace_back(a, static_cast<int>(g));
  }
  const int n = static_cast<int>(pc->basis.size());
  const Ring ring{pres_.p, false};
  std::vector<Vec> rels;
  for (const auto& [e, ids] : rel_by_degree_) {
    if (e > degree) break;
    if ((degree - e) % vd != 0) continue;
    const int shift = (degree - e) / vd;
    for (int id : ids) {
      const Relation& rel = pres_.relations[id];
      Vec v(n);
      auto put = [&](const PresTerm& t, int sign) {
        auto it = pc->index.find({t.power + shift, t.generator});
        if (it != pc->index.end()) v[it->second] += sign * t.coeff;
      };
      for (const auto& t : rel.lhs) put(t, 1);
      for (const auto& t : rel.rhs) put(t, -1);
      bool nonzero = false;
      for (const auto& c : v) nonzero = nonzero || c != 0;
      if (nonzero) rels.push_back(std::move(v));
    }
  }
  pc->relations = rels.empty() ? Lattice(n, ring) : Lattice::span(rels, n, ring);
  pc->module = Quotient(Lattice::whole(n, ring), pc->relations);
  pc->group = pc->module.value();
  return *cache_.emplace(degree, std::move(pc)).first->second;
}

GradedGroup PresentedModule::groups(int max_degree) const {
  GradedGroup out(pres_.p);
  for (int d = 0; d <= max_degree; ++d) out.set(d, group(d));
  return out;
}

Vec PresentedModule::vector(int degree, const std::vector<PresTerm>& terms) const {
  const Piece& pc = piece(degree);
  Vec v(pc.basis.size());
  for (const auto& t : terms) {
    if (pres_.term_degree(t) != degree) throw PresentationError("term of the wrong degree");
    auto it = pc.index.find({t.power, t.generator});
    if (it != pc.index.end()) v[it->second] += t.coeff;  // truncated powers vanish
  }
  return v;
}

Vec PresentedModule::basis_vector(int degree, int power, int generator) const {
  return vector(degree, {PresTerm{1, power, generator}});
}

bool PresentedModule::is_zero(int degree, const Vec& x) const { return piece(degree).relations.contains(x); }

LocalMatrix PresentedModule::multiply_by_variable(int degree, int k) const {
  const Piece& src = piece(degree);
  const Piece& dst = piece(degree + k * pres_.variable_degree);
  LocalMatrix M(static_cast<int>(dst.basis.size()), static_cast<int>(src.basis.size()), ring());
  for (size_t j = 0; j < src.basis.size(); ++j) {
    auto it = dst.index.find({src.basis[j].first + k, src.basis[j].second});
    if (it != dst.index.end()) M.set(it->second, static_cast<int>(j), 1);
  }
  return M;
}

Lattice PresentedModule::p_torsion(int degree) const {
  const Piece& pc = piece(degree);
  int K = 0;
  for (int e : pc.group.torsion) K = std::max(K, e);
  const int n = static_cast<int>(pc.basis.size());
  LocalMatrix scale = LocalMatrix::identity(n, ring());
  for (int i = 0; i < n; ++i) scale.set(i, i, Scalar(ipow(pres_.p, K)));
  return Lattice::whole(n, ring()).preimage(scale, pc.relations);
}

Lattice PresentedModule::variable_kernel(int degree, int k) const {
  const Piece& pc = piece(degree);
  const Piece& dst = piece(degree + k * pres_.variable_degree);
  return Lattice::whole(static_cast<int>(pc.basis.size()), ring())
      .preimage(multiply_by_variable(degree, k), dst.relations);
}

Lattice PresentedModule::filtration(int degree, int f) const {
  const Piece& pc = piece(degree);
  const int n = static_cast<int>(pc.basis.size());
  std::vector<Vec> gens;
  for (int i = 0; i < n; ++i) {
    if (pc.basis[i].first + pres_.generators[pc.basis[i].second].weight < f) continue;
    Vec v(n);
    v[i] = 1;
    gens.push_back(std::move(v));
  }
  return Lattice::span(gens, n, ring()) + pc.relations;
}

std::vector<GroupValue> PresentedModule::associated_graded(int degree, int step) const {
  if (step < 1) throw std::invalid_argument("filtration step must be positive");
  const Piece& pc = piece(degree);
  const Ring ring{pres_.p, false};
  int top = -1;
  std::map<int, std::vector<int>> rows;  // block -> basis indices
  for (size_t i = 0; i < pc.basis.size(); ++i) {
    const int b = (pc.basis[i].first + pres_.generators[pc.basis[i].second].weight) / step;
    rows[b].push_back(static_cast<int>(i));
    top = std::max(top, b);
  }
  // gr_f = Z^{block f} / (relations supported on blocks >= f, projected to
  // block f). Column echelon on each block leaves exactly those relations.
  std::vector<Vec> live;
  for (int j = 0; j < pc.relations.rank(); ++j) live.push_back(pc.relations.basis().column(j));
  std::vector<GroupValue> out(static_cast<size_t>(top + 1));
  for (int f = 0; f <= top; ++f) {
    const std::vector<int>& block = rows[f];
    if (block.empty()) continue;
    std::vector<Vec> proj;
    for (const Vec& c : live) {
      Vec v(block.size());
      for (size_t i = 0; i < block.size(); ++i) v[i] = c[block[i]];
      proj.push_back(std::move(v));
    }
    out[f] = proj.empty() ? GroupValue::free(static_cast<int>(block.size()))
                          : smith_normal_form(LocalMatrix::from_columns(proj, static_cast<int>(block.size()), ring))
                                .cokernel();
    std::vector<bool> pivot(live.size(), false);
    for (int r : block) {
      int best = -1, best_v = kInfiniteValuation;
      for (size_t j = 0; j < live.size(); ++j)
        if (!pivot[j] && live[j][r] != 0 && valuation(live[j][r], pres_.p) < best_v) {
          best = static_cast<int>(j);
          best_v = valuation(live[j][r], pres_.p);
        }
      if (best < 0) continue;
      pivot[best] = true;
      for (size_t j = 0; j < live.size(); ++j) {
        if (pivot[j] || live[j][r] == 0) continue;
        const Scalar factor = live[j][r] / live[best][r];
        for (size_t i = 0; i < live[j].size(); ++i) live[j][i] -= factor * live[best][i];
      }
    }
    std::vector<Vec> rest;
    for (size_t j = 0; j < live.size(); ++j)
      if (!pivot[j]) rest.push_back(std::move(live[j]));
    live = std::move(rest);
  }
  return out;
}

GroupValue PresentedModule::graded_piece(int degree, int f, int step) const {
  const auto gr = associated_graded(degree, step);
  return f >= 0 && f < static_cast<int>(gr.size()) ? gr[f] : GroupValue{};
}

std::string PresentedModule::describe(int degree, const Vec& x) const {
  const Piece& pc = piece(degree);
  std::vector<PresTerm> terms;
  for (size_t i = 0; i < pc.basis.size(); ++i)
    if (x[i] != 0) terms.push_back({x[i], pc.basis[i].first, pc.basis[i].second});
  return pres_.side_string(terms);
}

ModuleMap::ModuleMap(const PresentedModule& source, const PresentedModule& target,
                     std::vector<std::vector<PresTerm>> generator_images)
    : src_(source), tgt_(target), images_(std::move(generator_images)) {
  const auto& sp = src_.presentation();
  if (images_.size() != sp.generators.size()) throw PresentationError("module map needs one image per generator");
  for (size_t g = 0; g < images_.size(); ++g)
    for (const auto& t : images_[g])
      if (tgt_.presentation().term_degree(t) != sp.generators[g].degree)
        throw PresentationError("module map changes the degree of " + sp.generators[g].name);
  if (sp.variable_degree != tgt_.presentation().variable_degree)
    throw PresentationError("module map between different variables");
}

LocalMatrix ModuleMap::matrix(int degree) const {
  const auto& sb = src_.piece(degree);
  const auto& tb = tgt_.piece(degree);
  LocalMatrix M(static_cast<int>(tb.basis.size()), static_cast<int>(sb.basis.size()), src_.ring());
  for (size_t j = 0; j < sb.basis.size(); ++j) {
    const auto [a, g] = sb.basis[j];
    for (const auto& t : images_[g]) {
      auto it = tb.index.find({t.power + a, t.generator});
      if (it != tb.index.end()) M.add_to(it->second, static_cast<int>(j), t.coeff);
    }
  }
  return M;
}

bool ModuleMap::well_defined(int degree) const {
  const LocalMatrix f = matrix(degree);
  const Lattice& rels = src_.piece(degree).relations;
  const Lattice& target = tgt_.piece(degree).relations;
  for (int j = 0; j < rels.rank(); ++j)
    if (!target.contains(f.apply(rels.basis().column(j)))) return false;
  return true;
}

bool ModuleMap::injective(int degree) const {
  const auto& sb = src_.piece(degree);
  Lattice kernel =
      Lattice::whole(static_cast<int>(sb.basis.size()), src_.ring()).preimage(matrix(degree), tgt_.piece(degree).relations);
  return sb.relations.contains(kernel);
}

Lattice ModuleMap::image(int degree) const {
  return Lattice::span(matrix(degree)) + tgt_.piece(degree).relations;
}

GroupValue ModuleMap::cokernel(int degree) const {
  const auto& tb = tgt_.piece(degree);
  return Quotient(Lattice::whole(static_cast<int>(tb.basis.size()), tgt_.ring()), image(degree)).value();
}

}  // namespace thhku
