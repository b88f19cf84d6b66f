#include "thhku/rule_ss.hpp"

#include <algorithm>
#include <set>

namespace thhku {

namespace {

std::string power(const std::string& base, long long e) {
  if (e == 0) return "";
  return e == 1 ? base : base + "^" + std::to_string(e);
}

Scalar p_pow(long p, int e) { return Scalar(ipow(p, e)); }

}  // namespace

std::string ClassLabel::name() const {
  std::string out = power("v₁", v1) + power("u", u);
  if (su) out += "σu";
  if (gamma > 0) out += "γ_" + std::to_string(gamma) + "φu";
  if (sv) out += "σv₁";
  if (mu > 0) out += power("v₀", v0) + "μ_" + std::to_string(mu);
  return out.empty() ? "1" : out;
}

BigradedGroup RulePage::bigraded(long p, int max_degree) const {
  BigradedGroup out(p);
  for (const auto& [key, g] : groups)
    if (key.first <= max_degree && !g.value.is_zero()) out.add(key.first - key.second, key.second, g.value);
  return out;
}

RuleSS::RuleSS(long p, int reliable_degree, std::vector<BasisClass> classes, std::vector<RuleFamily> families,
               std::function<bool(const ClassLabel&)> vanishes)
    : p_(p), reliable_(reliable_degree), ring_{p, false}, classes_(std::move(classes)), vanishes_(std::move(vanishes)) {
  for (size_t i = 0; i < classes_.size(); ++i) {
    if (!by_label_.emplace(classes_[i].label, static_cast<int>(i)).second)
      throw RuleError("duplicate E^1 class " + classes_[i].label.name());
    positions_[{classes_[i].degree, classes_[i].y}].classes.push_back(static_cast<int>(i));
  }
  for (auto& [key, pos] : positions_) {
    const int k = static_cast<int>(pos.classes.size());
    pos.Z = Lattice::whole(k, ring_);
    std::vector<Vec> rel;
    for (int i = 0; i < k; ++i) {
      const int e = classes_[pos.classes[i]].order;
      if (e == 0) continue;
      Vec v(k);
      v[i] = p_pow(p_, e);
      rel.push_back(std::move(v));
    }
    pos.B = rel.empty() ? Lattice(k, ring_) : Lattice::span(rel, k, ring_);
  }
  run(families);
}

BigradedGroup RuleSS::e1() const {
  BigradedGroup out(p_);
  for (const auto& c : classes_)
    if (c.degree <= reliable_) out.add(c.x(), c.y, c.order == 0 ? GroupValue::free(1) : GroupValue::cyclic(c.order));
  return out;
}

std::string RuleSS::describe(int degree, int y, const Vec& coords) const {
  auto it = positions_.find({degree, y});
  if (it == positions_.end()) return "0";
  std::string out;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (coords[i] != 1) out += to_string(coords[i]) + "·";
    out += classes_[it->second.classes[i]].label.name();
  }
  return out.empty() ? "0" : out;
}

std::vector<Vec> RuleSS::rule_columns(const Key& src, const Key& dst, const std::vector<const RuleFamily*>& fams,
                                      bool& touched) const {
  const Position& s = positions_.at(src);
  auto dit = positions_.find(dst);
  const int kd = dit == positions_.end() ? 0 : static_cast<int>(dit->second.classes.size());
  std::vector<Vec> cols;
  for (int ci : s.classes) {
    Vec col(kd);
    for (const RuleFamily* f : fams) {
      auto image = f->apply(classes_[ci].label);
      if (!image) continue;
      touched = true;
      for (const RuleTerm& t : *image) {
        auto it = by_label_.find(t.target);
        if (it == by_label_.end()) {
          if (vanishes_ && vanishes_(t.target)) continue;
          throw RuleError(f->name + ": target " + t.target.name() + " of " + classes_[ci].label.name() +
                          " is not an E^1 class");
        }
        const BasisClass& tc = classes_[it->second];
        if (tc.degree != dst.first || tc.y != dst.second)
          throw RuleError(f->name + ": " + classes_[ci].label.name() + " -> " + t.target.name() +
                          " does not have bidegree (-r-1, r)");
        const auto& dc = dit->second.classes;
        const int local = static_cast<int>(std::find(dc.begin(), dc.end(), it->second) - dc.begin());
        col[local] += t.coeff;
      }
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

RulePage RuleSS::snapshot(int r, int shift) const {
  RulePage page;
  page.r = r;
  page.shift = shift;
  for (const auto& [key, pos] : positions_) {
    Quotient q(pos.Z, pos.B);
    if (q.size() == 0) continue;
    PositionGroup g;
    g.value = q.value();
    for (int i = 0; i < q.size(); ++i) g.basis.push_back(describe(key.first, key.second, q.representative(i)));
    page.groups.emplace(key, std::move(g));
  }
  return page;
}

void RuleSS::run(const std::vector<RuleFamily>& families) {
  std::map<int, std::vector<const RuleFamily*>> by_r;
  for (const auto& f : families) {
    if (f.r < 1) throw RuleError("rule family " + f.name + " has r < 1");
    by_r[f.r].push_back(&f);
  }
  for (const auto& [r, fams] : by_r) {
    RulePage page = snapshot(r, fams.front()->shift);
    std::map<Key, Lattice> newZ, addB;
    for (const auto& [src, pos] : positions_) {
      const Key dst{src.first - 1, src.second + r};
      bool touched = false;
      std::vector<Vec> cols = rule_columns(src, dst, fams, touched);
      if (!touched) continue;
      bool any = false;
      for (const auto& c : cols)
        for (const auto& v : c) any = any || v != 0;
      if (!any) continue;
      const Position& tgt = positions_.at(dst);
      const int kd = static_cast<int>(tgt.classes.size());
      auto apply = [&](const Vec& coords) {
        Vec w(kd);
        for (size_t i = 0; i < coords.size(); ++i)
          if (coords[i] != 0)
            for (int t = 0; t < kd; ++t) w[t] += coords[i] * cols[i][t];
        return w;
      };
      const std::string where = fams.front()->name + " at " + describe(src.first, src.second, Vec(cols.size(), 1));
      std::vector<Vec> images;
      for (int j = 0; j < pos.Z.rank(); ++j) {
        Vec w = apply(pos.Z.basis().column(j));
        for (const auto& c : w)
          if (!is_p_local(c, p_)) throw RuleError(where + ": not p-integral on the r-cycles");
        if (!tgt.Z.contains(w)) throw RuleError(where + ": image is not an r-cycle");
        images.push_back(std::move(w));
      }
      for (int j = 0; j < pos.B.rank(); ++j) {
        auto c = pos.Z.coordinates(pos.B.basis().column(j));
        if (!c) throw RuleError(where + ": boundaries outside the cycles");
        Vec w(kd);
        for (size_t i = 0; i < c->size(); ++i)
          for (int t = 0; t < kd; ++t) w[t] += (*c)[i] * images[i][t];
        if (!tgt.B.contains(w)) throw RuleError(where + ": r-boundaries not sent to r-boundaries");
      }
      const LocalMatrix W = LocalMatrix::from_columns(images, kd, ring_);
      const Lattice kernel = Lattice::whole(pos.Z.rank(), ring_).preimage(W, tgt.B);
      newZ[src] = Lattice::span(pos.Z.basis() * kernel.basis());
      const Lattice img = Lattice::span(W);
      auto [it, fresh] = addB.emplace(dst, img);
      if (!fresh) it->second = it->second + img;

      Quotient here(pos.Z, pos.B), there(tgt.Z, tgt.B);
      for (int i = 0; i < here.size(); ++i) {
        Vec w = apply(here.representative(i));
        if (there.is_zero_class(w)) continue;
        RuleDifferential d;
        d.r = r;
        d.shift = fams.front()->shift;
        d.family = fams.front()->name;
        d.degree = src.first;
        d.y = src.second;
        d.from = describe(src.first, src.second, here.representative(i));
        d.to = describe(dst.first, dst.second, w);
        int v = kInfiniteValuation;
        for (const auto& c : w)
          if (c != 0) v = std::min(v, valuation(c, p_));
        d.coeff_valuation = v;
        page.differentials.push_back(std::move(d));
      }
    }
    for (auto& [key, Z] : newZ) positions_.at(key).Z = std::move(Z);
    for (auto& [key, B] : addB) positions_.at(key).B = positions_.at(key).B + B;
    for (const auto& key : [&] {
           std::set<Key> keys;
           for (const auto& kv : newZ) keys.insert(kv.first);
           for (const auto& kv : addB) keys.insert(kv.first);
           return keys;
         }())
      if (!positions_.at(key).Z.contains(positions_.at(key).B))
        throw RuleError("d^" + std::to_string(r) + " does not square to zero at degree " +
                        std::to_string(key.first) + ", y = " + std::to_string(key.second));
    pages_.push_back(std::move(page));
  }
  einfty_ = snapshot(0, 0);
}

}  // namespace thhku
