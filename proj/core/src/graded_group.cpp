#include "thhku/graded_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace thhku {

GroupValue::GroupValue(int free, std::vector<int> exps) : free_rank(free), torsion(std::move(exps)) {
  if (free_rank < 0) throw std::invalid_argument("GroupValue: negative free rank");
  std::erase_if(torsion, [](int e) { return e == 0; });
  for (int e : torsion)
    if (e < 0) throw std::invalid_argument("GroupValue: negative torsion exponent");
  std::sort(torsion.begin(), torsion.end());
}

GroupValue GroupValue::cyclic(int exponent) { return GroupValue(0, {exponent}); }

int GroupValue::torsion_length() const { return std::accumulate(torsion.begin(), torsion.end(), 0); }

GroupValue& GroupValue::operator+=(const GroupValue& other) {
  free_rank += other.free_rank;
  torsion.insert(torsion.end(), other.torsion.begin(), other.torsion.end());
  std::sort(torsion.begin(), torsion.end());
  return *this;
}

GroupValue operator+(GroupValue a, const GroupValue& b) { return a += b; }

std::string GroupValue::to_string(long p) const {
  if (is_zero()) return "0";
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += " + ";
    out += s;
  };
  if (free_rank > 0) {
    std::string z = "Z_(" + std::to_string(p) + ")";
    append(free_rank == 1 ? z : z + "^" + std::to_string(free_rank));
  }
  for (int e : torsion) {
    long long order = 1;
    for (int i = 0; i < e; ++i) order *= p;
    append("Z/" + std::to_string(order));
  }
  return out;
}

void GradedGroup::set(int degree, GroupValue g) {
  if (g.is_zero())
    groups_.erase(degree);
  else
    groups_[degree] = std::move(g);
}

void GradedGroup::add(int degree, const GroupValue& g) {
  if (g.is_zero()) return;
  groups_[degree] += g;
}

GroupValue GradedGroup::at(int degree) const {
  auto it = groups_.find(degree);
  return it == groups_.end() ? GroupValue{} : it->second;
}

bool GradedGroup::operator==(const GradedGroup& other) const {
  return p_ == other.p_ && groups_ == other.groups_;
}

void BigradedGroup::set(int x, int y, GroupValue g) {
  if (g.is_zero())
    groups_.erase({x, y});
  else
    groups_[{x, y}] = std::move(g);
}

void BigradedGroup::add(int x, int y, const GroupValue& g) {
  if (g.is_zero()) return;
  groups_[{x, y}] += g;
}

GroupValue BigradedGroup::at(int x, int y) const {
  auto it = groups_.find({x, y});
  return it == groups_.end() ? GroupValue{} : it->second;
}

GradedGroup BigradedGroup::total() const {
  GradedGroup out(p_);
  for (const auto& [key, g] : groups_) out.add(key.first + key.second, g);
  return out;
}

bool BigradedGroup::operator==(const BigradedGroup& other) const {
  return p_ == other.p_ && groups_ == other.groups_;
}

}  // namespace thhku
