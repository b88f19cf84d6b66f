#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace thhku {

// A finitely generated Z_(p)-module: Z_(p)^free_rank plus cyclic summands Z/p^e.
struct GroupValue {
  int free_rank = 0;
  std::vector<int> torsion;  // sorted ascending, every entry >= 1

  GroupValue() = default;
  GroupValue(int free, std::vector<int> exps);

  static GroupValue zero() { return {}; }
  static GroupValue free(int rank) { return GroupValue(rank, {}); }
  static GroupValue cyclic(int exponent);

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  // Sum of torsion exponents: log_p of the order of the torsion subgroup.
  int torsion_length() const;
  GroupValue& operator+=(const GroupValue& other);
  bool operator==(const GroupValue&) const = default;

  // "0", "Z_(3)", "Z/3 + Z/9", "Z_(3)^2 + Z/3".
  std::string to_string(long p) const;
};

GroupValue operator+(GroupValue a, const GroupValue& b);

// Degreewise record of groups; absent degrees are zero.
class GradedGroup {
 public:
  explicit GradedGroup(long p = 3) : p_(p) {}

  long prime() const { return p_; }
  void set(int degree, GroupValue g);
  void add(int degree, const GroupValue& g);
  GroupValue at(int degree) const;
  const std::map<int, GroupValue>& entries() const { return groups_; }
  bool operator==(const GradedGroup& other) const;

 private:
  long p_;
  std::map<int, GroupValue> groups_;
};

// Groups indexed by (x, y) with total degree x + y.
class BigradedGroup {
 public:
  using Key = std::pair<int, int>;

  explicit BigradedGroup(long p = 3) : p_(p) {}

  long prime() const { return p_; }
  void set(int x, int y, GroupValue g);
  void add(int x, int y, const GroupValue& g);
  GroupValue at(int x, int y) const;
  const std::map<Key, GroupValue>& entries() const { return groups_; }
  // Direct sum over each total degree; loses the filtration.
  GradedGroup total() const;
  bool operator==(const BigradedGroup& other) const;

 private:
  long p_;
  std::map<Key, GroupValue> groups_;
};

}  // namespace thhku
