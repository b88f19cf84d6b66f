#include "thhku/filtered_complex.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace thhku {

FilteredComplex::FilteredComplex(Ring ring, int deg_min, int deg_max, int n_min, int n_max)
    : ring_(ring), deg_min_(deg_min), deg_max_(deg_max), n_min_(n_min), n_max_(n_max) {
  if (n_min > n_max) throw InvalidComplexError("filtration window is empty");
  if (deg_min > deg_max + 1) throw InvalidComplexError("degree window is inverted");
}

int FilteredComplex::add_cell(int degree, std::string name, int level, int id) {
  if (degree < deg_min_ || degree > deg_max_) throw InvalidComplexError("cell degree outside the window");
  if (level < n_min_ || level > n_max_) throw InvalidComplexError("cell level outside the filtration window");
  auto& v = cells_[degree];
  if (id < 0) id = next_id_;
  next_id_ = std::max(next_id_, id + 1);
  v.push_back({std::move(name), level, id});
  return static_cast<int>(v.size()) - 1;
}

void FilteredComplex::add_boundary(int degree, int source, int target, const Scalar& coeff) {
  if (source < 0 || source >= rank(degree) || target < 0 || target >= rank(degree - 1))
    throw InvalidComplexError("boundary index out of range");
  Scalar& c = d_[{degree, source, target}];
  c = normalize(c + coeff, ring_);
  if (c == 0) d_.erase({degree, source, target});
}

int FilteredComplex::rank(int degree) const {
  auto it = cells_.find(degree);
  return it == cells_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<ChainCell>& FilteredComplex::cells(int degree) const {
  static const std::vector<ChainCell> empty;
  auto it = cells_.find(degree);
  return it == cells_.end() ? empty : it->second;
}

LocalMatrix FilteredComplex::boundary(int degree) const {
  LocalMatrix M(rank(degree - 1), rank(degree), ring_);
  auto lo = d_.lower_bound({degree, 0, 0});
  for (auto it = lo; it != d_.end() && std::get<0>(it->first) == degree; ++it)
    M.set(std::get<2>(it->first), std::get<1>(it->first), it->second);
  return M;
}

std::vector<int> FilteredComplex::at_least(int degree, int n) const {
  std::vector<int> out;
  const auto& c = cells(degree);
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (c[i].level >= n) out.push_back(i);
  return out;
}

std::vector<int> FilteredComplex::below(int degree, int n) const {
  std::vector<int> out;
  const auto& c = cells(degree);
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (c[i].level < n) out.push_back(i);
  return out;
}

void FilteredComplex::validate() const {
  for (const auto& [key, coeff] : d_) {
    auto [deg, s, t] = key;
    if (cells(deg - 1)[t].level < cells(deg)[s].level)
      throw InvalidComplexError("boundary lowers filtration at " + cells(deg)[s].name);
    if (!is_p_local(coeff, ring_.p)) throw InvalidComplexError("boundary coefficient is not p-local");
  }
  for (int d = deg_min_ + 1; d <= deg_max_; ++d) {
    if (rank(d) == 0 || rank(d - 2) == 0) continue;
    if (!(boundary(d - 1) * boundary(d)).is_zero())
      throw InvalidComplexError("boundary does not square to zero in degree " + std::to_string(d));
  }
}

FilteredComplex FilteredComplex::limit_quotient() const { return truncate(*this, n_min_, n_max_); }

int FilteredComplex::total_cells() const {
  int n = 0;
  for (const auto& [d, v] : cells_) n += static_cast<int>(v.size());
  return n;
}

std::string FilteredComplex::describe_chain(int degree, const Vec& v) const {
  std::ostringstream out;
  const auto& c = cells(degree);
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Scalar coeff = v[i];
    if (!first) out << (coeff < 0 ? " - " : " + ");
    else if (coeff < 0) out << "-";
    if (coeff < 0) coeff = -coeff;
    if (coeff != 1) out << coeff.get_str() << "*";
    out << c[i].name;
    first = false;
  }
  return first ? "0" : out.str();
}

FilteredComplex truncate(const FilteredComplex& fc, int a, int b) {
  if (a > b) throw std::invalid_argument("truncate: a > b");
  FilteredComplex out(fc.ring(), fc.deg_min(), fc.deg_max(), a, b);
  std::map<int, std::vector<int>> index;  // old index -> new index (-1 when dropped)
  for (int d = fc.deg_min(); d <= fc.deg_max(); ++d) {
    const auto& cells = fc.cells(d);
    auto& idx = index[d];
    idx.assign(cells.size(), -1);
    for (size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].level < a || cells[i].level >= b) continue;
      idx[i] = out.add_cell(d, cells[i].name, cells[i].level, cells[i].id);
    }
  }
  for (int d = fc.deg_min() + 1; d <= fc.deg_max(); ++d) {
    LocalMatrix M = fc.boundary(d);
    for (int j = 0; j < M.cols(); ++j) {
      if (index[d][j] < 0) continue;
      for (int i = 0; i < M.rows(); ++i) {
        if (M.at(i, j) == 0 || index[d - 1][i] < 0) continue;
        out.add_boundary(d, index[d][j], index[d - 1][i], M.at(i, j));
      }
    }
  }
  return out;
}

GatherMap::GatherMap() = default;

GatherMap::GatherMap(int first, std::vector<int> table, int slope_below, int slope_above)
    : first_(first), table_(std::move(table)), slope_below_(slope_below), slope_above_(slope_above) {
  if (table_.empty()) throw std::invalid_argument("GatherMap: empty table");
  if (slope_below_ < 1 || slope_above_ < 1) throw std::invalid_argument("GatherMap: slopes must be >= 1");
  for (size_t i = 1; i < table_.size(); ++i)
    if (table_[i] <= table_[i - 1]) throw std::invalid_argument("GatherMap: table is not strictly increasing");
}

GatherMap GatherMap::from_function(int lo, int hi, int (*f)(int)) {
  std::vector<int> t;
  for (int n = lo; n <= hi; ++n) t.push_back(f(n));
  return GatherMap(lo, t);
}

int GatherMap::operator()(int n) const {
  int last = first_ + static_cast<int>(table_.size()) - 1;
  if (n < first_) return table_.front() - slope_below_ * (first_ - n);
  if (n > last) return table_.back() + slope_above_ * (n - last);
  return table_[n - first_];
}

int GatherMap::floor_inverse(int level) const {
  int last = first_ + static_cast<int>(table_.size()) - 1;
  if (level < table_.front()) {
    int gap = table_.front() - level;
    return first_ - (gap + slope_below_ - 1) / slope_below_;
  }
  if (level >= table_.back()) return last + (level - table_.back()) / slope_above_;
  auto it = std::upper_bound(table_.begin(), table_.end(), level);
  return first_ + static_cast<int>(it - table_.begin()) - 1;
}

std::string GatherMap::to_string() const {
  std::ostringstream out;
  out << "phi(" << first_ << "..): [";
  for (size_t i = 0; i < table_.size(); ++i) out << (i ? "," : "") << table_[i];
  out << "] slopes " << slope_below_ << "/" << slope_above_;
  return out.str();
}

FilteredComplex gather(const FilteredComplex& fc, const GatherMap& phi) {
  const int lo = phi.floor_inverse(fc.n_min());
  const int hi = phi.ceil_inverse(fc.n_max());
  FilteredComplex out(fc.ring(), fc.deg_min(), fc.deg_max(), lo, hi);
  for (int d = fc.deg_min(); d <= fc.deg_max(); ++d)
    for (const auto& c : fc.cells(d)) {
      int level = c.level >= fc.n_max() ? hi : phi.floor_inverse(c.level);
      out.add_cell(d, c.name, std::clamp(level, lo, hi), c.id);
    }
  for (int d = fc.deg_min() + 1; d <= fc.deg_max(); ++d) {
    LocalMatrix M = fc.boundary(d);
    for (int j = 0; j < M.cols(); ++j)
      for (int i = 0; i < M.rows(); ++i)
        if (M.at(i, j) != 0) out.add_boundary(d, j, i, M.at(i, j));
  }
  return out;
}

namespace {

Scalar random_unit(std::mt19937_64& rng, long p) {
  std::uniform_int_distribution<long> dist(1, p - 1);
  Scalar u(dist(rng));
  if (std::uniform_int_distribution<int>(0, 1)(rng)) u = -u;
  return u;
}

}  // namespace

FilteredComplex random_filtered_complex(std::uint64_t seed, const RandomComplexParams& params) {
  if (params.max_degrees < 1 || params.max_steps < 1 || params.max_rank < 1)
    throw std::invalid_argument("random_filtered_complex: parameters must be positive");
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const Ring ring = params.ring;
  const int degrees = uniform(1, params.max_degrees);
  const int steps = uniform(1, params.max_steps);

  FilteredComplex fc(ring, 0, degrees - 1, 0, steps);
  for (int d = 0; d < degrees; ++d) {
    int r = uniform(0, params.max_rank);
    for (int i = 0; i < r; ++i) {
      // Occasionally place a cell in the limit F_{n_max}.
      int level = uniform(0, 9) == 0 ? steps : uniform(0, steps - 1);
      fc.add_cell(d, "e" + std::to_string(d) + "_" + std::to_string(i), level);
    }
  }

  // Split complex D: disjoint pairs source -> p^k * unit * target.
  std::map<int, std::vector<int>> role;  // 0 free, 1 source, 2 target
  for (int d = 0; d < degrees; ++d) role[d].assign(fc.rank(d), 0);
  std::map<int, LocalMatrix> D;
  for (int d = degrees - 1; d >= 1; --d) {
    D[d] = LocalMatrix(fc.rank(d - 1), fc.rank(d), ring);
    for (int j = 0; j < fc.rank(d); ++j) {
      if (role[d][j] != 0 || uniform(0, 2) == 0) continue;
      std::vector<int> options;
      for (int i = 0; i < fc.rank(d - 1); ++i)
        if (role[d - 1][i] == 0 && fc.cells(d - 1)[i].level >= fc.cells(d)[j].level) options.push_back(i);
      if (options.empty()) continue;
      int i = options[uniform(0, static_cast<int>(options.size()) - 1)];
      int k = ring.field ? 0 : uniform(0, 2);
      D[d].set(i, j, random_unit(rng, ring.p) * Scalar(ipow(ring.p, k)));
      role[d][j] = 1;
      role[d - 1][i] = 2;
    }
  }

  // Filtration-preserving automorphisms as products of elementary matrices.
  std::map<int, LocalMatrix> G, Ginv;
  for (int d = 0; d < degrees; ++d) {
    int n = fc.rank(d);
    G[d] = LocalMatrix::identity(n, ring);
    Ginv[d] = LocalMatrix::identity(n, ring);
    const auto& cells = fc.cells(d);
    int ops = n * n;
    for (int t = 0; t < ops; ++t) {
      int i = uniform(0, std::max(0, n - 1)), j = uniform(0, std::max(0, n - 1));
      if (n == 0 || i == j || cells[i].level < cells[j].level) continue;
      Scalar c(uniform(-2, 2));
      if (c == 0) continue;
      G[d].add_col_multiple(j, i, c);    // G <- G (I + c e_i e_j^T)
      Ginv[d].add_row_multiple(i, j, -c);  // Ginv <- (I - c e_i e_j^T) Ginv
    }
  }

  for (int d = 1; d < degrees; ++d) {
    if (fc.rank(d) == 0 || fc.rank(d - 1) == 0) continue;
    LocalMatrix M = G[d - 1] * D[d] * Ginv[d];
    for (int j = 0; j < M.cols(); ++j)
      for (int i = 0; i < M.rows(); ++i)
        if (M.at(i, j) != 0) fc.add_boundary(d, j, i, M.at(i, j));
  }
  fc.validate();
  return fc;
}

GatherMap random_gather_map(std::uint64_t seed, const FilteredComplex& fc) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<int> table;
  int v = fc.n_min();
  for (int n = fc.n_min(); v < fc.n_max(); ++n) {
    table.push_back(v);
    v += std::uniform_int_distribution<int>(1, 3)(rng);
  }
  table.push_back(v);
  return GatherMap(fc.n_min(), table);
}

CounterexampleFixture counterexample_fixture() {
  CounterexampleFixture f;
  f.complex = FilteredComplex(Ring{3, false}, 0, 1, 0, 3);
  int y = f.complex.add_cell(0, "y", 2);
  int a = f.complex.add_cell(1, "a", 1);
  f.complex.add_cell(1, "b", 0);
  f.complex.add_boundary(1, a, y, 1);
  f.complex.validate();
  f.phi = GatherMap(0, {0, 2, 3});
  f.names = {{"y", "ȳ"}, {"a", "x̂′ = x̄′"}, {"b", "x̂−x̂′ = x̄−x̄′"}, {"a+b", "x̄"}};
  return f;
}

}  // namespace thhku
