#include "thhku/local_matrix.hpp"

#include <sstream>

namespace thhku {

LocalMatrix::LocalMatrix(int rows, int cols, Ring ring)
    : rows_(rows), cols_(cols), ring_(ring), data_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("LocalMatrix: negative dimension");
}

LocalMatrix LocalMatrix::identity(int n, Ring ring) {
  LocalMatrix m(n, n, ring);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

LocalMatrix LocalMatrix::from_rows(const std::vector<std::vector<long long>>& rows, Ring ring) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  LocalMatrix m(r, c, ring);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m.set(i, j, Scalar(static_cast<long>(rows[i][j])));
  }
  return m;
}

LocalMatrix LocalMatrix::from_columns(const std::vector<Vec>& cols, int rows, Ring ring) {
  LocalMatrix m(rows, static_cast<int>(cols.size()), ring);
  for (int j = 0; j < m.cols_; ++j) {
    if (static_cast<int>(cols[j].size()) != rows) throw std::invalid_argument("from_columns: bad length");
    for (int i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

void LocalMatrix::set(int i, int j, const Scalar& v) {
  data_[static_cast<size_t>(i) * cols_ + j] = ring_.field ? normalize(v, ring_) : v;
}

void LocalMatrix::add_to(int i, int j, const Scalar& v) {
  Scalar& e = data_[static_cast<size_t>(i) * cols_ + j];
  e += v;
  if (ring_.field) e = normalize(e, ring_);
}

Vec LocalMatrix::column(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

LocalMatrix LocalMatrix::select_columns(const std::vector<int>& idx) const {
  LocalMatrix m(rows_, static_cast<int>(idx.size()), ring_);
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) m.data_[i * m.cols_ + j] = at(i, idx[j]);
  return m;
}

LocalMatrix LocalMatrix::select_rows(const std::vector<int>& idx) const {
  LocalMatrix m(static_cast<int>(idx.size()), cols_, ring_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < cols_; ++j) m.data_[i * cols_ + j] = at(idx[i], j);
  return m;
}

LocalMatrix LocalMatrix::transpose() const {
  LocalMatrix m(cols_, rows_, ring_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.data_[static_cast<size_t>(j) * rows_ + i] = at(i, j);
  return m;
}

Vec LocalMatrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
  Vec out(rows_);
  for (int i = 0; i < rows_; ++i) {
    Scalar s = 0;
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) s += at(i, j) * v[j];
    out[i] = ring_.field ? normalize(s, ring_) : s;
  }
  return out;
}

bool LocalMatrix::is_zero() const {
  for (const auto& e : data_)
    if (e != 0) return false;
  return true;
}

void LocalMatrix::require_local() const {
  if (ring_.field) return;
  for (const auto& e : data_)
    if (!is_p_local(e, ring_.p))
      throw NotLocalError("entry " + e.get_str() + " has denominator divisible by " + std::to_string(ring_.p));
}

std::string LocalMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

LocalMatrix operator*(const LocalMatrix& a, const LocalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  LocalMatrix m(a.rows_, b.cols_, a.ring_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Scalar& y = b.at(k, j);
        if (y != 0) m.data_[static_cast<size_t>(i) * m.cols_ + j] += x * y;
      }
    }
  if (m.ring_.field)
    for (auto& e : m.data_) e = normalize(e, m.ring_);
  return m;
}

LocalMatrix operator-(const LocalMatrix& a, const LocalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape");
  LocalMatrix m = a;
  for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  if (m.ring_.field)
    for (auto& e : m.data_) e = normalize(e, m.ring_);
  return m;
}

bool operator==(const LocalMatrix& a, const LocalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void LocalMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
}

void LocalMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(data_[i * cols_ + a], data_[i * cols_ + b]);
}

void LocalMatrix::add_row_multiple(int target, int source, const Scalar& f) {
  if (f == 0) return;
  for (int j = 0; j < cols_; ++j) {
    const Scalar& s = data_[source * cols_ + j];
    if (s == 0) continue;
    Scalar& t = data_[target * cols_ + j];
    t += f * s;
    if (ring_.field) t = normalize(t, ring_);
  }
}

void LocalMatrix::add_col_multiple(int target, int source, const Scalar& f) {
  if (f == 0) return;
  for (int i = 0; i < rows_; ++i) {
    const Scalar& s = data_[i * cols_ + source];
    if (s == 0) continue;
    Scalar& t = data_[i * cols_ + target];
    t += f * s;
    if (ring_.field) t = normalize(t, ring_);
  }
}

void LocalMatrix::scale_row(int r, const Scalar& f) {
  for (int j = 0; j < cols_; ++j) {
    Scalar& t = data_[r * cols_ + j];
    if (t == 0) continue;
    t *= f;
    if (ring_.field) t = normalize(t, ring_);
  }
}

void LocalMatrix::scale_col(int c, const Scalar& f) {
  for (int i = 0; i < rows_; ++i) {
    Scalar& t = data_[i * cols_ + c];
    if (t == 0) continue;
    t *= f;
    if (ring_.field) t = normalize(t, ring_);
  }
}

LocalMatrix hconcat(const LocalMatrix& a, const LocalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
  LocalMatrix m(a.rows(), a.cols() + b.cols(), a.ring());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols(); ++j) m.set(i, a.cols() + j, b.at(i, j));
  }
  return m;
}

int SmithForm::unit_rank() const {
  int n = 0;
  for (int e : exponents) n += e == 0;
  return n;
}

std::vector<int> SmithForm::torsion_exponents() const {
  std::vector<int> out;
  for (int e : exponents)
    if (e > 0) out.push_back(e);
  return out;
}

GroupValue SmithForm::cokernel() const { return GroupValue(rows - rank, torsion_exponents()); }

SmithForm smith_normal_form(const LocalMatrix& M) {
  M.require_local();
  const Ring ring = M.ring();
  const int m = M.rows(), n = M.cols();
  SmithForm out;
  out.rows = m;
  out.cols = n;
  LocalMatrix A = M;
  out.U = LocalMatrix::identity(m, ring);
  out.U_inv = LocalMatrix::identity(m, ring);
  out.V = LocalMatrix::identity(n, ring);

  for (int k = 0; k < std::min(m, n); ++k) {
    int best = kInfiniteValuation, bi = -1, bj = -1;
    for (int i = k; i < m && best > 0; ++i)
      for (int j = k; j < n; ++j) {
        const Scalar& e = A.at(i, j);
        if (e == 0) continue;
        int v = valuation(e, ring);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (bi < 0) break;
    A.swap_rows(k, bi);
    out.U.swap_rows(k, bi);
    out.U_inv.swap_cols(k, bi);
    A.swap_cols(k, bj);
    out.V.swap_cols(k, bj);

    const Scalar pivot = A.at(k, k);
    const Scalar pivot_inv = unit_inverse(pivot, ring);
    for (int i = k + 1; i < m; ++i) {
      if (A.at(i, k) == 0) continue;
      Scalar f = A.at(i, k) * pivot_inv;
      if (ring.field) f = normalize(f, ring);
      A.add_row_multiple(i, k, -f);
      out.U.add_row_multiple(i, k, -f);
      out.U_inv.add_col_multiple(k, i, f);
    }
    for (int j = k + 1; j < n; ++j) {
      if (A.at(k, j) == 0) continue;
      Scalar g = A.at(k, j) * pivot_inv;
      if (ring.field) g = normalize(g, ring);
      A.set(k, j, 0);
      out.V.add_col_multiple(j, k, -g);
    }
    // Make the pivot exactly p^best.
    Scalar w = ring.field ? pivot : pivot / Scalar(ipow(ring.p, best));
    Scalar w_inv = unit_inverse(w, ring);
    A.set(k, k, ring.field ? Scalar(1) : Scalar(ipow(ring.p, best)));
    out.U.scale_row(k, w_inv);
    out.U_inv.scale_col(k, w);
    out.exponents.push_back(best);
    out.rank = k + 1;
  }
  return out;
}

LocalMatrix kernel_basis(const LocalMatrix& M, const SmithForm& snf) {
  std::vector<int> idx;
  for (int j = snf.rank; j < M.cols(); ++j) idx.push_back(j);
  return snf.V.select_columns(idx);
}

LocalMatrix kernel_basis(const LocalMatrix& M) { return kernel_basis(M, smith_normal_form(M)); }

std::optional<Vec> solve(const SmithForm& snf, const Vec& b) {
  if (static_cast<int>(b.size()) != snf.rows) throw std::invalid_argument("solve: size mismatch");
  const Ring ring = snf.U.ring();
  Vec y = snf.U.apply(b);
  Vec z(snf.cols);
  for (int k = 0; k < snf.rows; ++k) {
    if (k < snf.rank) {
      if (ring.field) {
        z[k] = y[k];
      } else {
        Scalar q = y[k] / Scalar(ipow(ring.p, snf.exponents[k]));
        if (!is_p_local(q, ring.p)) return std::nullopt;
        z[k] = q;
      }
    } else if (y[k] != 0) {
      return std::nullopt;
    }
  }
  return snf.V.apply(z);
}

std::optional<Vec> solve(const LocalMatrix& A, const Vec& b) { return solve(smith_normal_form(A), b); }

GroupValue homology_at(const LocalMatrix& d_in, const LocalMatrix& d_out) {
  if (d_in.rows() != d_out.cols()) throw std::invalid_argument("homology_at: incompatible shapes");
  if (!(d_out * d_in).is_zero()) throw CompositionError("homology_at: d_out * d_in is nonzero");
  LocalMatrix K = kernel_basis(d_out);
  SmithForm ksnf = smith_normal_form(K);
  LocalMatrix X(K.cols(), d_in.cols(), d_in.ring());
  for (int j = 0; j < d_in.cols(); ++j) {
    auto x = solve(ksnf, d_in.column(j));
    if (!x) throw std::logic_error("homology_at: boundary outside kernel");
    for (int i = 0; i < K.cols(); ++i) X.set(i, j, (*x)[i]);
  }
  return smith_normal_form(X).cokernel();
}

}  // namespace thhku
