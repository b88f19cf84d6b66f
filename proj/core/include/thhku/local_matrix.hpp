#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thhku/graded_group.hpp"
#include "thhku/plocal.hpp"

namespace thhku {

using Vec = std::vector<Scalar>;

struct NotLocalError : std::domain_error {
  using std::domain_error::domain_error;
};

// Dense matrix over Z_(p) or F_p. Entries are kept normalized for the ring.
class LocalMatrix {
 public:
  LocalMatrix() = default;
  LocalMatrix(int rows, int cols, Ring ring);

  static LocalMatrix identity(int n, Ring ring);
  static LocalMatrix from_rows(const std::vector<std::vector<long long>>& rows, Ring ring);
  static LocalMatrix from_columns(const std::vector<Vec>& cols, int rows, Ring ring);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Ring& ring() const { return ring_; }

  const Scalar& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, const Scalar& v);
  void add_to(int i, int j, const Scalar& v);

  Vec column(int j) const;
  LocalMatrix select_columns(const std::vector<int>& idx) const;
  LocalMatrix select_rows(const std::vector<int>& idx) const;
  LocalMatrix transpose() const;
  Vec apply(const Vec& v) const;

  bool is_zero() const;
  // Throws NotLocalError when some denominator is divisible by p.
  void require_local() const;
  std::string to_string() const;

  friend LocalMatrix operator*(const LocalMatrix& a, const LocalMatrix& b);
  friend LocalMatrix operator-(const LocalMatrix& a, const LocalMatrix& b);
  friend bool operator==(const LocalMatrix& a, const LocalMatrix& b);

  // Elementary operations used by the normal-form routines.
  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void add_row_multiple(int target, int source, const Scalar& f);  // row_t += f row_s
  void add_col_multiple(int target, int source, const Scalar& f);  // col_t += f col_s
  void scale_row(int r, const Scalar& f);
  void scale_col(int c, const Scalar& f);

 private:
  int rows_ = 0;
  int cols_ = 0;
  Ring ring_{};
  std::vector<Scalar> data_;
};

LocalMatrix hconcat(const LocalMatrix& a, const LocalMatrix& b);

// U * M * V = D with D diagonal, D[k][k] = p^exponents[k] for k < rank, and
// zero elsewhere. U, V invertible over the ring.
struct SmithForm {
  int rows = 0;
  int cols = 0;
  int rank = 0;
  std::vector<int> exponents;
  LocalMatrix U, U_inv, V;

  int unit_rank() const;
  std::vector<int> torsion_exponents() const;
  // Z_(p)^rows / image(M).
  GroupValue cokernel() const;
  int nullity() const { return cols - rank; }
};

// Pivots are taken at minimal valuation, so the invariant factors come out as
// pure p-powers in ascending order.
SmithForm smith_normal_form(const LocalMatrix& M);

// Columns form a basis of the kernel; the kernel is a direct summand.
LocalMatrix kernel_basis(const LocalMatrix& M);
LocalMatrix kernel_basis(const LocalMatrix& M, const SmithForm& snf);

// Some x with A x = b, free coordinates set to zero; nullopt when no
// ring-valued solution exists.
std::optional<Vec> solve(const LocalMatrix& A, const Vec& b);
std::optional<Vec> solve(const SmithForm& snf, const Vec& b);

struct CompositionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ker(d_out) / im(d_in) for d_in: C_{k+1} -> C_k and d_out: C_k -> C_{k-1}.
GroupValue homology_at(const LocalMatrix& d_in, const LocalMatrix& d_out);

}  // namespace thhku
