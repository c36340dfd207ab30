#pragma once

#include <vector>

#include "hstrace/matrix.hpp"

namespace hst {

/// Dense integer matrix used by the Smith normal form backend.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::vector<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Requires every entry of m to be a constant.
  static IntMatrix from_matrix(const Matrix& m);
  Matrix to_matrix(const RingSpec& ring) const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += c * row j
  void add_row(std::size_t i, std::size_t j, const Integer& c);
  /// col i += c * col j
  void add_col(std::size_t i, std::size_t j, const Integer& c);
  void negate_row(std::size_t i);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// M = U * D * V with U, V unimodular and D diagonal, D_11 | D_22 | ... , all
/// diagonal entries non-negative. The inverses of U and V come for free from
/// the elimination and are kept for solving.
struct SmithForm {
  IntMatrix U, D, V;
  IntMatrix U_inv, V_inv;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer int_determinant(const IntMatrix& m);

}  // namespace hst
