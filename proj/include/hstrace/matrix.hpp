#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hstrace/ring.hpp"

namespace hst {

/// Dense row-major matrix of ring elements over one RingSpec.
class Matrix {
public:
  Matrix() = default;
  Matrix(RingSpec ring, std::size_t rows, std::size_t cols);

  static Matrix identity(const RingSpec& ring, std::size_t n);
  /// Rows of integers, converted to constants of `ring`.
  static Matrix from_integers(const RingSpec& ring, const std::vector<std::vector<long>>& rows);

  const RingSpec& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  RingElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RingElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<RingElement> column(std::size_t j) const;
  void set_column(std::size_t j, const std::vector<RingElement>& v);
  bool is_zero() const;
  bool column_is_zero(std::size_t j) const;

  Matrix transpose() const;
  /// Columns `which` in that order.
  Matrix select_columns(const std::vector<std::size_t>& which) const;
  Matrix select_rows(const std::vector<std::size_t>& which) const;
  /// [A | B]
  Matrix hconcat(const Matrix& right) const;
  /// [A ; B]
  Matrix vconcat(const Matrix& below) const;
  /// block diag(A, B)
  Matrix direct_sum(const Matrix& other) const;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;
  Matrix scaled(const RingElement& s) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

private:
  RingSpec ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RingElement> data_;
};

/// Determinant by cofactor expansion memoized on column subsets (division-free).
RingElement determinant(const Matrix& m);

/// A graded free module sum_i R[n_i].
class GradedFreeModule {
public:
  GradedFreeModule() = default;
  GradedFreeModule(RingSpec ring, std::vector<long> shifts) : ring_(std::move(ring)), shifts_(std::move(shifts)) {}

  const RingSpec& ring() const { return ring_; }
  const std::vector<long>& shifts() const { return shifts_; }
  std::size_t rank() const { return shifts_.size(); }
  long shift(std::size_t i) const { return shifts_[i]; }

  GradedFreeModule shifted(long n) const;
  GradedFreeModule direct_sum(const GradedFreeModule& other) const;

  /// Same ring and shifts agreeing in the grading group.
  friend bool operator==(const GradedFreeModule& a, const GradedFreeModule& b);
  friend bool operator!=(const GradedFreeModule& a, const GradedFreeModule& b) { return !(a == b); }

  std::string to_string() const;

private:
  RingSpec ring_;
  std::vector<long> shifts_;
};

/// Homogeneous matrix homomorphism of degree d. Columns are indexed by source
/// summands, rows by target summands; entry (i, j) has ring degree
/// n_i - n_j + d or is zero. Homogeneity is checked on construction.
class GradedMatrixHom {
public:
  GradedMatrixHom() = default;
  GradedMatrixHom(GradedFreeModule source, GradedFreeModule target, long degree, Matrix entries);

  static GradedMatrixHom identity(const GradedFreeModule& m);
  static GradedMatrixHom zero(const GradedFreeModule& source, const GradedFreeModule& target, long degree);

  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  long degree() const { return degree_; }
  const Matrix& matrix() const { return entries_; }
  const RingSpec& ring() const { return source_.ring(); }
  const RingElement& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  bool is_endomorphism() const { return source_ == target_; }

  /// Both modules shifted by n; the matrix is unchanged.
  GradedMatrixHom shifted(long n) const;
  GradedMatrixHom direct_sum(const GradedMatrixHom& other) const;
  GradedMatrixHom operator+(const GradedMatrixHom& other) const;
  GradedMatrixHom operator-(const GradedMatrixHom& other) const;
  GradedMatrixHom operator-() const;

  friend bool operator==(const GradedMatrixHom& a, const GradedMatrixHom& b);

  std::string to_string() const;

private:
  GradedFreeModule source_;
  GradedFreeModule target_;
  long degree_ = 0;
  Matrix entries_;
};

/// Throws NotHomogeneous naming the first offending entry.
void check_homogeneous(const GradedFreeModule& source, const GradedFreeModule& target, long degree,
                       const Matrix& entries);

/// g after f. Requires f.target == g.source.
GradedMatrixHom compose(const GradedMatrixHom& g, const GradedMatrixHom& f);

/// Square degree-0 hom; returns the two-sided inverse when the determinant is a unit.
std::optional<GradedMatrixHom> inverse(const GradedMatrixHom& f);
inline bool is_invertible(const GradedMatrixHom& f) { return inverse(f).has_value(); }

/// Source shifts making every column of `entries` homogeneous of the given
/// degree into `target`. Zero columns get shift `degree` relative to the
/// first target shift (or `degree` for an empty target).
std::vector<long> infer_source_shifts(const GradedFreeModule& target, const Matrix& entries, long degree);

/// Re-expresses f with degree `new_degree` by moving the difference into the
/// source shifts. The matrix is unchanged.
GradedMatrixHom with_degree(const GradedMatrixHom& f, long new_degree);

/// [f | g] as one hom of f's degree; g is re-shifted first.
GradedMatrixHom hconcat(const GradedMatrixHom& f, const GradedMatrixHom& g);

/// Entrywise base change.
GradedMatrixHom base_change(const RingMap& phi, const GradedMatrixHom& f);
Matrix base_change(const RingMap& phi, const Matrix& m);

}  // namespace hst
