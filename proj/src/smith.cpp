#include "hstrace/smith.hpp"

#include <utility>

#include "hstrace/errors.hpp"

namespace hst {

IntMatrix::IntMatrix(std::initializer_list<std::vector<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("ragged IntMatrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_matrix(const Matrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto c = m(i, j).constant_value();
      if (!c) throw InvalidArgument("integer backend given non-constant entry " + m(i, j).to_string());
      out(i, j) = *c;
    }
  return out;
}

Matrix IntMatrix::to_matrix(const RingSpec& ring) const {
  Matrix m(ring, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = RingElement::constant(ring, (*this)(i, j));
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw ShapeMismatch("IntMatrix product: inner dimensions differ");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Integer& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Integer& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

namespace {

// Elimination state: P * M * Q = D, with P_inv, Q_inv maintained alongside.
struct Elimination {
  IntMatrix D, P, P_inv, Q, Q_inv;

  void swap_rows(std::size_t i, std::size_t j) {
    D.swap_rows(i, j);
    P.swap_rows(i, j);
    P_inv.swap_cols(i, j);
  }
  void add_row(std::size_t i, std::size_t j, const Integer& c) {
    D.add_row(i, j, c);
    P.add_row(i, j, c);
    P_inv.add_col(j, i, -c);
  }
  void negate_row(std::size_t i) {
    D.negate_row(i);
    P.negate_row(i);
    for (std::size_t k = 0; k < P_inv.rows(); ++k) P_inv(k, i) = -P_inv(k, i);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    D.swap_cols(i, j);
    Q.swap_cols(i, j);
    Q_inv.swap_rows(i, j);
  }
  void add_col(std::size_t i, std::size_t j, const Integer& c) {
    D.add_col(i, j, c);
    Q.add_col(i, j, c);
    Q_inv.add_row(j, i, -c);
  }
};

// Truncating quotient; the remainder then has |r| < |b|.
Integer quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Elimination e{m, IntMatrix::identity(rows), IntMatrix::identity(rows), IntMatrix::identity(cols),
                IntMatrix::identity(cols)};
  auto& D = e.D;
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero |entry| in the trailing block
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (D(i, j) != 0 && (pi == rows || abs(D(i, j)) < abs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) goto done;
      e.swap_rows(t, pi);
      e.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        e.add_row(i, t, -quotient(D(i, t), D(t, t)));
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        e.add_col(j, t, -quotient(D(t, j), D(t, t)));
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the trailing block by the pivot
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            e.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) e.negate_row(t);
  }
done:
  SmithForm f;
  f.rank = t;
  f.D = std::move(e.D);
  f.U = std::move(e.P_inv);
  f.U_inv = std::move(e.P);
  f.V = std::move(e.Q_inv);
  f.V_inv = std::move(e.Q);
  return f;
}

Integer int_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace hst
