#include "hstrace/matrix.hpp"

#include <sstream>
#include <unordered_map>

#include "hstrace/errors.hpp"

namespace hst {

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(RingSpec ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, RingElement(ring_)) {}

Matrix Matrix::identity(const RingSpec& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RingElement::one(ring);
  return m;
}

Matrix Matrix::from_integers(const RingSpec& ring, const std::vector<std::vector<long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(ring, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw ShapeMismatch("ragged integer matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = RingElement::constant(ring, rows[i][j]);
  }
  return m;
}

std::vector<RingElement> Matrix::column(std::size_t j) const {
  std::vector<RingElement> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_column(std::size_t j, const std::vector<RingElement>& v) {
  if (v.size() != rows_) throw ShapeMismatch("set_column: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

bool Matrix::column_is_zero(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!(*this)(i, j).is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& which) const {
  Matrix m(ring_, rows_, which.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < which.size(); ++k) m(i, k) = (*this)(i, which[k]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& which) const {
  Matrix m(ring_, which.size(), cols_);
  for (std::size_t k = 0; k < which.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(which[k], j);
  return m;
}

Matrix Matrix::hconcat(const Matrix& right) const {
  if (ring_ != right.ring_) throw RingMismatch("hconcat: ring mismatch");
  if (rows_ != right.rows_) throw ShapeMismatch("hconcat: row counts differ");
  Matrix m(ring_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m(i, cols_ + j) = right(i, j);
  }
  return m;
}

Matrix Matrix::vconcat(const Matrix& below) const {
  if (ring_ != below.ring_) throw RingMismatch("vconcat: ring mismatch");
  if (cols_ != below.cols_) throw ShapeMismatch("vconcat: column counts differ");
  Matrix m(ring_, rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(rows_ + i, j) = below(i, j);
  return m;
}

Matrix Matrix::direct_sum(const Matrix& other) const {
  if (ring_ != other.ring_) throw RingMismatch("direct_sum: ring mismatch");
  Matrix m(ring_, rows_ + other.rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < other.rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j) m(rows_ + i, cols_ + j) = other(i, j);
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (ring_ != other.ring_) throw RingMismatch("matrix product: ring mismatch");
  if (cols_ != other.rows_) throw ShapeMismatch("matrix product: inner dimensions differ");
  Matrix m(ring_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const auto& b = other(k, j);
        if (!b.is_zero()) m(i, j) += a * b;
      }
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeMismatch("matrix sum: shapes differ");
  Matrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += other.data_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeMismatch("matrix difference: shapes differ");
  Matrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] -= other.data_[k];
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& e : m.data_) e = -e;
  return m;
}

Matrix Matrix::scaled(const RingElement& s) const {
  Matrix m = *this;
  for (auto& e : m.data_) e = e * s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).to_string();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

// det of rows [row, n) against the column set `mask` (popcount == n - row).
RingElement minor_det(const Matrix& m, std::size_t row, std::uint64_t mask,
                      std::unordered_map<std::uint64_t, RingElement>& memo) {
  const std::size_t n = m.rows();
  if (row == n) return RingElement::one(m.ring());
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  RingElement acc(m.ring());
  int sign = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!(mask & (std::uint64_t{1} << j))) continue;
    const auto& a = m(row, j);
    if (!a.is_zero()) {
      auto sub = minor_det(m, row + 1, mask & ~(std::uint64_t{1} << j), memo);
      if (!sub.is_zero()) {
        if (sign > 0) acc += a * sub;
        else acc -= a * sub;
      }
    }
    sign = -sign;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace

RingElement determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of non-square matrix");
  if (m.rows() > 62) throw InvalidArgument("determinant: matrix too large for cofactor expansion");
  std::unordered_map<std::uint64_t, RingElement> memo;
  std::uint64_t all = m.rows() == 0 ? 0 : ((std::uint64_t{1} << m.rows()) - 1);
  return minor_det(m, 0, all, memo);
}

// ---------------------------------------------------------------------------
// GradedFreeModule

GradedFreeModule GradedFreeModule::shifted(long n) const {
  auto s = shifts_;
  for (auto& x : s) x += n;
  return GradedFreeModule(ring_, std::move(s));
}

GradedFreeModule GradedFreeModule::direct_sum(const GradedFreeModule& other) const {
  if (ring_ != other.ring_) throw RingMismatch("direct sum of modules over different rings");
  auto s = shifts_;
  s.insert(s.end(), other.shifts_.begin(), other.shifts_.end());
  return GradedFreeModule(ring_, std::move(s));
}

bool operator==(const GradedFreeModule& a, const GradedFreeModule& b) {
  if (a.ring_ != b.ring_ || a.shifts_.size() != b.shifts_.size()) return false;
  for (std::size_t i = 0; i < a.shifts_.size(); ++i)
    if (!a.ring_.degrees_equal(a.shifts_[i], b.shifts_[i])) return false;
  return true;
}

std::string GradedFreeModule::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < shifts_.size(); ++i) {
    if (i) os << ",";
    os << shifts_[i];
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// GradedMatrixHom

void check_homogeneous(const GradedFreeModule& source, const GradedFreeModule& target, long degree,
                       const Matrix& entries) {
  const auto& ring = source.ring();
  for (std::size_t i = 0; i < target.rank(); ++i) {
    for (std::size_t j = 0; j < source.rank(); ++j) {
      const auto& e = entries(i, j);
      auto deg = e.degree();
      if (deg.is_any()) continue;
      long want = ring.reduce(target.shift(i) - source.shift(j) + degree);
      if (deg.is_inhomogeneous() || deg.value() != want) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << ") = " << e.to_string() << " is not homogeneous of degree "
           << want << " (shifts n_i = " << target.shift(i) << ", n_j = " << source.shift(j)
           << ", map degree " << degree << ")";
        throw NotHomogeneous(os.str());
      }
    }
  }
}

GradedMatrixHom::GradedMatrixHom(GradedFreeModule source, GradedFreeModule target, long degree, Matrix entries)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree), entries_(std::move(entries)) {
  if (source_.ring() != target_.ring()) throw RingMismatch("hom: source and target rings differ");
  if (entries_.rows() != target_.rank() || entries_.cols() != source_.rank()) {
    std::ostringstream os;
    os << "hom: matrix is " << entries_.rows() << "x" << entries_.cols() << " but target rank is "
       << target_.rank() << " and source rank is " << source_.rank();
    throw ShapeMismatch(os.str());
  }
  if (entries_.rows() * entries_.cols() > 0 && entries_.ring() != source_.ring())
    throw RingMismatch("hom: matrix ring differs from module ring");
  if (entries_.rows() * entries_.cols() == 0) entries_ = Matrix(source_.ring(), target_.rank(), source_.rank());
  check_homogeneous(source_, target_, degree_, entries_);
}

GradedMatrixHom GradedMatrixHom::identity(const GradedFreeModule& m) {
  return GradedMatrixHom(m, m, 0, Matrix::identity(m.ring(), m.rank()));
}

GradedMatrixHom GradedMatrixHom::zero(const GradedFreeModule& source, const GradedFreeModule& target, long degree) {
  return GradedMatrixHom(source, target, degree, Matrix(source.ring(), target.rank(), source.rank()));
}

GradedMatrixHom GradedMatrixHom::shifted(long n) const {
  return GradedMatrixHom(source_.shifted(n), target_.shifted(n), degree_, entries_);
}

GradedMatrixHom GradedMatrixHom::direct_sum(const GradedMatrixHom& other) const {
  if (!ring().degrees_equal(degree_, other.degree_)) throw InvalidArgument("direct sum of homs of different degree");
  return GradedMatrixHom(source_.direct_sum(other.source_), target_.direct_sum(other.target_), degree_,
                         entries_.direct_sum(other.entries_));
}

GradedMatrixHom GradedMatrixHom::operator+(const GradedMatrixHom& other) const {
  if (source_ != other.source_ || target_ != other.target_) throw ShapeMismatch("sum of homs with different modules");
  return GradedMatrixHom(source_, target_, degree_, entries_ + other.entries_);
}

GradedMatrixHom GradedMatrixHom::operator-(const GradedMatrixHom& other) const {
  if (source_ != other.source_ || target_ != other.target_)
    throw ShapeMismatch("difference of homs with different modules");
  return GradedMatrixHom(source_, target_, degree_, entries_ - other.entries_);
}

GradedMatrixHom GradedMatrixHom::operator-() const { return GradedMatrixHom(source_, target_, degree_, -entries_); }

bool operator==(const GradedMatrixHom& a, const GradedMatrixHom& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.ring().degrees_equal(a.degree_, b.degree_) &&
         a.entries_ == b.entries_;
}

std::string GradedMatrixHom::to_string() const {
  std::ostringstream os;
  os << source_.to_string() << " -> " << target_.to_string() << " degree " << degree_ << " "
     << entries_.to_string();
  return os.str();
}

GradedMatrixHom compose(const GradedMatrixHom& g, const GradedMatrixHom& f) {
  if (f.ring() != g.ring()) throw RingMismatch("compose: ring mismatch");
  if (f.target() != g.source())
    throw ShapeMismatch("compose: target " + f.target().to_string() + " of f is not source " +
                        g.source().to_string() + " of g");
  return GradedMatrixHom(f.source(), g.target(), f.degree() + g.degree(), g.matrix() * f.matrix());
}

std::optional<GradedMatrixHom> inverse(const GradedMatrixHom& f) {
  const std::size_t n = f.source().rank();
  if (f.target().rank() != n) throw ShapeMismatch("is_invertible: non-square hom");
  if (!f.ring().degrees_equal(f.degree(), 0)) return std::nullopt;
  const auto& m = f.matrix();
  auto det = determinant(m);
  auto det_inv = det.inverse();
  if (!det_inv) return std::nullopt;
  Matrix inv(f.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // inv(i, j) = (-1)^{i+j} det(m without row j and column i) / det
      std::vector<std::size_t> rows, cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      auto c = determinant(m.select_rows(rows).select_columns(cols));
      if ((i + j) % 2) c = -c;
      inv(i, j) = c * *det_inv;
    }
  }
  return GradedMatrixHom(f.target(), f.source(), 0, std::move(inv));
}

std::vector<long> infer_source_shifts(const GradedFreeModule& target, const Matrix& entries, long degree) {
  if (entries.rows() != target.rank()) throw ShapeMismatch("infer_source_shifts: row count differs from target rank");
  const auto& ring = target.ring();
  std::vector<long> shifts(entries.cols());
  for (std::size_t j = 0; j < entries.cols(); ++j) {
    bool found = false;
    for (std::size_t i = 0; i < entries.rows() && !found; ++i) {
      const auto& e = entries(i, j);
      if (e.is_zero()) continue;
      auto deg = e.degree();
      if (deg.is_inhomogeneous())
        throw NotHomogeneous("column " + std::to_string(j) + " has inhomogeneous entry " + e.to_string());
      // entry degree = n_i - m_j + d  =>  m_j = n_i - deg + d
      long ed = ring.grading() == Grading::Z ? ring.monomial_degree(e.leading_term().exponents) : deg.value();
      shifts[j] = target.shift(i) - ed + degree;
      found = true;
    }
    if (!found) shifts[j] = (target.rank() ? target.shift(0) : 0) + degree;
  }
  return shifts;
}

GradedMatrixHom with_degree(const GradedMatrixHom& f, long new_degree) {
  long delta = new_degree - f.degree();
  return GradedMatrixHom(f.source().shifted(delta), f.target(), new_degree, f.matrix());
}

GradedMatrixHom hconcat(const GradedMatrixHom& f, const GradedMatrixHom& g) {
  if (f.target() != g.target()) throw ShapeMismatch("hconcat: targets differ");
  auto g2 = with_degree(g, f.degree());
  return GradedMatrixHom(f.source().direct_sum(g2.source()), f.target(), f.degree(),
                         f.matrix().hconcat(g2.matrix()));
}

Matrix base_change(const RingMap& phi, const Matrix& m) {
  Matrix out(phi.target(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = phi(m(i, j));
  return out;
}

GradedMatrixHom base_change(const RingMap& phi, const GradedMatrixHom& f) {
  if (f.ring() != phi.source()) throw RingMismatch("base_change: hom is not over the map's source ring");
  GradedFreeModule src(phi.target(), f.source().shifts());
  GradedFreeModule tgt(phi.target(), f.target().shifts());
  return GradedMatrixHom(src, tgt, f.degree(), base_change(phi, f.matrix()));
}

}  // namespace hst
