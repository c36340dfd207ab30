#include "hstrace/submodule.hpp"

#include <map>

#include "hstrace/errors.hpp"
#include "hstrace/groebner.hpp"
#include "hstrace/smith.hpp"

namespace hst {

bool NormalForm::is_member() const {
  for (const auto& r : remainder)
    if (!r.is_zero()) return false;
  return true;
}

Vector zero_vector(const RingSpec& ring, std::size_t n) { return Vector(n, RingElement(ring)); }

// ---------------------------------------------------------------------------
// Smith backend

struct Submodule::SmithData {
  struct Block {
    std::vector<std::size_t> rows, cols;
    SmithForm form;
  };
  std::vector<Block> blocks;
};

// ---------------------------------------------------------------------------
// Groebner backend

struct Submodule::GroebnerData {
  std::size_t rows = 0, cols = 0;
  std::size_t ring_vars = 0;  // variables of the user ring
  bool laurent = false;
  std::vector<Monomial> column_shift;  // exponent shift applied to each column
  std::unique_ptr<gb::GroebnerBasis> basis;

  std::size_t internal_vars() const { return ring_vars + (laurent ? 1 : 0); }

  // Exponent shift making every exponent of the vector non-negative and minimal.
  Monomial normalizing_shift(const Vector& v) const {
    Monomial shift(ring_vars, 0);
    if (!laurent) return shift;
    bool first = true;
    for (const auto& e : v)
      for (const auto& t : e.terms()) {
        for (std::size_t k = 0; k < ring_vars; ++k) {
          if (first || -t.exponents[k] > shift[k]) shift[k] = -t.exponents[k];
        }
        first = false;
      }
    if (first) std::fill(shift.begin(), shift.end(), 0);
    return shift;
  }

  void append(std::vector<gb::ModTerm>& out, const RingElement& e, std::uint32_t comp, const Monomial& shift) const {
    for (const auto& t : e.terms()) {
      Monomial m(internal_vars(), 0);
      for (std::size_t k = 0; k < ring_vars; ++k) m[k] = t.exponents[k] + shift[k];
      out.push_back(gb::ModTerm{comp, std::move(m), t.coeff});
    }
  }

  // Internal monomial back in the user ring, times t^{-shift}.
  Monomial external(const Monomial& m, const Monomial& shift) const {
    Monomial out(ring_vars);
    Exponent u = laurent ? m[ring_vars] : 0;
    for (std::size_t k = 0; k < ring_vars; ++k) out[k] = m[k] - u - shift[k];
    return out;
  }
};

namespace {

long block_key(const RingSpec& ring, long degree) { return ring.reduce(degree); }

Vector from_terms_by_comp(const RingSpec& ring, std::size_t n, std::vector<std::vector<Term>>& buckets) {
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(RingElement::from_terms(ring, std::move(buckets[i])));
  return v;
}

}  // namespace

Submodule::Submodule(GradedMatrixHom generators, Backend backend)
    : generators_(std::move(generators)), backend_(backend) {
  const auto& ring = generators_.ring();
  if (backend_ == Backend::Auto) backend_ = ring.kind() == RingKind::Integers ? Backend::Smith : Backend::Groebner;
  if (backend_ == Backend::Smith && ring.kind() != RingKind::Integers)
    throw InvalidArgument("Smith backend requires the integers, got " + ring.to_string());

  const auto& src = generators_.source();
  const auto& tgt = generators_.target();
  const auto& mat = generators_.matrix();

  if (backend_ == Backend::Smith) {
    std::map<long, SmithData::Block> by_key;
    for (std::size_t i = 0; i < tgt.rank(); ++i) by_key[block_key(ring, tgt.shift(i))].rows.push_back(i);
    for (std::size_t j = 0; j < src.rank(); ++j)
      by_key[block_key(ring, src.shift(j) - generators_.degree())].cols.push_back(j);
    auto data = std::make_shared<SmithData>();
    for (auto& [key, block] : by_key) {
      IntMatrix sub(block.rows.size(), block.cols.size());
      for (std::size_t a = 0; a < block.rows.size(); ++a)
        for (std::size_t b = 0; b < block.cols.size(); ++b) {
          auto c = mat(block.rows[a], block.cols[b]).constant_value();
          if (!c) throw InvalidArgument("Smith backend given a non-constant entry");
          sub(a, b) = *c;
        }
      block.form = smith_normal_form(sub);
      data->blocks.push_back(std::move(block));
    }
    smith_ = std::move(data);
    return;
  }

  auto data = std::make_shared<GroebnerData>();
  data->rows = tgt.rank();
  data->cols = src.rank();
  data->ring_vars = ring.num_vars();
  data->laurent = ring.kind() == RingKind::Laurent;
  std::vector<gb::ModVec> gens;
  for (std::size_t j = 0; j < data->cols; ++j) {
    Vector col = mat.column(j);
    Monomial shift = data->normalizing_shift(col);
    std::vector<gb::ModTerm> terms;
    for (std::size_t i = 0; i < data->rows; ++i) data->append(terms, col[i], static_cast<std::uint32_t>(i), shift);
    // e_j carries the column multiplier t^shift so certificates come back in the user ring
    terms.push_back(gb::ModTerm{static_cast<std::uint32_t>(data->rows + j), Monomial(data->internal_vars(), 0), 1});
    data->column_shift.push_back(std::move(shift));
    gens.push_back(gb::make_vector(std::move(terms)));
  }
  if (data->laurent) {
    // u * t_1 ... t_n - 1 in every component, certificates included
    for (std::size_t i = 0; i < data->rows + data->cols; ++i) {
      Monomial ut(data->internal_vars(), 1);
      Monomial one(data->internal_vars(), 0);
      gens.push_back(gb::make_vector({gb::ModTerm{static_cast<std::uint32_t>(i), std::move(ut), 1},
                                      gb::ModTerm{static_cast<std::uint32_t>(i), std::move(one), -1}}));
    }
  }
  data->basis = std::make_unique<gb::GroebnerBasis>(data->internal_vars(), std::move(gens));
  groebner_ = std::move(data);
}

NormalForm Submodule::normal_form(const Vector& v) const {
  const auto& ring = generators_.ring();
  const auto& tgt = generators_.target();
  if (v.size() != tgt.rank()) throw ShapeMismatch("normal_form: vector length differs from ambient rank");
  for (const auto& e : v)
    if (e.ring() != ring) throw RingMismatch("normal_form: vector over a different ring");

  NormalForm nf{zero_vector(ring, tgt.rank()), zero_vector(ring, generators_.source().rank())};

  if (smith_) {
    for (const auto& block : smith_->blocks) {
      const auto& f = block.form;
      const std::size_t nr = block.rows.size(), nc = block.cols.size();
      std::vector<Integer> w(nr), y(nc), rem(nr);
      std::vector<Integer> vb(nr);
      for (std::size_t a = 0; a < nr; ++a) {
        auto c = v[block.rows[a]].constant_value();
        if (!c) throw InvalidArgument("Smith backend given a non-constant vector entry");
        vb[a] = *c;
      }
      for (std::size_t a = 0; a < nr; ++a) {
        Integer s = 0;
        for (std::size_t b = 0; b < nr; ++b) s += f.U_inv(a, b) * vb[b];
        w[a] = s;
      }
      for (std::size_t a = 0; a < nr; ++a) {
        if (a < f.rank) {
          mpz_fdiv_qr(y[a].get_mpz_t(), rem[a].get_mpz_t(), w[a].get_mpz_t(), f.D(a, a).get_mpz_t());
        } else {
          rem[a] = w[a];
        }
      }
      for (std::size_t b = 0; b < nc; ++b) {
        Integer s = 0;
        for (std::size_t k = 0; k < std::min(nc, f.rank); ++k) s += f.V_inv(b, k) * y[k];
        nf.certificate[block.cols[b]] = RingElement::constant(ring, s);
      }
      for (std::size_t a = 0; a < nr; ++a) {
        Integer s = 0;
        for (std::size_t b = 0; b < nr; ++b) s += f.U(a, b) * rem[b];
        nf.remainder[block.rows[a]] = RingElement::constant(ring, s);
      }
    }
    return nf;
  }

  const auto& g = *groebner_;
  Monomial vshift = g.normalizing_shift(v);
  std::vector<gb::ModTerm> terms;
  for (std::size_t i = 0; i < g.rows; ++i) g.append(terms, v[i], static_cast<std::uint32_t>(i), vshift);
  gb::ModVec reduced = g.basis->reduce(gb::make_vector(std::move(terms)), static_cast<std::uint32_t>(g.rows));

  std::vector<std::vector<Term>> rem(g.rows), cert(g.cols);
  for (const auto& t : reduced) {
    if (t.comp < g.rows) {
      rem[t.comp].push_back(Term{g.external(t.mono, vshift), t.coeff});
    } else {
      std::size_t k = t.comp - g.rows;
      Monomial m = g.external(t.mono, vshift);
      for (std::size_t q = 0; q < m.size(); ++q) m[q] += g.column_shift[k][q];
      cert[k].push_back(Term{std::move(m), -t.coeff});
    }
  }
  nf.remainder = from_terms_by_comp(ring, g.rows, rem);
  nf.certificate = from_terms_by_comp(ring, g.cols, cert);
  return nf;
}

bool Submodule::contains_columns(const Matrix& m) const {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!contains(m.column(j))) return false;
  return true;
}

Matrix Submodule::solve(const Matrix& m) const {
  Matrix x(generators_.ring(), generators_.source().rank(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto nf = normal_form(m.column(j));
    if (!nf.is_member()) throw InternalError("solve: column " + std::to_string(j) + " is not in the submodule");
    x.set_column(j, nf.certificate);
  }
  return x;
}

namespace {

bool same_up_to_sign(const Vector& a, const Vector& b) {
  bool eq = true, neg = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) eq = false;
    if (a[i] != -b[i]) neg = false;
    if (!eq && !neg) return false;
  }
  return true;
}

// Laurent columns are scaled by a monomial unit to minimal non-negative
// exponents; every column gets a positive leading coefficient.
Vector tidy_column(const RingSpec& ring, Vector col) {
  if (ring.kind() == RingKind::Laurent) {
    Monomial low;
    bool first = true;
    for (const auto& e : col)
      for (const auto& t : e.terms()) {
        if (first) low = t.exponents;
        else
          for (std::size_t k = 0; k < low.size(); ++k) low[k] = std::min(low[k], t.exponents[k]);
        first = false;
      }
    if (!first) {
      for (auto& x : low) x = -x;
      auto unit = RingElement::monomial(ring, low);
      for (auto& e : col) e = e * unit;
    }
  }
  for (const auto& e : col) {
    if (e.is_zero()) continue;
    if (e.leading_term().coeff < 0)
      for (auto& x : col) x = -x;
    break;
  }
  return col;
}

}  // namespace

GradedMatrixHom Submodule::syzygies() const {
  const auto& ring = generators_.ring();
  const auto& src = generators_.source();
  std::vector<Vector> cols;
  auto add = [&](Vector col) {
    bool nonzero = false;
    for (const auto& e : col)
      if (!e.is_zero()) nonzero = true;
    if (!nonzero) return;
    col = tidy_column(ring, std::move(col));
    for (const auto& c : cols)
      if (same_up_to_sign(c, col)) return;
    cols.push_back(std::move(col));
  };

  if (smith_) {
    for (const auto& block : smith_->blocks) {
      const auto& f = block.form;
      for (std::size_t k = f.rank; k < block.cols.size(); ++k) {
        Vector col = zero_vector(ring, src.rank());
        for (std::size_t b = 0; b < block.cols.size(); ++b)
          col[block.cols[b]] = RingElement::constant(ring, f.V_inv(b, k));
        add(std::move(col));
      }
    }
  } else {
    const auto& g = *groebner_;
    Monomial none(g.ring_vars, 0);
    for (const auto& elem : g.basis->elements()) {
      if (elem.front().comp < g.rows) continue;
      std::vector<std::vector<Term>> buckets(g.cols);
      for (const auto& t : elem) {
        std::size_t k = t.comp - g.rows;
        Monomial m = g.external(t.mono, none);
        for (std::size_t q = 0; q < m.size(); ++q) m[q] += g.column_shift[k][q];
        buckets[k].push_back(Term{std::move(m), t.coeff});
      }
      add(from_terms_by_comp(ring, g.cols, buckets));
    }
  }

  Matrix m(ring, src.rank(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  GradedFreeModule kernel_gens(ring, infer_source_shifts(src, m, 1));
  return GradedMatrixHom(kernel_gens, src, 1, std::move(m));
}

Matrix Submodule::basis() const {
  const auto& ring = generators_.ring();
  const std::size_t r = generators_.target().rank();
  std::vector<Vector> cols;
  if (smith_) {
    for (const auto& block : smith_->blocks) {
      const auto& f = block.form;
      for (std::size_t k = 0; k < f.rank; ++k) {
        Vector col = zero_vector(ring, r);
        for (std::size_t a = 0; a < block.rows.size(); ++a)
          col[block.rows[a]] = RingElement::constant(ring, f.U(a, k) * f.D(k, k));
        cols.push_back(std::move(col));
      }
    }
  } else {
    const auto& g = *groebner_;
    Monomial none(g.ring_vars, 0);
    for (const auto& elem : g.basis->elements()) {
      if (elem.front().comp >= g.rows) continue;
      std::vector<std::vector<Term>> buckets(r);
      for (const auto& t : elem)
        if (t.comp < g.rows) buckets[t.comp].push_back(Term{g.external(t.mono, none), t.coeff});
      Vector col = from_terms_by_comp(ring, r, buckets);
      bool nonzero = false;
      for (const auto& e : col)
        if (!e.is_zero()) nonzero = true;
      if (nonzero) cols.push_back(std::move(col));
    }
  }
  Matrix m(ring, r, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Submodule groebner_basis(const GradedMatrixHom& columns) { return Submodule(columns, Backend::Groebner); }

NormalForm normal_form(const Vector& v, const Submodule& basis) { return basis.normal_form(v); }

GradedMatrixHom prune_columns(const GradedMatrixHom& f) {
  const auto& m = f.matrix();
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m.column_is_zero(j)) continue;
    bool dup = false;
    for (auto k : keep)
      if (same_up_to_sign(m.column(k), m.column(j))) dup = true;
    if (!dup) keep.push_back(j);
  }
  for (std::size_t pos = keep.size(); pos-- > 0;) {
    if (keep.size() <= 1) break;
    std::vector<std::size_t> others;
    for (std::size_t q = 0; q < keep.size(); ++q)
      if (q != pos) others.push_back(keep[q]);
    std::vector<long> shifts;
    for (auto k : others) shifts.push_back(f.source().shift(k));
    GradedMatrixHom rest(GradedFreeModule(f.ring(), shifts), f.target(), f.degree(), m.select_columns(others));
    if (Submodule(rest).contains(m.column(keep[pos]))) keep.erase(keep.begin() + static_cast<long>(pos));
  }
  std::vector<long> shifts;
  for (auto k : keep) shifts.push_back(f.source().shift(k));
  return GradedMatrixHom(GradedFreeModule(f.ring(), shifts), f.target(), f.degree(), m.select_columns(keep));
}

GradedMatrixHom syzygies(const GradedMatrixHom& f, Backend backend) {
  Submodule image(f, backend);
  auto s = image.syzygies();
  // a Smith kernel basis is already free of redundancy
  if (image.backend() == Backend::Smith) return s;
  return prune_columns(s);
}

bool same_image(const GradedMatrixHom& a, const GradedMatrixHom& b) {
  if (a.target() != b.target()) throw ShapeMismatch("same_image: different ambient modules");
  return Submodule(a).contains_columns(b.matrix()) && Submodule(b).contains_columns(a.matrix());
}

}  // namespace hst
