#pragma once

#include <memory>
#include <vector>

#include "hstrace/matrix.hpp"

namespace hst {

using Vector = std::vector<RingElement>;

/// v = generators * certificate + remainder; remainder == 0 iff v is in the image.
struct NormalForm {
  Vector remainder;
  Vector certificate;

  bool is_member() const;
};

enum class Backend {
  Auto,      // Smith for the integers, Groebner otherwise
  Smith,     // integers only
  Groebner,  // any supported ring
};

/// The image of a GradedMatrixHom, with a membership/normal-form oracle and
/// syzygies of its generating columns.
///
/// Over the integers the Smith backend works blockwise on the degree
/// components of the map, so kernels and certificates stay homogeneous.
/// Over polynomial rings a strong Groebner basis of the module generated by
/// (column_k, e_k) in R^rows + R^cols is computed with the column part first;
/// elements with zero column part are exactly the syzygies, and reducing
/// (v, 0) leaves the remainder on the left and minus the certificate on the
/// right. Laurent rings are handled in Z[t_1..t_n, u] / (u t_1..t_n - 1)
/// after scaling each column by the monomial unit that makes its exponents
/// non-negative and minimal.
class Submodule {
public:
  explicit Submodule(GradedMatrixHom generators, Backend backend = Backend::Auto);

  const GradedMatrixHom& generators() const { return generators_; }
  const GradedFreeModule& ambient() const { return generators_.target(); }
  Backend backend() const { return backend_; }

  NormalForm normal_form(const Vector& v) const;
  bool contains(const Vector& v) const { return normal_form(v).is_member(); }
  /// Every column of m lies in the submodule.
  bool contains_columns(const Matrix& m) const;
  /// Solves generators * X = m column by column; throws InternalError if some column is not a member.
  Matrix solve(const Matrix& m) const;

  /// Generators of the kernel of the generator matrix, as a degree-1 hom into
  /// the generators' source. Zero and duplicate columns are dropped.
  GradedMatrixHom syzygies() const;

  /// Leading-term basis of the submodule (Groebner backend) or the image of
  /// U * D (Smith backend), as columns of a matrix over the ambient ring.
  Matrix basis() const;

private:
  struct SmithData;
  struct GroebnerData;

  GradedMatrixHom generators_;
  Backend backend_;
  std::shared_ptr<const SmithData> smith_;
  std::shared_ptr<const GroebnerData> groebner_;
};

Submodule groebner_basis(const GradedMatrixHom& columns);
NormalForm normal_form(const Vector& v, const Submodule& basis);

/// Kernel generators of f as a degree-1 hom P -> f.source().
GradedMatrixHom syzygies(const GradedMatrixHom& f, Backend backend = Backend::Auto);

/// Drops zero and duplicate columns, then greedily removes columns lying in
/// the span of the remaining ones.
GradedMatrixHom prune_columns(const GradedMatrixHom& f);

/// im a == im b as submodules of the common target (mutual membership).
bool same_image(const GradedMatrixHom& a, const GradedMatrixHom& b);

Vector zero_vector(const RingSpec& ring, std::size_t n);

}  // namespace hst
