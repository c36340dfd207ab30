#pragma once

#include <string>

#include "hstrace/matrix.hpp"
#include "hstrace/module.hpp"
#include "hstrace/trace.hpp"

namespace hst {

/// Basis e_i (x) e'_k at index i * rank(B) + k, with shift n_i + n'_k.
GradedFreeModule tensor(const GradedFreeModule& a, const GradedFreeModule& b);

/// Kronecker product; entry ((i,k),(j,l)) is (-1)^{deg g * n_j} f_ij g_kl where
/// n_j is the shift of source basis element j of f.
GradedMatrixHom tensor(const GradedMatrixHom& f, const GradedMatrixHom& g);

/// The symmetry A (x) B -> B (x) A, e_i (x) e'_k -> (-1)^{n_i n'_k} e'_k (x) e_i.
GradedMatrixHom braid(const GradedFreeModule& a, const GradedFreeModule& b);

/// R[0].
GradedFreeModule unit_object(const RingSpec& ring);

/// Shifts negated.
GradedFreeModule dual(const GradedFreeModule& a);

struct DualityData {
  GradedFreeModule object;
  GradedFreeModule dual;
  GradedMatrixHom unit;    // R -> A (x) A*
  GradedMatrixHom counit;  // A* (x) A -> R
};

/// Coevaluation 1 -> sum_i e_i (x) e_i*, evaluation e_i* (x) e_j -> delta_ij.
DualityData standard_duality(const GradedFreeModule& a);

/// Duality data with per-summand signs: unit coefficient unit_signs[i],
/// counit coefficient counit_signs[i].
DualityData signed_duality(const GradedFreeModule& a, const std::vector<int>& unit_signs,
                           const std::vector<int>& counit_signs);

/// Both zigzag composites are the identity.
bool zigzag_check(const DualityData& d);

/// counit o braid o (f (x) id) o unit, read off as a 1x1 matrix.
/// Throws InvalidArgument if d fails the zigzag check.
TraceValue categorical_trace(const GradedMatrixHom& f, const DualityData& d);

TraceValue euler_characteristic(const DualityData& d);

// ---------------------------------------------------------------------------
// Short exact sequences

/// 0 -> A --a--> B --b--> C -> 0 with compatible endomorphisms f_A, f_B.
struct SESWithEndos {
  PresentedModule A, B, C;
  ModuleHom a, b;
  ModuleHom f_A, f_B;
};

struct SESCheck {
  bool ok = true;
  std::string failure;
};
/// Exactness and f_B a = a f_A, all certified by membership.
SESCheck validate_ses(const SESWithEndos& s);

/// The endomorphism of C induced by f_B.
ModuleHom induced_quotient_endo(const SESWithEndos& s);

struct AdditivityReport {
  ModuleHom f_C;
  TraceValue trace_A, trace_B, trace_C;
  RingElement defect;  // tr f_C - tr f_B + tr f_A
  std::size_t length_A = 0, length_B = 0, length_C = 0;
};

/// Throws InvalidArgument for non-exact input and LengthExceeded if a
/// resolution does not terminate.
AdditivityReport additivity_check(const SESWithEndos& s, int max_length = kDefaultMaxLength);

}  // namespace hst
