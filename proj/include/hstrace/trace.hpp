#pragma once

#include <utility>
#include <vector>

#include "hstrace/matrix.hpp"
#include "hstrace/module.hpp"

namespace hst {

struct TraceValue {
  RingElement value;
  long degree = 0;

  friend bool operator==(const TraceValue& a, const TraceValue& b) {
    return a.value == b.value && a.value.ring().degrees_equal(a.degree, b.degree);
  }
  std::string to_string() const;
};

/// (-1)^n for any integer n.
inline int parity_sign(long n) { return (n % 2 == 0) ? 1 : -1; }

/// Supertrace sum_i (-1)^{n_i} F_ii of an endomorphism of a graded free module.
TraceValue free_trace(const GradedMatrixHom& f);

/// (tr F, tr F[n]); the second is (-1)^n times the first.
std::pair<TraceValue, TraceValue> shifted_trace_check(const GradedMatrixHom& f, long n);

/// Trace of F on the summand im(e), where e is a degree-0 idempotent and F = e F e.
TraceValue projective_trace(const GradedMatrixHom& f, const GradedMatrixHom& idempotent);

/// Sum of the free traces of a chain map.
TraceValue chain_trace(const std::vector<GradedMatrixHom>& chain, long degree);

/// Hattori-Stallings trace: lifts f over r and sums the free traces of the lift.
TraceValue hs_trace(const ModuleHom& f, const Resolution& r);

/// (phi(tr F), tr phi(F)).
std::pair<TraceValue, TraceValue> base_change_trace(const RingMap& phi, const GradedMatrixHom& f);

/// sum_j sum_i (-1)^{n_i} over the free modules of a resolution, counted
/// directly from the shifts.
Integer signed_rank_sum(const Resolution& r);

}  // namespace hst
