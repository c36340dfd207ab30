#include "hstrace/trace.hpp"

#include "hstrace/errors.hpp"

namespace hst {

std::string TraceValue::to_string() const { return value.to_string() + " (degree " + std::to_string(degree) + ")"; }

TraceValue free_trace(const GradedMatrixHom& f) {
  if (!f.is_endomorphism()) throw ShapeMismatch("free_trace: map is not an endomorphism");
  RingElement sum = RingElement::zero(f.ring());
  for (std::size_t i = 0; i < f.source().rank(); ++i) {
    if (parity_sign(f.source().shift(i)) > 0) sum += f(i, i);
    else sum -= f(i, i);
  }
  return {sum, f.degree()};
}

std::pair<TraceValue, TraceValue> shifted_trace_check(const GradedMatrixHom& f, long n) {
  return {free_trace(f), free_trace(f.shifted(n))};
}

TraceValue projective_trace(const GradedMatrixHom& f, const GradedMatrixHom& e) {
  if (!e.is_endomorphism() || !e.ring().degrees_equal(e.degree(), 0))
    throw InvalidArgument("projective_trace: idempotent must be a degree-0 endomorphism");
  if (compose(e, e) != e) throw InvalidArgument("projective_trace: e is not idempotent");
  if (f.source() != e.source() || f.target() != e.target())
    throw ShapeMismatch("projective_trace: map and idempotent act on different modules");
  if (compose(e, compose(f, e)).matrix() != f.matrix())
    throw InvalidArgument("projective_trace: map does not satisfy F = e F e");
  return free_trace(f);
}

TraceValue chain_trace(const std::vector<GradedMatrixHom>& chain, long degree) {
  if (chain.empty()) throw InvalidArgument("chain_trace: empty chain map");
  RingElement sum = RingElement::zero(chain.front().ring());
  for (const auto& f : chain) sum += free_trace(f).value;
  return {sum, degree};
}

TraceValue hs_trace(const ModuleHom& f, const Resolution& r) {
  return chain_trace(lift_endomorphism(f, r), f.degree());
}

std::pair<TraceValue, TraceValue> base_change_trace(const RingMap& phi, const GradedMatrixHom& f) {
  auto t = free_trace(f);
  return {TraceValue{phi(t.value), t.degree}, free_trace(base_change(phi, f))};
}

Integer signed_rank_sum(const Resolution& r) {
  Integer sum = 0;
  for (const auto& p : r.modules)
    for (long n : p.shifts()) sum += parity_sign(n);
  return sum;
}

}  // namespace hst
