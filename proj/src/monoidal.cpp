#include "hstrace/monoidal.hpp"

#include <future>

#include "hstrace/errors.hpp"

namespace hst {

GradedFreeModule tensor(const GradedFreeModule& a, const GradedFreeModule& b) {
  if (a.ring() != b.ring()) throw RingMismatch("tensor: modules over different rings");
  std::vector<long> shifts;
  shifts.reserve(a.rank() * b.rank());
  for (long n : a.shifts())
    for (long m : b.shifts()) shifts.push_back(n + m);
  return GradedFreeModule(a.ring(), std::move(shifts));
}

GradedMatrixHom tensor(const GradedMatrixHom& f, const GradedMatrixHom& g) {
  if (f.ring() != g.ring()) throw RingMismatch("tensor: maps over different rings");
  const auto& ring = f.ring();
  const std::size_t fr = f.target().rank(), fc = f.source().rank();
  const std::size_t gr = g.target().rank(), gc = g.source().rank();
  Matrix m(ring, fr * gr, fc * gc);
  for (std::size_t i = 0; i < fr; ++i)
    for (std::size_t j = 0; j < fc; ++j) {
      if (f(i, j).is_zero()) continue;
      bool negate = parity_sign(g.degree()) < 0 && parity_sign(f.source().shift(j)) < 0;
      for (std::size_t k = 0; k < gr; ++k)
        for (std::size_t l = 0; l < gc; ++l) {
          if (g(k, l).is_zero()) continue;
          RingElement e = f(i, j) * g(k, l);
          m(i * gr + k, j * gc + l) = negate ? -e : e;
        }
    }
  return GradedMatrixHom(tensor(f.source(), g.source()), tensor(f.target(), g.target()), f.degree() + g.degree(),
                         std::move(m));
}

GradedMatrixHom braid(const GradedFreeModule& a, const GradedFreeModule& b) {
  if (a.ring() != b.ring()) throw RingMismatch("braid: modules over different rings");
  const auto& ring = a.ring();
  Matrix m(ring, a.rank() * b.rank(), a.rank() * b.rank());
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t k = 0; k < b.rank(); ++k) {
      int sign = parity_sign(a.shift(i)) < 0 && parity_sign(b.shift(k)) < 0 ? -1 : 1;
      m(k * a.rank() + i, i * b.rank() + k) = RingElement::constant(ring, sign);
    }
  return GradedMatrixHom(tensor(a, b), tensor(b, a), 0, std::move(m));
}

GradedFreeModule unit_object(const RingSpec& ring) { return GradedFreeModule(ring, {0}); }

GradedFreeModule dual(const GradedFreeModule& a) {
  std::vector<long> shifts;
  for (long n : a.shifts()) shifts.push_back(-n);
  return GradedFreeModule(a.ring(), std::move(shifts));
}

DualityData signed_duality(const GradedFreeModule& a, const std::vector<int>& unit_signs,
                           const std::vector<int>& counit_signs) {
  const std::size_t r = a.rank();
  if (unit_signs.size() != r || counit_signs.size() != r)
    throw ShapeMismatch("signed_duality: one sign per summand is required");
  const auto& ring = a.ring();
  GradedFreeModule ad = dual(a);
  GradedFreeModule one = unit_object(ring);
  Matrix eta(ring, r * r, 1), eps(ring, 1, r * r);
  for (std::size_t i = 0; i < r; ++i) {
    eta(i * r + i, 0) = RingElement::constant(ring, unit_signs[i]);
    eps(0, i * r + i) = RingElement::constant(ring, counit_signs[i]);
  }
  return DualityData{a, ad, GradedMatrixHom(one, tensor(a, ad), 0, std::move(eta)),
                     GradedMatrixHom(tensor(ad, a), one, 0, std::move(eps))};
}

DualityData standard_duality(const GradedFreeModule& a) {
  std::vector<int> ones(a.rank(), 1);
  return signed_duality(a, ones, ones);
}

bool zigzag_check(const DualityData& d) {
  const auto& a = d.object;
  const auto& ad = d.dual;
  const auto& ring = a.ring();
  GradedFreeModule one = unit_object(ring);
  if (d.unit.source() != one || d.unit.target() != tensor(a, ad)) return false;
  if (d.counit.source() != tensor(ad, a) || d.counit.target() != one) return false;
  auto id_a = GradedMatrixHom::identity(a);
  auto id_ad = GradedMatrixHom::identity(ad);
  // (id_A (x) eps)(eta (x) id_A) on 1 (x) A = A
  auto z1 = compose(tensor(id_a, d.counit), tensor(d.unit, id_a));
  // (eps (x) id_A*)(id_A* (x) eta) on A* (x) 1 = A*
  auto z2 = compose(tensor(d.counit, id_ad), tensor(id_ad, d.unit));
  return z1.matrix() == Matrix::identity(ring, a.rank()) && z2.matrix() == Matrix::identity(ring, ad.rank());
}

TraceValue categorical_trace(const GradedMatrixHom& f, const DualityData& d) {
  if (f.source() != d.object || f.target() != d.object)
    throw ShapeMismatch("categorical_trace: map is not an endomorphism of the dualised object");
  if (!zigzag_check(d)) throw InvalidArgument("categorical_trace: duality data fails the zigzag equations");
  auto step = compose(tensor(f, GradedMatrixHom::identity(d.dual)), d.unit);
  step = compose(braid(d.object, d.dual), step);
  step = compose(d.counit, step);
  return {step(0, 0), f.degree()};
}

TraceValue euler_characteristic(const DualityData& d) {
  return categorical_trace(GradedMatrixHom::identity(d.object), d);
}

// ---------------------------------------------------------------------------
// Short exact sequences

namespace {

std::vector<std::size_t> first_rows(std::size_t n) {
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  return rows;
}

}  // namespace

SESCheck validate_ses(const SESWithEndos& s) {
  SESCheck out;
  auto fail = [&](std::string why) {
    out.ok = false;
    out.failure = std::move(why);
    return out;
  };
  auto same = [](const PresentedModule& x, const PresentedModule& y) {
    return x.generators() == y.generators() && x.relations() == y.relations();
  };
  if (!same(s.a.source(), s.A) || !same(s.a.target(), s.B)) return fail("a is not a map A -> B");
  if (!same(s.b.source(), s.B) || !same(s.b.target(), s.C)) return fail("b is not a map B -> C");
  if (!same(s.f_A.source(), s.A) || !same(s.f_A.target(), s.A)) return fail("f_A is not an endomorphism of A");
  if (!same(s.f_B.source(), s.B) || !same(s.f_B.target(), s.B)) return fail("f_B is not an endomorphism of B");
  if (!s.A.ring().degrees_equal(s.f_A.degree(), s.f_B.degree())) return fail("f_A and f_B have different degrees");
  if (!hom_well_defined(s.a).ok) return fail("a is not well defined");
  if (!hom_well_defined(s.b).ok) return fail("b is not well defined");
  if (!hom_well_defined(s.f_A).ok) return fail("f_A is not well defined");
  if (!hom_well_defined(s.f_B).ok) return fail("f_B is not well defined");

  const auto& rho_B = s.B.relations();
  const auto& rho_C = s.C.relations();
  // b surjective
  Submodule onto(hconcat(s.b.lift(), rho_C));
  if (!onto.contains_columns(Matrix::identity(s.C.ring(), s.C.generators().rank()))) return fail("b is not surjective");
  // b a = 0
  if (!s.C.relation_module().contains_columns(s.b.lift().matrix() * s.a.lift().matrix()))
    return fail("b o a is not zero");
  // ker b in im a
  auto ker_b = kernel_modulo(s.b.lift(), rho_C);
  Submodule im_a(hconcat(s.a.lift(), rho_B));
  if (!im_a.contains_columns(ker_b.matrix())) return fail("ker b is not contained in im a");
  // a injective
  auto ker_a = kernel_modulo(s.a.lift(), rho_B);
  if (!s.A.relation_module().contains_columns(ker_a.matrix())) return fail("a is not injective");
  // f_B a = a f_A
  Matrix square = s.f_B.lift().matrix() * s.a.lift().matrix() - s.a.lift().matrix() * s.f_A.lift().matrix();
  if (!s.B.relation_module().contains_columns(square)) return fail("f_B o a != a o f_A");
  return out;
}

ModuleHom induced_quotient_endo(const SESWithEndos& s) {
  const auto& ring = s.C.ring();
  const auto& b = s.b.lift();
  const std::size_t nc = s.C.generators().rank();
  // b Y = id modulo rho_C
  Submodule onto(hconcat(b, s.C.relations()));
  Matrix sol = onto.solve(Matrix::identity(ring, nc));
  GradedMatrixHom y(s.C.generators(), s.B.generators(), -b.degree(),
                    sol.select_rows(first_rows(s.B.generators().rank())));
  GradedMatrixHom lift = compose(b, compose(s.f_B.lift(), y));
  return ModuleHom(s.C, s.C, with_degree(lift, s.f_B.degree()));
}

AdditivityReport additivity_check(const SESWithEndos& s, int max_length) {
  auto check = validate_ses(s);
  if (!check.ok) throw InvalidArgument("additivity_check: " + check.failure);
  ModuleHom f_C = induced_quotient_endo(s);
  auto traced = [max_length](const ModuleHom& f) {
    auto r = resolve(f.source(), max_length);
    return std::make_pair(hs_trace(f, r), r.length());
  };
  auto fa = std::async(std::launch::async, traced, s.f_A);
  auto fb = std::async(std::launch::async, traced, s.f_B);
  auto [tc, lc] = traced(f_C);
  auto [ta, la] = fa.get();
  auto [tb, lb] = fb.get();
  RingElement defect = tc.value - tb.value + ta.value;
  return AdditivityReport{f_C, ta, tb, tc, defect, la, lb, lc};
}

}  // namespace hst
