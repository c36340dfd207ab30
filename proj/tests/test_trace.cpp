#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hstrace/oracles.hpp"
#include "hstrace/text.hpp"
#include "test_support.hpp"

using namespace hst;
using testing::Rng;

namespace {

GradedFreeModule fm(const RingSpec& r, std::vector<long> s) { return GradedFreeModule(r, std::move(s)); }

RingElement c(const RingSpec& r, long v) { return RingElement::constant(r, v); }

GradedMatrixHom diag(const RingSpec& r, std::vector<long> shifts, std::vector<RingElement> d) {
  Matrix m(r, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return GradedMatrixHom(fm(r, shifts), fm(r, shifts), 0, m);
}

}  // namespace

TEST_CASE("supertrace of identities") {
  auto z = RingSpec::integers();
  CHECK(free_trace(GradedMatrixHom::identity(fm(z, {0, 1}))).value.is_zero());
  CHECK(free_trace(GradedMatrixHom::identity(fm(z, {0, 0}))).value == c(z, 2));
  CHECK(free_trace(GradedMatrixHom::identity(fm(z, {-3, 2, 5}))).value == c(z, -1));
  CHECK_THROWS_AS(free_trace(GradedMatrixHom::zero(fm(z, {0}), fm(z, {0, 0}), 0)), ShapeMismatch);
}

TEST_CASE("degree-d maps of the two-sphere") {
  auto z = RingSpec::integers();
  for (long d = -2; d <= 3; ++d) {
    CAPTURE(d);
    auto t = free_trace(diag(z, {0, 0}, {c(z, 1), c(z, d)}));
    CHECK(t.value == c(z, 1 + d));
    CHECK(t.value == c(z, oracle::sphere_lefschetz(d)));
    CHECK(t.degree == 0);
  }
}

TEST_CASE("shift sign law on fixed examples") {
  auto z = RingSpec::integers();
  auto [a, b] = shifted_trace_check(GradedMatrixHom::identity(fm(z, {0})), 1);
  CHECK(a.value == c(z, 1));
  CHECK(b.value == c(z, -1));
  auto [p, q] = shifted_trace_check(diag(z, {0, 1}, {c(z, 5), c(z, 2)}), 1);
  CHECK(p.value == c(z, 3));
  CHECK(q.value == c(z, -3));
  auto [s, t] = shifted_trace_check(diag(z, {0, 1}, {c(z, 5), c(z, 2)}), 0);
  CHECK(s == t);
}

TEST_CASE("projective traces") {
  auto z = RingSpec::integers();
  auto p = fm(z, {0, 0});
  auto f = GradedMatrixHom(p, p, 0, Matrix::from_integers(z, {{3, 1}, {4, 2}}));
  CHECK(projective_trace(f, GradedMatrixHom::identity(p)) == free_trace(f));
  auto e = diag(z, {0, 0}, {c(z, 1), c(z, 0)});
  CHECK(projective_trace(e, e).value == c(z, 1));
  CHECK_THROWS_AS(projective_trace(f, e), InvalidArgument);  // F != e F e
  auto notidem = diag(z, {0, 0}, {c(z, 2), c(z, 0)});
  CHECK_THROWS_AS(projective_trace(notidem, notidem), InvalidArgument);

  SUBCASE("conjugated rank-one projector over a laurent ring") {
    auto r = RingSpec::laurent({"t"}, {0});
    auto q = fm(r, {0, 0});
    Matrix u(r, 2, 2);
    u(0, 0) = parse_element(r, "1");
    u(0, 1) = parse_element(r, "t + 3");
    u(1, 0) = parse_element(r, "0");
    u(1, 1) = parse_element(r, "t^-2");
    GradedMatrixHom U(q, q, 0, u);
    auto uinv = inverse(U);
    REQUIRE(uinv);
    auto e2 = compose(U, compose(diag(r, {0, 0}, {c(r, 1), c(r, 0)}), *uinv));
    CHECK(compose(e2, e2) == e2);
    CHECK(projective_trace(e2, e2).value == c(r, 1));
  }
}

TEST_CASE("hattori-stallings traces of small modules") {
  SUBCASE("identity on Z/2") {
    auto d = parse_document("ring Z\nmodule M { gens [0]; rels [[2]] }\nhom id : M -> M { lift [[1]] }");
    auto r = resolve(d.module());
    CHECK(hs_trace(d.hom(), r).value.is_zero());
    CHECK(signed_rank_sum(r) == 0);
  }
  SUBCASE("identity on a free module of rank two") {
    auto d = parse_document("ring Z\nmodule M { gens [0, 0] }\nhom id : M -> M { lift [[1, 0], [0, 1]] }");
    CHECK(hs_trace(d.hom(), resolve(d.module())).value == c(d.module().ring(), 2));
  }
  SUBCASE("multiplication by t on R/(t - 1)") {
    auto d = parse_document(R"(ring Z[t,t^-]
module M { gens [0]; rels [[t - 1]] }
hom f : M -> M { lift [[t]] }
# the same module with a redundant generator g = t e
module N { gens [0, 0]; rels [[t - 1, t], [0, -1]] }
hom g : N -> N { lift [[t, 0], [0, t]] }
)");
    auto r = resolve(d.module("M"));
    auto chain = lift_endomorphism(d.hom("f"), r);
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].matrix()(0, 0) == parse_element(d.module("M").ring(), "t"));
    CHECK(chain[1].matrix()(0, 0) == parse_element(d.module("M").ring(), "t"));
    CHECK(hs_trace(d.hom("f"), r).value.is_zero());
    REQUIRE(hom_well_defined(d.hom("g")).ok);
    CHECK(hs_trace(d.hom("g"), resolve(d.module("N"))).value.is_zero());
  }
}

TEST_CASE("base change on fixed examples") {
  auto z = RingSpec::integers();
  auto lt = RingSpec::laurent({"t"}, {0});
  auto zx = RingSpec::polynomial({"x"}, {0});
  auto f = diag(lt, {0, 0}, {parse_element(lt, "t"), parse_element(lt, "t^2")});
  auto [a, b] = base_change_trace(RingMap(lt, z, {c(z, 1)}), f);
  CHECK(a.value == c(z, 2));
  CHECK(b.value == c(z, 2));
  auto [p, q] = base_change_trace(RingMap(zx, lt, {parse_element(lt, "t + t^-1")}), diag(zx, {0}, {parse_element(zx, "x")}));
  CHECK(p.value == parse_element(lt, "t + t^-1"));
  CHECK(q == p);
  auto [s, t] = base_change_trace(RingMap::identity(lt), f);
  CHECK(s == t);
}

TEST_CASE("supertrace laws on random endomorphisms") {
  Rng rng(1234);
  for (const auto& [label, ring] : testing::test_rings()) {
    CAPTURE(label);
    for (int trial = 0; trial < 30; ++trial) {
      auto p = testing::random_free(ring, testing::uniform(rng, 1, 4), rng);
      auto f = testing::random_endo(p, 0, rng);
      auto t = free_trace(f);
      CHECK(t.value == testing::reference_supertrace(f));
      auto u = testing::random_unimodular(p, rng);
      CHECK(free_trace(compose(u, compose(f, *inverse(u)))) == t);
      long n = testing::uniform(rng, -3, 3);
      auto [a, b] = shifted_trace_check(f, n);
      CHECK(b.value == (n % 2 ? -a.value : a.value));
      auto q = testing::random_free(ring, testing::uniform(rng, 1, 3), rng);
      auto g = testing::random_endo(q, 0, rng);
      CHECK(free_trace(f.direct_sum(g)).value == t.value + free_trace(g).value);
    }
  }
}

TEST_CASE("z/2-graded modules: the trace is the even trace minus the odd trace") {
  for (auto grading : {Grading::Z, Grading::Z2}) {
    auto r = RingSpec::polynomial({"x"}, {0}, grading);
    auto even = parse_document(std::string("ring ") + r.to_string() +
                               "\nmodule M { gens [0]; rels [[x]] }\nhom f : M -> M { lift [[3]] }");
    auto odd = parse_document(std::string("ring ") + r.to_string() +
                              "\nmodule M { gens [0, 0] }\nhom f : M -> M { lift [[x, 1], [0, 2]] }");
    // even part in shift 0, odd part in shift 1
    auto sum_src = even.module().generators().direct_sum(odd.module().generators().shifted(1));
    auto rel = even.module().relations();
    GradedFreeModule rel_src(r, rel.source().shifts());
    Matrix rel_m = rel.matrix().vconcat(Matrix(r, 2, rel.matrix().cols()));
    PresentedModule total(sum_src, GradedMatrixHom(rel_src, sum_src, 1, rel_m));
    ModuleHom f(total, total,
                GradedMatrixHom(sum_src, sum_src, 0, even.hom().lift().matrix().direct_sum(odd.hom().lift().matrix())));
    auto expected = hs_trace(even.hom(), resolve(even.module())).value - hs_trace(odd.hom(), resolve(odd.module())).value;
    CHECK(hs_trace(f, resolve(total)).value == expected);
    CHECK(expected == parse_element(r, "-x - 2"));
  }
}

TEST_CASE("odd-degree endomorphisms") {
  auto z = RingSpec::integers();
  auto p = fm(z, {0, 1});
  GradedMatrixHom f(p, p, 1, Matrix::from_integers(z, {{0, 5}, {0, 0}}));
  auto t = free_trace(f);
  CHECK(t.degree == 1);
  CHECK(t.value.is_zero());
  auto g = GradedMatrixHom(fm(z, {0}), fm(z, {0}), 0, Matrix::from_integers(z, {{7}}));
  CHECK(free_trace(g.shifted(3)).value == c(z, -7));
}
