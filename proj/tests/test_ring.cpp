#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hstrace/errors.hpp"
#include "hstrace/ring.hpp"
#include "hstrace/text.hpp"
#include "test_support.hpp"

using namespace hst;

namespace {

RingElement el(const RingSpec& r, const char* text) { return parse_element(r, text); }

}  // namespace

TEST_CASE("integer arithmetic is exact beyond machine words") {
  auto z = RingSpec::integers();
  auto big = el(z, "2^100");
  auto c = big * big - el(z, "4^100");
  CHECK(c.is_zero());
  CHECK(el(z, "-(3 - 5) * 7") == RingElement::constant(z, 14));
}

TEST_CASE("polynomial arithmetic") {
  auto r = RingSpec::polynomial({"x", "y"}, {0, 0});
  auto lhs = el(r, "(x + y)^2");
  auto rhs = el(r, "x^2 + 2*x*y + y^2");
  CHECK(lhs == rhs);
  CHECK((el(r, "x - y") * el(r, "x + y")) == el(r, "x^2 - y^2"));
  CHECK(el(r, "x*y - y*x").is_zero());
  CHECK_THROWS_AS(el(r, "x^-1"), ParseError);
  CHECK_THROWS_AS(RingElement::monomial(r, {-1, 0}), InvalidArgument);
}

TEST_CASE("terms are kept in degree-reverse-lexicographic order") {
  CHECK(degrevlex_compare({2, 0}, {1, 0}) > 0);
  CHECK(degrevlex_compare({1, 1}, {2, 0}) < 0);  // same degree, smaller last exponent wins
  CHECK(degrevlex_compare({0, 2}, {1, 1}) < 0);
  CHECK(degrevlex_compare({1, 1}, {1, 1}) == 0);
  auto r = RingSpec::polynomial({"x", "y"}, {0, 0});
  auto f = el(r, "y^2 + x*y + x^2 + 1");
  CHECK(f.leading_term().exponents == Monomial{2, 0});
  CHECK(f.to_string() == "x^2 + x*y + y^2 + 1");
}

TEST_CASE("laurent units and inverses") {
  auto r = RingSpec::laurent({"t"}, {0});
  auto t = RingElement::variable(r, 0);
  CHECK(t.is_unit());
  CHECK(t.inverse().value() == el(r, "t^-1"));
  CHECK((el(r, "-t^3")).is_unit());
  CHECK_FALSE(el(r, "t + 1").is_unit());
  CHECK_FALSE(el(r, "2*t").is_unit());
  CHECK(el(r, "t^2 * t^-5") == el(r, "t^-3"));
  CHECK(el(r, "(t + t^-1)^2") == el(r, "t^2 + 2 + t^-2"));
  CHECK(el(r, "t^-2").pow(-1) == el(r, "t^2"));
  CHECK_THROWS(el(r, "(1 + t)^-1"));
}

TEST_CASE("degrees and homogeneity") {
  auto r = RingSpec::polynomial({"x", "y"}, {2, 4});
  CHECK(el(r, "x^2 + 3*y").degree() == Degree::of(4));
  CHECK(el(r, "x + y").degree().is_inhomogeneous());
  CHECK(RingElement::zero(r).degree().is_any());
  auto z2 = RingSpec::polynomial({"x"}, {2}, Grading::Z2);
  CHECK(el(z2, "x + 1").degree() == Degree::of(0));
  CHECK(z2.reduce(-3) == 1);
  CHECK_THROWS_AS(RingSpec::polynomial({"x"}, {1}), InvalidArgument);
  CHECK_THROWS_AS(RingSpec::polynomial({"x", "x"}, {0, 0}), InvalidArgument);
}

TEST_CASE("elements print in a form that parses back") {
  testing::Rng rng(7);
  for (const auto& [label, ring] : testing::test_rings()) {
    CAPTURE(label);
    for (int i = 0; i < 40; ++i) {
      auto a = testing::random_homogeneous(ring, 2 * testing::uniform(rng, -1, 1), rng, 4);
      CHECK(parse_element(ring, a.to_string()) == a);
    }
  }
}

TEST_CASE("ring operations across rings throw") {
  auto a = RingSpec::polynomial({"x"}, {0});
  auto b = RingSpec::polynomial({"y"}, {0});
  CHECK_THROWS_AS(RingElement::variable(a, 0) + RingElement::variable(b, 0), RingMismatch);
  CHECK(a == RingSpec::polynomial({"x"}, {0}));
  CHECK(a != RingSpec::laurent({"x"}, {0}));
}

TEST_CASE("ring maps") {
  auto zx = RingSpec::polynomial({"x"}, {0});
  auto lt = RingSpec::laurent({"t"}, {0});
  auto z = RingSpec::integers();
  RingMap restrict(zx, lt, {el(lt, "t + t^-1")});
  CHECK(restrict(el(zx, "x^2 - 2")) == el(lt, "t^2 + t^-2"));
  RingMap augment(lt, z, {RingElement::one(z)});
  CHECK(augment(el(lt, "3*t^-4 - t^2")) == RingElement::constant(z, 2));
  // generator images of a Laurent ring must be units
  CHECK_THROWS_AS(RingMap(lt, zx, {el(zx, "x")}), InvalidArgument);
  // degree preservation
  auto graded = RingSpec::polynomial({"x"}, {2});
  CHECK_THROWS_AS(RingMap(graded, zx, {el(zx, "x")}), NotHomogeneous);
  RingMap ok(graded, RingSpec::laurent({"t"}, {2}), {el(RingSpec::laurent({"t"}, {2}), "-t")});
  CHECK(ok(el(graded, "x^3")) == el(RingSpec::laurent({"t"}, {2}), "-t^3"));
  // ring map composes with multiplication
  testing::Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    auto a = testing::random_homogeneous(zx, 0, rng, 3);
    auto b = testing::random_homogeneous(zx, 0, rng, 3);
    CHECK(restrict(a * b) == restrict(a) * restrict(b));
    CHECK(restrict(a + b) == restrict(a) + restrict(b));
  }
}
