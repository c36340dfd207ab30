#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "hstrace/oracles.hpp"
#include "hstrace/text.hpp"

using namespace hst;

TEST_CASE("sphere fixed points") {
  // z^d has 0, infinity and the (d-1)-th roots of unity
  for (long d = 2; d <= 5; ++d) {
    auto pts = oracle::sphere_fixed_points(d);
    CHECK(pts.size() == static_cast<std::size_t>(d + 1));
    CHECK(std::all_of(pts.begin(), pts.end(), [](const auto& p) { return p.index == 1; }));
  }
  CHECK(oracle::sphere_fixed_points(-1).empty());
  CHECK(oracle::sphere_fixed_points(0).size() == 1);
  // 1 / conj(z)^2: |z| = 1 forces conj(z) = 1, a single fixed point of index -1
  auto neg = oracle::sphere_fixed_points(-2);
  REQUIRE(neg.size() == 1);
  CHECK(neg[0].index == -1);
  for (long d = -3; d <= 4; ++d) CHECK(oracle::sphere_lefschetz(d) == 1 + d);
}

TEST_CASE("circle and torus oracles") {
  for (long d = -4; d <= 5; ++d) CHECK(oracle::circle_lefschetz(d) == 1 - d);
  using M = std::array<std::array<long, 2>, 2>;
  for (M m : {M{{{2, 1}, {1, 1}}}, M{{{2, 0}, {0, 2}}}, M{{{0, 1}, {1, 0}}}, M{{{-1, 0}, {0, -1}}},
              M{{{1, 1}, {0, 1}}}, M{{{3, 2}, {-1, 4}}}}) {
    long det = (1 - m[0][0]) * (1 - m[1][1]) - m[0][1] * m[1][0];
    CHECK(oracle::det_identity_minus(m) == det);
    CHECK(oracle::torus_lefschetz(m) == det);
    CHECK(oracle::torus_fixed_points(m).size() == static_cast<std::size_t>(std::abs(det)));
  }
}

TEST_CASE("projective oracle") {
  // fixed points of the q-th power map: 1 + q + ... + q^n
  for (long n = 0; n <= 4; ++n)
    for (long q = 2; q <= 4; ++q) {
      long geometric = 0, p = 1;
      for (long k = 0; k <= n; ++k, p *= q) geometric += p;
      CHECK(oracle::projective_lefschetz(n, q) == Integer(geometric));
    }
  CHECK(oracle::projective_lefschetz(3, 1) == Integer(4));
  CHECK(oracle::projective_lefschetz(3, 0) == Integer(1));
}

TEST_CASE("the catalog") {
  auto cases = load_catalog();
  REQUIRE(cases.size() >= 10);
  std::set<OracleKind> kinds;
  for (const auto& c : cases) kinds.insert(c.oracle.kind);
  CHECK(kinds.size() == 6);
  CHECK(std::is_sorted(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.name < b.name; }));
  auto reports = run_suite(cases);
  REQUIRE(reports.size() == cases.size());
  for (const auto& r : reports) {
    CAPTURE(r.name);
    CHECK(r.error.empty());
    CHECK(r.match);
    REQUIRE(r.computed);
    REQUIRE(r.expected);
    CHECK(*r.computed == *r.expected);
  }
  CHECK(std::is_sorted(reports.begin(), reports.end(), [](const auto& a, const auto& b) { return a.name < b.name; }));
}

TEST_CASE("filters and directories") {
  auto cases = load_catalog();
  CHECK(run_suite(cases, "no-such-case").empty());
  auto tori = run_suite(cases, "torus-");
  CHECK(!tori.empty());
  for (const auto& r : tori) CHECK(r.name.find("torus-") != std::string::npos);

  auto dir = std::filesystem::temp_directory_path() / "hstrace_catalog_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  CHECK(load_catalog(dir).empty());
  std::ofstream(dir / "a.case") << "ring Z\nmodule A { gens [0] }\nhom i : A -> A { lift [[1]] }\n"
                                   "case dup { even A; odd A; endo_even i; endo_odd i; oracle rank-sum; provenance \"t\" }\n";
  std::ofstream(dir / "b.case") << "ring Z\nmodule A { gens [0] }\nhom i : A -> A { lift [[1]] }\n"
                                   "case dup { even A; odd A; endo_even i; endo_odd i; oracle rank-sum; provenance \"t\" }\n";
  CHECK_THROWS(load_catalog(dir));
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(load_catalog(dir), InvalidArgument);
}

TEST_CASE("mismatches and failures are reported") {
  auto doc = parse_document(R"(ring Z
module A { gens [0] }
hom two : A -> A { lift [[2]] }
hom one : A -> A { lift [[1]] }
case wrong { even A; odd A; endo_even two; endo_odd one; oracle hand "0"; provenance "test" }
case not-identity { even A; odd A; endo_even two; endo_odd one; oracle rank-sum; provenance "test" }
)");
  auto wrong = run_case(doc.cases.at("wrong").value);
  CHECK_FALSE(wrong.match);
  CHECK(wrong.computed->value == RingElement::constant(RingSpec::integers(), 1));
  auto bad = run_case(doc.cases.at("not-identity").value);
  CHECK_FALSE(bad.match);
  CHECK_FALSE(bad.error.empty());
}
