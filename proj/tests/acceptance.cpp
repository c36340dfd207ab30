// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hstrace/oracles.hpp"
#include "hstrace/smith.hpp"
#include "hstrace/text.hpp"
#include "test_support.hpp"

using namespace hst;
using testing::Rng;
using testing::coin;
using testing::uniform;

namespace {

// Pinned limits.
constexpr double kSupertraceSeconds = 30.0;
constexpr double kAdditivitySeconds = 120.0;
constexpr double kCatalogSeconds = 60.0;
constexpr int kSupertraceCorpus = 1200;
constexpr int kResolutionModules = 30;
constexpr int kSequences = 60;
constexpr int kBaseChangePairs = 240;
constexpr int kSmithMatrices = 300;
constexpr std::size_t kSmithMaxDim = 6;
constexpr long kZigzagShiftBound = 3;
constexpr std::size_t kZigzagMaxRank = 4;

struct Outcome {
  bool pass = true;
  std::string detail;
  long failures = 0;

  void fail(const std::string& why) {
    if (failures++ == 0) detail = why;
    pass = false;
  }
};

// Resolutions produced along the way; all of them are re-verified in criterion 7.
std::vector<Resolution> g_resolutions;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<GradedMatrixHom> supertrace_corpus(Rng& rng) {
  std::vector<GradedMatrixHom> out;
  auto rings = testing::test_rings();
  for (int k = 0; k < kSupertraceCorpus; ++k) {
    const auto& ring = rings[k % rings.size()].ring;
    auto p = testing::random_free(ring, uniform(rng, 1, 5), rng, -3, 3);
    long degree = ring.var_degrees().empty() || ring.var_degrees()[0] == 0 ? 0 : 2 * uniform(rng, -1, 1);
    out.push_back(testing::random_endo(p, degree, rng));
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome supertrace_laws(const std::vector<GradedMatrixHom>& corpus, Rng& rng) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& f = corpus[k];
    const auto& p = f.source();
    auto tr = free_trace(f);
    if (tr.value != testing::reference_supertrace(f)) o.fail("supertrace differs from the parity count");
    auto u = testing::random_unimodular(p, rng);
    auto conj = compose(compose(u, f), *inverse(u));
    if (!(free_trace(conj) == tr)) o.fail("not invariant under conjugation");
    long n = uniform(rng, -3, 3);
    std::vector<long> shifted;
    for (auto s : p.shifts()) shifted.push_back(s + n);
    GradedFreeModule pn(p.ring(), shifted);
    GradedMatrixHom fn(pn, pn, f.degree(), f.matrix());
    if (free_trace(fn).value != tr.value * RingElement::constant(p.ring(), parity_sign(n)))
      o.fail("shift-sign law fails");
    const auto& g = corpus[(k + 1) % corpus.size()];
    if (g.ring() == f.ring() && f.ring().degrees_equal(g.degree(), f.degree())) {
      GradedMatrixHom sum(p.direct_sum(g.source()), p.direct_sum(g.source()), f.degree(),
                          f.matrix().direct_sum(g.matrix()));
      if (free_trace(sum).value != tr.value + free_trace(g).value) o.fail("direct-sum additivity fails");
    }
  }
  double secs = seconds_since(t0);
  if (secs >= kSupertraceSeconds) o.fail("too slow");
  o.detail = std::to_string(corpus.size()) + " endomorphisms, " + std::to_string(secs).substr(0, 5) + " s" +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

void all_patterns(std::size_t rank, std::vector<long>& cur, const std::function<void(const std::vector<long>&)>& fn) {
  if (cur.size() == rank) return fn(cur);
  for (long s = -kZigzagShiftBound; s <= kZigzagShiftBound; ++s) {
    cur.push_back(s);
    all_patterns(rank, cur, fn);
    cur.pop_back();
  }
}

Outcome categorical_equals_matrix(const std::vector<GradedMatrixHom>& corpus) {
  Outcome o;
  for (const auto& f : corpus)
    if (!(categorical_trace(f, standard_duality(f.source())) == free_trace(f)))
      o.fail("categorical trace differs on " + f.source().to_string());
  long patterns = 0;
  auto z = RingSpec::integers();
  for (std::size_t rank = 0; rank <= kZigzagMaxRank; ++rank) {
    std::vector<long> cur;
    all_patterns(rank, cur, [&](const std::vector<long>& shifts) {
      ++patterns;
      if (!zigzag_check(standard_duality(GradedFreeModule(z, shifts))))
        o.fail("zigzag fails on " + GradedFreeModule(z, shifts).to_string());
    });
  }
  o.detail = std::to_string(corpus.size()) + " traces, " + std::to_string(patterns) + " shift patterns" +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome hs_well_defined(Rng& rng) {
  Outcome o;
  auto rings = testing::test_rings();
  int modules = 0;
  for (int k = 0; modules < kResolutionModules; ++k) {
    const auto& ring = rings[k % rings.size()].ring;
    auto m = testing::random_module(ring, rng);
    auto r1 = resolve(m);
    if (r1.length() == 0) continue;  // free modules admit no interesting second resolution
    ++modules;
    // second resolution: a trivial summand at a random stage, then a basis change
    std::size_t j = uniform(rng, 0, static_cast<long>(r1.length()));
    auto r2 = testing::elementary_expansion(r1, j, uniform(rng, -2, 2));
    std::size_t jb = uniform(rng, 0, static_cast<long>(r2.length()));
    r2 = testing::change_basis(r2, jb, testing::random_unimodular(r2.modules[jb], rng));
    for (const auto* r : {&r1, &r2}) {
      auto check = verify_resolution(*r);
      if (!check.ok) o.fail("resolution fails verification: " + check.failure);
      g_resolutions.push_back(*r);
    }
    long degree = ring.var_degrees().empty() || ring.var_degrees()[0] == 0 ? 0 : 2 * uniform(rng, 0, 1);
    auto f = testing::random_module_endo(m, degree, rng);
    std::vector<TraceValue> values;
    for (const auto* r : {&r1, &r2}) {
      auto lift = lift_endomorphism(f, *r);
      auto other = testing::perturb_by_homotopy(lift, *r, degree, rng);
      for (const auto* chain : {&lift, &other}) {
        if (!is_chain_lift(f, *r, *chain)) o.fail("not a chain lift");
        values.push_back(chain_trace(*chain, degree));
      }
    }
    for (const auto& v : values)
      if (!(v == values[0])) o.fail("traces differ on " + m.to_string() + ": " + v.to_string() + " vs " +
                                    values[0].to_string());
    if (!(hs_trace(f, r1) == values[0])) o.fail("hs_trace differs from the lifted chain trace");
  }
  o.detail = std::to_string(modules) + " modules x 2 resolutions x 2 lifts" + (o.pass ? "" : "; " + o.detail);
  return o;
}

// Three families of short exact sequences, all with degree-0 endomorphisms.
SESWithEndos split_sequence(const RingSpec& ring, Rng& rng) {
  auto A = testing::random_module(ring, rng, 2, 2);
  auto C = testing::random_module(ring, rng, 2, 2);
  const auto& ga = A.generators();
  const auto& gc = C.generators();
  auto gens = ga.direct_sum(gc);
  GradedMatrixHom rel(A.relations().source().direct_sum(C.relations().source()), gens, 1,
                      A.relations().matrix().direct_sum(C.relations().matrix()));
  PresentedModule B(gens, rel);
  Matrix inc(ring, gens.rank(), ga.rank()), proj(ring, gc.rank(), gens.rank());
  for (std::size_t i = 0; i < ga.rank(); ++i) inc(i, i) = RingElement::one(ring);
  for (std::size_t i = 0; i < gc.rank(); ++i) proj(i, ga.rank() + i) = RingElement::one(ring);
  auto fa = testing::random_module_endo(A, 0, rng);
  auto fc = testing::random_module_endo(C, 0, rng);
  // an off-diagonal block C -> A is allowed when C is free
  Matrix off(ring, ga.rank(), gc.rank());
  if (C.relations().source().rank() == 0) off = testing::random_hom(gc, ga, 0, rng).matrix();
  Matrix fb = fa.lift().matrix().hconcat(off).vconcat(Matrix(ring, gc.rank(), ga.rank()).hconcat(fc.lift().matrix()));
  return {A, B, C, ModuleHom(A, B, GradedMatrixHom(ga, gens, 0, inc)),
          ModuleHom(B, C, GradedMatrixHom(gens, gc, 0, proj)), fa,
          ModuleHom(B, B, GradedMatrixHom(gens, gens, 0, fb))};
}

RingElement nonunit_scalar(const RingSpec& ring, Rng& rng) {
  if (ring.num_vars() == 0) return RingElement::constant(ring, uniform(rng, 2, 4));
  auto x = RingElement::variable(ring, 0);
  return coin(rng) ? x - RingElement::one(ring) : x + RingElement::constant(ring, uniform(rng, 2, 3));
}

// B free, a = c times the inclusion of the first k coordinates, f_B block upper triangular.
SESWithEndos scaled_inclusion_sequence(const RingSpec& ring, Rng& rng) {
  std::size_t n = uniform(rng, 1, 4), k = uniform(rng, 1, static_cast<long>(n));
  auto gens = testing::random_free(ring, n, rng, -1, 1);
  auto c = nonunit_scalar(ring, rng);
  std::vector<long> a_shifts(gens.shifts().begin(), gens.shifts().begin() + k);
  GradedFreeModule ga(ring, a_shifts);
  Matrix inc(ring, n, k);
  for (std::size_t i = 0; i < k; ++i) inc(i, i) = c;
  auto A = PresentedModule::free(ga);
  auto B = PresentedModule::free(gens);
  auto C = PresentedModule::from_relations(gens, inc);
  Matrix fb = testing::random_endo(gens, 0, rng).matrix();
  for (std::size_t i = k; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) fb(i, j) = RingElement::zero(ring);
  Matrix fa(ring, k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) fa(i, j) = fb(i, j);
  return {A, B, C, ModuleHom(A, B, GradedMatrixHom(ga, gens, 0, inc)),
          ModuleHom(B, C, GradedMatrixHom::identity(gens)), ModuleHom(A, A, GradedMatrixHom(ga, ga, 0, fa)),
          ModuleHom(B, B, GradedMatrixHom(gens, gens, 0, fb))};
}

// A = R, a = a random vector v, f_B = lambda + v w, f_A = lambda + w v.
SESWithEndos vector_sequence(const RingSpec& ring, Rng& rng) {
  std::size_t n = uniform(rng, 1, 3);
  auto gens = testing::random_free(ring, n, rng, -1, 1);
  GradedFreeModule ga(ring, {gens.shift(0)});
  Matrix v;
  do v = testing::random_hom(ga, gens, 0, rng).matrix();
  while (v.is_zero());
  auto lambda = testing::random_homogeneous(ring, 0, rng);
  Matrix w = testing::random_hom(gens, ga, 0, rng, 0.5).matrix();
  Matrix fb = Matrix::identity(ring, n).scaled(lambda) + v * w;
  Matrix fa = Matrix::identity(ring, 1).scaled(lambda) + w * v;
  auto A = PresentedModule::free(ga);
  auto B = PresentedModule::free(gens);
  auto C = PresentedModule::from_relations(gens, v);
  return {A, B, C, ModuleHom(A, B, GradedMatrixHom(ga, gens, 0, v)),
          ModuleHom(B, C, GradedMatrixHom::identity(gens)), ModuleHom(A, A, GradedMatrixHom(ga, ga, 0, fa)),
          ModuleHom(B, B, GradedMatrixHom(gens, gens, 0, fb))};
}

Outcome additivity(Rng& rng) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<RingSpec> rings{RingSpec::integers(), RingSpec::polynomial({"x"}, {0}), RingSpec::laurent({"t"}, {0})};
  std::map<std::string, int> counts;
  int nonzero_c = 0;
  for (int k = 0; k < kSequences; ++k) {
    const auto& ring = rings[k % rings.size()];
    int family = (k / static_cast<int>(rings.size())) % 3;
    auto s = family == 0 ? split_sequence(ring, rng)
             : family == 1 ? scaled_inclusion_sequence(ring, rng)
                           : vector_sequence(ring, rng);
    counts[family == 0 ? "split" : "non-split"]++;
    auto check = validate_ses(s);
    if (!check.ok) {
      o.fail("generated sequence is not exact: " + check.failure);
      continue;
    }
    auto rep = additivity_check(s);
    if (!rep.defect.is_zero()) o.fail("defect " + rep.defect.to_string());
    if (!rep.trace_C.value.is_zero()) ++nonzero_c;
    // over free A and B the traces are plain supertraces
    if (s.A.relations().source().rank() == 0 && rep.trace_A.value != free_trace(s.f_A.lift()).value)
      o.fail("trace of A differs from its supertrace");
  }
  double secs = seconds_since(t0);
  if (secs >= kAdditivitySeconds) o.fail("too slow");
  o.detail = std::to_string(kSequences) + " sequences (" + std::to_string(counts["split"]) + " split, " +
             std::to_string(counts["non-split"]) + " non-split, " + std::to_string(nonzero_c) +
             " with nonzero trace on C), " + std::to_string(secs).substr(0, 5) + " s" +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome catalog() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto cases = load_catalog();
  auto reports = run_suite(cases);
  std::map<std::string, const ExampleCase*> by_name;
  for (const auto& c : cases) by_name[c.name] = &c;
  int sphere = 0, torus = 0;
  for (const auto& r : reports) {
    if (!r.match) o.fail(r.name + (r.error.empty() ? " mismatches" : ": " + r.error));
    const auto& c = *by_name.at(r.name);
    if (!r.computed) continue;
    const auto& z = r.computed->value.ring();
    if (c.oracle.kind == OracleKind::Sphere) {
      long d = c.oracle.params.at(0);
      ++sphere;
      if (oracle::sphere_lefschetz(d) != 1 + d) o.fail("fixed-point count for degree " + std::to_string(d));
      if (r.computed->value != RingElement::constant(z, 1 + d)) o.fail(r.name + " is not 1 + d");
    } else if (c.oracle.kind == OracleKind::Torus) {
      const auto& m = c.oracle.matrix;
      long det = (1 - m[0][0]) * (1 - m[1][1]) - m[0][1] * m[1][0];
      ++torus;
      if (r.computed->value != RingElement::constant(z, det)) o.fail(r.name + " is not det(I - M)");
    }
  }
  for (long d = -2; d <= 3; ++d) {
    std::string n = d < 0 ? "neg" + std::to_string(-d) : std::to_string(d);
    if (!by_name.count("sphere2-degree-" + n)) o.fail("missing sphere2-degree-" + n);
  }
  double secs = seconds_since(t0);
  if (secs >= kCatalogSeconds) o.fail("too slow");
  o.detail = std::to_string(reports.size()) + " cases (" + std::to_string(sphere) + " sphere, " +
             std::to_string(torus) + " torus), " + std::to_string(secs).substr(0, 5) + " s" +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome base_change(Rng& rng) {
  Outcome o;
  auto zx = RingSpec::polynomial({"x"}, {0});
  auto zt = RingSpec::laurent({"t"}, {0});
  auto z = RingSpec::integers();
  auto zxy = RingSpec::polynomial({"x", "y"}, {2, 2});
  auto zt2 = RingSpec::laurent({"t"}, {2});
  auto t = RingElement::variable(zt, 0);
  std::vector<RingMap> maps{
      RingMap(zt, z, {RingElement::one(z)}),
      RingMap(zx, zt, {t + RingElement::monomial(zt, {-1})}),
      RingMap(zx, z, {RingElement::constant(z, 2)}),
      RingMap(zxy, zt2, {RingElement::variable(zt2, 0), RingElement::monomial(zt2, {1}, 3)}),
      RingMap(zt, zt, {RingElement::monomial(zt, {-1})}),
  };
  for (int k = 0; k < kBaseChangePairs; ++k) {
    const auto& phi = maps[k % maps.size()];
    auto p = testing::random_free(phi.source(), uniform(rng, 1, 4), rng, -3, 3);
    auto f = testing::random_endo(p, 0, rng);
    auto [lhs, rhs] = base_change_trace(phi, f);
    if (!(lhs == rhs)) o.fail("phi(tr F) != tr(phi F) for " + f.matrix().to_string());
    if (phi(testing::reference_supertrace(f)) != testing::reference_supertrace(hst::base_change(phi, f)))
      o.fail("reference traces disagree");
  }
  o.detail = std::to_string(kBaseChangePairs) + " pairs over " + std::to_string(maps.size()) + " ring maps" +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

bool recombines(const Submodule& s, const Vector& v) {
  auto nf = s.normal_form(v);
  const auto& g = s.generators().matrix();
  for (std::size_t i = 0; i < v.size(); ++i) {
    RingElement sum = nf.remainder[i];
    for (std::size_t k = 0; k < g.cols(); ++k) sum += g(i, k) * nf.certificate[k];
    if (sum != v[i]) return false;
  }
  return true;
}

Outcome engine_soundness(Rng& rng) {
  Outcome o;
  auto rings = testing::test_rings();
  for (int k = 0; k < 40; ++k) g_resolutions.push_back(resolve(testing::random_module(rings[k % rings.size()].ring, rng)));
  for (const auto& r : g_resolutions) {
    for (std::size_t j = 0; j + 1 < r.boundaries.size(); ++j)
      if (!(r.boundaries[j].matrix() * r.boundaries[j + 1].matrix()).is_zero()) o.fail("d o d != 0");
    auto check = verify_resolution(r);
    if (!check.ok) o.fail("resolution: " + check.failure);
  }
  int normal_forms = 0;
  for (int k = 0; k < 100; ++k) {
    const auto& ring = rings[k % rings.size()].ring;
    auto tgt = testing::random_free(ring, uniform(rng, 1, 3), rng, -1, 1);
    auto src = testing::random_free(ring, uniform(rng, 0, 4), rng, -1, 1);
    Submodule s(testing::random_hom(src, tgt, 0, rng));
    auto member = s.generators().matrix() * testing::random_hom(GradedFreeModule(ring, {0}), src, 0, rng).matrix();
    auto other = testing::random_hom(GradedFreeModule(ring, {0}), tgt, 0, rng).matrix();
    if (!s.contains(member.column(0))) o.fail("combination of generators is not a member");
    for (const auto& v : {member.column(0), other.column(0)}) {
      ++normal_forms;
      if (!recombines(s, v)) o.fail("normal form does not recombine");
    }
  }
  for (int k = 0; k < kSmithMatrices; ++k) {
    std::size_t rows = uniform(rng, 1, kSmithMaxDim), cols = uniform(rng, 1, kSmithMaxDim);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -9, 9);
    auto s = smith_normal_form(m);
    if (!(s.U * s.D * s.V == m)) o.fail("U D V != M");
    if (abs(int_determinant(s.U)) != 1 || abs(int_determinant(s.V)) != 1) o.fail("U or V not unimodular");
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j && s.D(i, j) != 0) o.fail("D not diagonal");
  }
  o.detail = std::to_string(g_resolutions.size()) + " resolutions, " + std::to_string(normal_forms) +
             " normal forms, " + std::to_string(kSmithMatrices) + " Smith forms" + (o.pass ? "" : "; " + o.detail);
  return o;
}

}  // namespace

int main() {
  Rng rng(20240611);
  auto corpus = supertrace_corpus(rng);
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"supertrace laws", [&] { return supertrace_laws(corpus, rng); }},
      {"categorical trace equals matrix trace", [&] { return categorical_equals_matrix(corpus); }},
      {"trace independent of resolution and lift", [&] { return hs_well_defined(rng); }},
      {"additivity on short exact sequences", [&] { return additivity(rng); }},
      {"Lefschetz catalog", [] { return catalog(); }},
      {"base change", [&] { return base_change(rng); }},
      {"engine soundness", [&] { return engine_soundness(rng); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::printf("[%s] criterion %zu: %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
