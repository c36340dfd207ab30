#include "hstrace/oracles.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>

#include "hstrace/errors.hpp"

namespace hst::oracle {

namespace {

using cplx = std::complex<double>;

constexpr double kNewtonTolerance = 1e-12;
constexpr double kMergeTolerance = 1e-6;
constexpr double kDegenerateTolerance = 1e-6;
constexpr double kStep = 1e-6;
constexpr double kFar = 1e8;
constexpr int kNewtonIterations = 80;

struct SphereMap {
  std::function<cplx(cplx)> near;  // the map in the chart z, with z and f(z) finite
  std::function<cplx(cplx)> far;   // the map in the chart w = 1 / z
};

cplx ipow(cplx z, long k) {
  cplx r = 1;
  for (long i = 0; i < k; ++i) r *= z;
  return r;
}

SphereMap standard_map(long d) {
  if (d == 1) return {[](cplx z) { return 2.0 * z; }, [](cplx w) { return w / 2.0; }};
  if (d >= 2) return {[d](cplx z) { return ipow(z, d); }, [d](cplx w) { return ipow(w, d); }};
  if (d == 0) return {[](cplx) { return cplx(1); }, [](cplx) { return cplx(1); }};
  if (d == -1)
    return {[](cplx z) { return -1.0 / std::conj(z); }, [](cplx w) { return -1.0 / std::conj(w); }};
  long k = -d;
  return {[k](cplx z) { return 1.0 / ipow(std::conj(z), k); }, [k](cplx w) { return 1.0 / ipow(std::conj(w), k); }};
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()) && std::abs(z) < kFar; }

// real Jacobian of g at z by central differences
std::array<double, 4> jacobian(const std::function<cplx(cplx)>& g, cplx z) {
  cplx dx = (g(z + cplx(kStep, 0)) - g(z - cplx(kStep, 0))) / (2 * kStep);
  cplx dy = (g(z + cplx(0, kStep)) - g(z - cplx(0, kStep))) / (2 * kStep);
  return {dx.real(), dy.real(), dx.imag(), dy.imag()};
}

std::optional<cplx> newton(const std::function<cplx(cplx)>& g, cplx z) {
  for (int it = 0; it < kNewtonIterations; ++it) {
    cplx gz = g(z);
    if (!finite(gz) || !finite(z)) return std::nullopt;
    cplx r = gz - z;
    if (std::abs(r) < kNewtonTolerance) return z;
    auto j = jacobian(g, z);
    // F = g - id
    double a = j[0] - 1, b = j[1], c = j[2], e = j[3] - 1;
    double det = a * e - b * c;
    if (std::abs(det) < 1e-14) return std::nullopt;
    double sx = (e * r.real() - b * r.imag()) / det;
    double sy = (-c * r.real() + a * r.imag()) / det;
    z -= cplx(sx, sy);
  }
  cplx gz = g(z);
  if (finite(gz) && std::abs(gz - z) < kNewtonTolerance) return z;
  return std::nullopt;
}

std::array<double, 3> on_sphere(cplx z, bool far_chart) {
  if (far_chart) {
    if (std::abs(z) < 1e-300) return {0, 0, 1};
    z = 1.0 / z;
  }
  double n = std::norm(z);
  return {2 * z.real() / (1 + n), 2 * z.imag() / (1 + n), (n - 1) / (n + 1)};
}

}  // namespace

std::vector<FixedPoint> sphere_fixed_points(long d) {
  SphereMap f = standard_map(d);
  std::vector<FixedPoint> found;
  std::vector<std::array<double, 3>> seen;
  const int radii = 16, angles = 40;
  for (int chart = 0; chart < 2; ++chart) {
    const auto& g = chart == 0 ? f.near : f.far;
    for (int ri = 0; ri <= radii; ++ri) {
      double r = 1.2 * ri / radii;
      for (int ai = 0; ai < (ri == 0 ? 1 : angles); ++ai) {
        double theta = 2 * std::numbers::pi * (ai + 0.37) / angles;
        auto root = newton(g, std::polar(r, theta));
        if (!root) continue;
        auto p = on_sphere(*root, chart == 1);
        bool dup = false;
        for (const auto& q : seen)
          if (std::hypot(p[0] - q[0], p[1] - q[1], p[2] - q[2]) < kMergeTolerance) dup = true;
        if (dup) continue;
        auto j = jacobian(g, *root);
        double det = (1 - j[0]) * (1 - j[3]) - j[1] * j[2];
        if (std::abs(det) < kDegenerateTolerance)
          throw InternalError("sphere oracle: degenerate fixed point for degree " + std::to_string(d));
        seen.push_back(p);
        found.push_back(FixedPoint{{root->real(), root->imag()}, chart == 1, det > 0 ? 1 : -1});
      }
    }
  }
  return found;
}

long sphere_lefschetz(long d) {
  long sum = 0;
  for (const auto& p : sphere_fixed_points(d)) sum += p.index;
  return sum;
}

long circle_lefschetz(long d) {
  if (d == 1) return 0;  // homotopic to a fixed-point-free rotation
  // candidates j / N with N = |d - 1|; x is fixed iff (d - 1) x is an integer
  long n = std::labs(d - 1);
  long sum = 0;
  int index = d < 1 ? 1 : -1;  // sign(1 - d)
  for (long j = 0; j < n; ++j)
    if (((d - 1) * j) % n == 0) sum += index;
  return sum;
}

long det_identity_minus(const std::array<std::array<long, 2>, 2>& m) {
  // Leibniz over the two permutations of {0, 1}
  long a = 1 - m[0][0], b = -m[0][1], c = -m[1][0], e = 1 - m[1][1];
  return a * e - b * c;
}

std::vector<FixedPoint> torus_fixed_points(const std::array<std::array<long, 2>, 2>& m) {
  long det = det_identity_minus(m);
  std::vector<FixedPoint> out;
  if (det == 0) return out;
  long n = std::labs(det);
  int index = det > 0 ? 1 : -1;
  // every fixed point of M - I on the torus has coordinates in (1/n) Z
  long a = m[0][0] - 1, b = m[0][1], c = m[1][0], e = m[1][1] - 1;
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y) {
      long u = a * x + b * y, v = c * x + e * y;
      if (u % n == 0 && v % n == 0)
        out.push_back(FixedPoint{{double(x) / double(n), double(y) / double(n)}, false, index});
    }
  return out;
}

long torus_lefschetz(const std::array<std::array<long, 2>, 2>& m) {
  long sum = 0;
  for (const auto& p : torus_fixed_points(m)) sum += p.index;
  return sum;
}

Integer projective_lefschetz(long n, long q) {
  if (n < 0 || q < 0) throw InvalidArgument("projective oracle: n and q must be non-negative");
  if (n > 24) throw InvalidArgument("projective oracle: n too large for subset enumeration");
  if (q == 0) return 1;
  Integer total = 0;
  for (unsigned long s = 1; s < (1ul << (n + 1)); ++s) {
    int size = __builtin_popcountl(s);
    if (q == 1) {
      // a generic diagonal map fixes only the coordinate points
      if (size == 1) total += 1;
      continue;
    }
    // first nonzero coordinate normalised to 1, the others are (q-1)-th roots of unity
    Integer choices = 1;
    for (int k = 1; k < size; ++k) choices *= (q - 1);
    total += choices;
  }
  return total;
}

}  // namespace hst::oracle
