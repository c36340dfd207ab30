#pragma once

#include <array>
#include <vector>

#include "hstrace/ring.hpp"

namespace hst::oracle {

/// A fixed point with its index sign(det(I - Df)).
struct FixedPoint {
  std::array<double, 2> where;  // chart coordinates (real, imaginary) or torus coordinates
  bool at_infinity = false;
  int index = 0;
};

/// Isolated fixed points of a standard degree-d self-map of the Riemann sphere,
/// found by Newton iteration from a grid in both charts:
///   d >= 1: z -> 2 z for d = 1, z -> z^d otherwise
///   d = 0: z -> 1
///   d = -1: z -> -1 / conj(z) (antipodal)
///   d <= -2: z -> 1 / conj(z)^|d|
std::vector<FixedPoint> sphere_fixed_points(long d);

/// Sum of the indices of the sphere fixed points.
long sphere_lefschetz(long d);

/// x -> d x on R/Z (a small rotation for d = 1): sum of indices.
long circle_lefschetz(long d);

/// Fixed points of x -> M x on R^2/Z^2 by lattice enumeration; empty when
/// det(I - M) = 0 (fixed points not isolated).
std::vector<FixedPoint> torus_fixed_points(const std::array<std::array<long, 2>, 2>& m);

/// Leibniz determinant of I - M.
long det_identity_minus(const std::array<std::array<long, 2>, 2>& m);

/// Index sum of the torus map; 0 when det(I - M) = 0.
long torus_lefschetz(const std::array<std::array<long, 2>, 2>& m);

/// Number of fixed points of [z_i] -> [z_i^q] on CP^n (q >= 2), or of a
/// generic diagonal map for q = 1, or of a constant map for q = 0, by
/// enumerating the support subsets. Every index is +1.
Integer projective_lefschetz(long n, long q);

}  // namespace hst::oracle
