#pragma once

#include <cstdint>
#include <span>

#include "realroots/geometry.hpp"
#include "realroots/lattice.hpp"

namespace realroots {

struct MVEstimate {
  double value = 0.0;
  double std_error = 0.0;     // sample standard deviation / sqrt(samples)
  std::int64_t samples = 0;   // 0 marks a deterministic (no-sampling) result
  std::uint64_t seed = 0;
};

struct RootStatistics {
  double expected_real = 0.0;  // roots per system
  double bkk = 0.0;            // complex roots per system
  double fraction = 0.0;       // expected_real / bkk, clamped into [0, 1]
};

/// Mixed volume V(P_1,...,P_n) by polarization over Minkowski sums of
/// subsets: exact rational, n <= 3. Normalized so V(P,...,P) = vol(P).
Rational mixed_volume_polytopes(std::span<const LatticePolytope> polytopes);

/// Monte Carlo mixed volume of ellipsoids from the Gaussian-determinant
/// identity V(E_1,...,E_n) = (kappa_n / d_n) E|det(X_1,...,X_n)| with
/// X_i ~ N(0, M_i) and d_n the absolute-determinant moment of a standard
/// Gaussian matrix. Exact shortcuts (n = 1, identical shapes, balls,
/// rank-1 pairs in 2D) skip sampling and return std_error 0, samples 0.
/// Bitwise deterministic for fixed (seed, workers).
MVEstimate mixed_volume_ellipsoids(std::span<const Ellipsoid> ellipsoids,
                                   std::int64_t samples, std::uint64_t seed,
                                   int workers = 1);

/// Independent 2D cross-check: V(E1,E2) from planar support-function
/// quadrature of the Minkowski-sum area, with spectral differentiation of
/// the summed support function. Requires positive-definite shapes for full
/// accuracy (corners of degenerate bodies spoil the spectral derivative).
double mixed_volume_ellipsoids_oracle_2d(const Ellipsoid& e1, const Ellipsoid& e2,
                                         int nodes = 4096);

/// Sampling-free mixed volume of ellipsoids, n <= 3: exact shortcuts where
/// available, otherwise the 2D quadrature oracle or a 3D support-function
/// curvature integral over the sphere.
double mixed_volume_ellipsoids_deterministic(std::span<const Ellipsoid> ellipsoids);

/// Expected number of real torus roots: n! * V(ell(L_1),...,ell(L_n)).
/// Deterministic (no sampling) whenever an exact shortcut applies.
double expected_real_roots(std::span<const SupportSet> supports,
                           std::int64_t samples, std::uint64_t seed,
                           int workers = 1);

/// Generic number of complex torus roots: n! * V(conv(L_1),...,conv(L_n)).
/// Integral for lattice supports; integrality is asserted.
double bkk_count(std::span<const SupportSet> supports);

/// Expected fraction of real roots: ratio of the two counts above.
RootStatistics real_fraction(std::span<const SupportSet> supports,
                             std::int64_t samples, std::uint64_t seed,
                             int workers = 1);

/// Limit of the real fraction under dilation: ratio of mixed volumes of the
/// limit ellipsoids and of the bodies themselves. Deterministic.
double limit_real_fraction(std::span<const BodySpec> bodies);

struct AFGaps {
  // M(L_1..L_n)^2 - M(..,L_{n-1},L_{n-1}) * M(..,L_n,L_n); zero at coincidence.
  double quadratic_gap = 0.0;
  // M(L_1..L_n)^n - prod_i M(L_i,...,L_i).
  double product_gap = 0.0;
};

/// Alexandrov-Fenchel gaps for the expected-root functional, evaluated with
/// deterministic ellipsoid mixed volumes. Both gaps are nonnegative up to
/// quadrature error.
AFGaps af_inequality_gap(std::span<const SupportSet> supports);
AFGaps af_inequality_gap_ellipsoids(std::span<const Ellipsoid> ellipsoids);

}  // namespace realroots
