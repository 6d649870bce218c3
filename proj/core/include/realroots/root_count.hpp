#pragma once

#include <cstdint>
#include <span>

#include "realroots/mixed_volume.hpp"
#include "realroots/sampler.hpp"

namespace realroots {

struct RootCountDiagnostics {
  std::int64_t resamples = 0;
  std::int64_t newton_failures = 0;
  int grid = 0;
};

/// Zeros of f on the circle: dense scan (16 samples per highest frequency
/// plus 64) for sign changes, each bisected to width 1e-12. A sample whose
/// |f| dips below 1e-9 at a scan minimum without a sign change is treated
/// as tangential and rejected via DegenerateSample.
int count_real_roots_1d(const TrigPolynomial& f);

/// Roots in C \ {0} with multiplicity of the associated Laurent polynomial,
/// via companion-matrix eigenvalues of z^{lambda_max} f(z). Throws
/// LeadingCoefficientZero when the top Laurent coefficient vanishes.
int count_complex_roots_1d(const TrigPolynomial& f);

/// Common zeros of (f1, f2) on the 2-torus: marching-squares extraction of
/// the f1 = 0 curve on a periodic grid, sign changes of f2 along the curve,
/// Newton polishing, toroidal deduplication. Counts exceeding the BKK bound
/// raise GridTooCoarse. grid <= 0 selects 32 cells per highest frequency
/// (at least 64).
int count_real_roots_2d(const TrigPolynomial& f1, const TrigPolynomial& f2,
                        int grid = 0, RootCountDiagnostics* diag = nullptr);

enum class RootKind { kReal, kComplex };

/// Monte Carlo mean root count over random polynomial systems with the
/// given supports (n <= 2; complex only for n = 1). Degenerate samples are
/// redrawn, capped at 1% of the sample budget. Deterministic for fixed
/// (seed, workers).
MVEstimate mc_expected_roots(std::span<const SupportSet> supports,
                             std::int64_t samples, std::uint64_t seed,
                             RootKind kind, int workers = 1,
                             RootCountDiagnostics* diag = nullptr,
                             int grid = 0);

}  // namespace realroots
