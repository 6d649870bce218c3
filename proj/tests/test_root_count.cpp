#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "realroots/root_count.hpp"

using namespace realroots;

namespace {

SupportSet band1(int lambda) {
  std::vector<LatticeVector> pts;
  for (int k = -lambda; k <= lambda; ++k) pts.push_back({k});
  return validate_support(pts);
}

TrigPolynomial unit_coeff(const SupportSet& s, const LatticeVector& which) {
  std::vector<double> coeffs(s.size(), 0.0);
  const auto& pts = s.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i] == which) coeffs[i] = 1.0;
  return TrigPolynomial(s, coeffs);
}

TrigPolynomial scaled(const TrigPolynomial& f, double c) {
  auto coeffs = f.coeffs();
  for (auto& x : coeffs) x *= c;
  return TrigPolynomial(f.support(), coeffs);
}

}  // namespace

TEST_CASE("real roots on the circle: fixed cases") {
  const auto s = band1(1);
  CHECK(count_real_roots_1d(unit_coeff(s, {1})) == 2);   // sqrt2 cos theta
  CHECK(count_real_roots_1d(unit_coeff(s, {-1})) == 2);  // sqrt2 sin theta
  CHECK(count_real_roots_1d(unit_coeff(s, {0})) == 0);   // constant

  // pure frequency lambda: exactly 2 lambda roots for any phase
  std::mt19937_64 rng(12);
  for (int lambda : {2, 4, 7}) {
    const auto pair = validate_support({{lambda}, {-lambda}});
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = sample(pair, rng);
      CHECK(count_real_roots_1d(f) == 2 * lambda);
    }
  }
}

TEST_CASE("tangential zeros are rejected as degenerate") {
  // sqrt2 (1 + cos theta) / sqrt2: grazes zero at theta = pi
  const auto s = band1(1);
  std::vector<double> coeffs(s.size(), 0.0);
  const auto& pts = s.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] == LatticeVector{0}) coeffs[i] = std::numbers::sqrt2;
    if (pts[i] == LatticeVector{1}) coeffs[i] = 1.0;
  }
  CHECK_THROWS_AS(count_real_roots_1d(TrigPolynomial(s, coeffs)), DegenerateSample);
}

TEST_CASE("complex roots via the companion matrix") {
  std::mt19937_64 rng(7);
  for (int lambda : {1, 3, 5}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = sample(band1(lambda), rng);
      CHECK(count_complex_roots_1d(f) == 2 * lambda);
    }
  }
  // sqrt2 cos theta ~ z^2 + 1 up to scale: both roots on the unit circle
  CHECK(count_complex_roots_1d(unit_coeff(band1(1), {1})) == 2);
  CHECK(count_complex_roots_1d(unit_coeff(band1(1), {0})) == 0);
}

TEST_CASE("per-sample ordering and parity of real counts") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = sample(band1(4), rng);
    int real = 0;
    try {
      real = count_real_roots_1d(f);
    } catch (const DegenerateSample&) {
      continue;
    }
    CHECK(real % 2 == 0);
    CHECK(real <= count_complex_roots_1d(f));
  }
}

TEST_CASE("unit-modulus companion eigenvalues are the real roots") {
  // count-level cross-oracle: eigenvalues of modulus ~1 correspond to real
  // torus roots, and their angles actually annihilate f
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = sample(band1(3), rng);
    int real = 0;
    try {
      real = count_real_roots_1d(f);
    } catch (const DegenerateSample&) {
      continue;
    }
    const auto laurent = to_laurent(f);
    const int degree = 6;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    const std::complex<double> lead = laurent.at({3});
    for (const auto& [lambda, a] : laurent) {
      if (lambda[0] == 3) continue;
      companion(lambda[0] + 3, degree - 1) = -a / lead;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
    int on_circle = 0;
    for (int i = 0; i < degree; ++i) {
      const auto z = es.eigenvalues()[i];
      if (std::abs(std::abs(z) - 1.0) < 1e-6) {
        ++on_circle;
        const double theta[1] = {std::arg(z)};
        CHECK(std::abs(evaluate(f, theta)) < 1e-6);
      }
    }
    CHECK(on_circle == real);
  }
}

TEST_CASE("root counts are invariant under positive scaling") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = sample(band1(3), rng);
    int base = 0;
    try {
      base = count_real_roots_1d(f);
    } catch (const DegenerateSample&) {
      continue;
    }
    for (double c : {0.5, 3.0}) {
      CHECK(count_real_roots_1d(scaled(f, c)) == base);
      CHECK(count_complex_roots_1d(scaled(f, c)) == count_complex_roots_1d(f));
    }
  }
}

TEST_CASE("2D root counting: separable products") {
  const auto sx = validate_support({{1, 0}, {-1, 0}});
  const auto sy = validate_support({{0, 1}, {0, -1}});
  // sqrt2 cos theta1 = 0 and sqrt2 cos theta2 = 0: four grid intersections
  CHECK(count_real_roots_2d(unit_coeff(sx, {1, 0}), unit_coeff(sy, {0, 1})) == 4);

  // any sample from the paired segment supports factors into 2 x 2 roots
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f1 = sample(sx, rng);
    const auto f2 = sample(sy, rng);
    CHECK(count_real_roots_2d(f1, f2) == 4);
  }
}

TEST_CASE("2D root counting respects the BKK bound on cross supports") {
  const auto cross = validate_support({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f1 = sample(cross, rng);
    const auto f2 = sample(cross, rng);
    const int count = count_real_roots_2d(f1, f2);
    CHECK(count <= 4);
    CHECK(count % 2 == 0);
  }
}

TEST_CASE("2D counts are stable under grid refinement") {
  const auto cross = validate_support({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f1 = sample(cross, rng);
    const auto f2 = sample(cross, rng);
    CHECK(count_real_roots_2d(f1, f2, 64) == count_real_roots_2d(f1, f2, 128));
  }
}

TEST_CASE("grid below the bandwidth requirement is rejected") {
  const auto s = validate_support({{3, 0}, {-3, 0}, {0, 3}, {0, -3}});
  std::mt19937_64 rng(1);
  const auto f1 = sample(s, rng);
  const auto f2 = sample(s, rng);
  CHECK_THROWS_AS(count_real_roots_2d(f1, f2, 32), GridTooCoarse);
}

TEST_CASE("Monte Carlo estimator: exact support laws") {
  // {-lambda, lambda}: every sample gives exactly 2 lambda roots
  std::vector<SupportSet> pair = {validate_support({{3}, {-3}})};
  const auto exact = mc_expected_roots(pair, 200, 11, RootKind::kReal);
  CHECK(exact.value == 6.0);
  CHECK(exact.std_error == 0.0);

  // complex counts for the full band are pinned at 2 lambda by BKK
  std::vector<SupportSet> l3 = {band1(3)};
  const auto cplx = mc_expected_roots(l3, 200, 11, RootKind::kComplex);
  CHECK(cplx.value == 6.0);
  CHECK(cplx.std_error == 0.0);

  // real counts fluctuate around 2 sqrt(lambda (lambda+1) / 3) = 4
  const auto real = mc_expected_roots(l3, 2000, 123, RootKind::kReal);
  CHECK(std::abs(real.value - 4.0) < 3 * real.std_error);
}

TEST_CASE("Monte Carlo estimator: 2D theorem check at small budget") {
  std::vector<SupportSet> crosses = {
      validate_support({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}),
      validate_support({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}})};
  RootCountDiagnostics diag;
  const auto est = mc_expected_roots(crosses, 400, 2023, RootKind::kReal, 2, &diag);
  CHECK(std::abs(est.value - 4 * std::numbers::pi / 5) < 4 * est.std_error);
  CHECK(diag.grid == 64);
}

TEST_CASE("estimator is bitwise deterministic for fixed seed and workers") {
  std::vector<SupportSet> l2 = {band1(2)};
  const auto a = mc_expected_roots(l2, 500, 99, RootKind::kReal, 2);
  const auto b = mc_expected_roots(l2, 500, 99, RootKind::kReal, 2);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("estimator input validation") {
  std::vector<SupportSet> pair2d = {validate_support({{1, 0}, {-1, 0}}),
                                    validate_support({{0, 1}, {0, -1}})};
  CHECK_THROWS_AS(mc_expected_roots(pair2d, 10, 1, RootKind::kComplex), UnsupportedDimension);

  std::vector<SupportSet> wrong = {validate_support({{1, 0}, {-1, 0}})};
  CHECK_THROWS_AS(mc_expected_roots(wrong, 10, 1, RootKind::kReal), DimensionMismatch);
}
