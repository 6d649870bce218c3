#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "realroots/mixed_volume.hpp"
#include "realroots/moments.hpp"

using namespace realroots;

namespace {

RationalVector rv(std::initializer_list<long> coords) {
  RationalVector v;
  for (long c : coords) v.emplace_back(c);
  return v;
}

constexpr double kPi = std::numbers::pi;

SupportSet interval_support(int lambda) {
  std::vector<LatticeVector> pts;
  for (int k = -lambda; k <= lambda; ++k) pts.push_back({k});
  return validate_support(pts);
}

SupportSet cross_support() {
  return validate_support({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

Ellipsoid ellipse(double a, double b, double c) {
  Eigen::MatrixXd m(2, 2);
  m << a, c, c, b;
  return Ellipsoid{m};
}

Eigen::MatrixXd random_spd3(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd g(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = normal(rng);
  return g * g.transpose() + 0.3 * Eigen::MatrixXd::Identity(3, 3);
}

LatticePolytope scaled_polytope(const LatticePolytope& p, const Rational& alpha) {
  std::vector<RationalVector> verts;
  for (auto v : p.vertices()) {
    for (auto& x : v) x *= alpha;
    verts.push_back(v);
  }
  return convex_hull(verts);
}

}  // namespace

TEST_CASE("polytope mixed volumes by polarization") {
  // n = 1: length
  const auto seg = convex_hull({rv({-3}), rv({3})});
  std::vector<LatticePolytope> one = {seg};
  CHECK(mixed_volume_polytopes(one) == 6);

  // the unit-square cross term from two axis segments
  const auto ex = convex_hull({rv({0, 0}), rv({1, 0})});
  const auto ey = convex_hull({rv({0, 0}), rv({0, 1})});
  std::vector<LatticePolytope> pair = {ex, ey};
  CHECK(mixed_volume_polytopes(pair) == Rational(1, 2));

  // diagonal case equals the volume
  const auto square = convex_hull({rv({1, 1}), rv({1, -1}), rv({-1, 1}), rv({-1, -1})});
  std::vector<LatticePolytope> diag = {square, square};
  CHECK(mixed_volume_polytopes(diag) == 4);
}

TEST_CASE("polytope mixed volume properties: symmetry, scaling, diagonal") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p1 = newton_polytope(testing::random_symmetric_support(rng, 2, 4, 3, false));
    const auto p2 = newton_polytope(testing::random_symmetric_support(rng, 2, 4, 3, false));
    std::vector<LatticePolytope> ab = {p1, p2};
    std::vector<LatticePolytope> ba = {p2, p1};
    const Rational v = mixed_volume_polytopes(ab);
    CHECK(v == mixed_volume_polytopes(ba));
    for (const Rational alpha : {Rational(2), Rational(1, 2), Rational(3)}) {
      std::vector<LatticePolytope> scaled = {scaled_polytope(p1, alpha), p2};
      CHECK(mixed_volume_polytopes(scaled) == alpha * v);
    }
    std::vector<LatticePolytope> dd = {p1, p1};
    CHECK(mixed_volume_polytopes(dd) == volume(p1));
  }

  // 3D symmetry on a fixed triple
  const auto oct = newton_polytope(
      validate_support({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
  const auto cube = newton_polytope(validate_support(
      {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1},
       {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}}));
  const auto seg3 = newton_polytope(validate_support({{1, 1, 0}, {-1, -1, 0}}));
  std::vector<LatticePolytope> abc = {oct, cube, seg3};
  std::vector<LatticePolytope> cba = {seg3, cube, oct};
  CHECK(mixed_volume_polytopes(abc) == mixed_volume_polytopes(cba));
  std::vector<LatticePolytope> ddd = {cube, cube, cube};
  CHECK(mixed_volume_polytopes(ddd) == 8);
}

TEST_CASE("ellipsoid mixed volume: exact shortcuts") {
  // n = 1 segment
  const int lambda = 5;
  std::vector<Ellipsoid> one = {Ellipsoid{Eigen::MatrixXd::Constant(1, 1, lambda * (lambda + 1) / 3.0)}};
  const auto est1 = mixed_volume_ellipsoids(one, 0, 1);
  CHECK(est1.value == doctest::Approx(2 * std::sqrt(lambda * (lambda + 1) / 3.0)));
  CHECK(est1.samples == 0);

  // equal disks
  std::vector<Ellipsoid> disks = {Ellipsoid{Eigen::MatrixXd::Identity(2, 2)},
                                  Ellipsoid{Eigen::MatrixXd::Identity(2, 2)}};
  CHECK(mixed_volume_ellipsoids(disks, 0, 1).value == doctest::Approx(kPi));

  // balls of radii 1 and 3: multilinearity in the radii
  std::vector<Ellipsoid> balls = {Ellipsoid{Eigen::MatrixXd::Identity(2, 2)},
                                  Ellipsoid{9.0 * Eigen::MatrixXd::Identity(2, 2)}};
  CHECK(mixed_volume_ellipsoids(balls, 0, 1).value == doctest::Approx(3 * kPi));

  // rank-1 pair: two orthogonal segments [-e1, e1], [-e2, e2]
  Eigen::MatrixXd m1 = Eigen::MatrixXd::Zero(2, 2), m2 = Eigen::MatrixXd::Zero(2, 2);
  m1(0, 0) = 1;
  m2(1, 1) = 1;
  std::vector<Ellipsoid> segs = {Ellipsoid{m1}, Ellipsoid{m2}};
  CHECK(mixed_volume_ellipsoids(segs, 0, 1).value == doctest::Approx(2.0));
}

TEST_CASE("2D quadrature oracle on known areas") {
  const Ellipsoid disk{Eigen::MatrixXd::Identity(2, 2)};
  const Ellipsoid disk2{4.0 * Eigen::MatrixXd::Identity(2, 2)};
  CHECK(mixed_volume_ellipsoids_oracle_2d(disk, disk) == doctest::Approx(kPi).epsilon(1e-10));
  CHECK(mixed_volume_ellipsoids_oracle_2d(disk, disk2) ==
        doctest::Approx(2 * kPi).epsilon(1e-10));
  // V(E, E) = area(E) exercises the spectral-derivative path on a real ellipse
  const Ellipsoid e = ellipse(4, 1, 0);
  CHECK(mixed_volume_ellipsoids_oracle_2d(e, e) == doctest::Approx(2 * kPi).epsilon(1e-9));
}

TEST_CASE("Gaussian estimator agrees with the quadrature oracle") {
  // hand-checkable pair: M1 = diag(4,1), M2 = I has V = perimeter(E1)/2
  const Ellipsoid e1 = ellipse(4, 1, 0);
  const Ellipsoid e2 = ellipse(1, 1, 0);
  const double oracle = mixed_volume_ellipsoids_oracle_2d(e1, e2);
  CHECK(oracle == doctest::Approx(4.8442241102738385).epsilon(1e-9));

  std::vector<Ellipsoid> pair = {e1, e2};
  const auto est = mixed_volume_ellipsoids(pair, 100000, 31337);
  CHECK(est.samples == 100000);
  CHECK(std::abs(est.value - oracle) < 3 * est.std_error);
  CHECK(std::abs(est.value - oracle) / oracle < 0.01);

  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> unif(0.2, 3.0);
  for (int trial = 0; trial < 5; ++trial) {
    const double a = unif(rng), b = unif(rng), c = unif(rng), d = unif(rng);
    const Ellipsoid f1 = ellipse(a * a + 0.1, b * b + 0.1, 0.05 * a * b);
    const Ellipsoid f2 = ellipse(c * c + 0.1, d * d + 0.1, -0.05 * c * d);
    const double q = mixed_volume_ellipsoids_oracle_2d(f1, f2);
    std::vector<Ellipsoid> fp = {f1, f2};
    const auto mc = mixed_volume_ellipsoids(fp, 100000, 1000 + trial);
    CHECK(std::abs(mc.value - q) < 3 * mc.std_error);
    CHECK(std::abs(mc.value - q) / q < 0.01);
  }
}

TEST_CASE("estimator rejects undersized sample budgets on the sampling path") {
  std::vector<Ellipsoid> pair = {ellipse(4, 1, 0), ellipse(1, 1, 0)};
  CHECK_THROWS_AS(mixed_volume_ellipsoids(pair, 100, 1), Error);
}

TEST_CASE("estimator is deterministic for fixed seed and worker count") {
  std::vector<Ellipsoid> pair = {ellipse(3, 1, 0.4), ellipse(1, 2, -0.3)};
  const auto a = mixed_volume_ellipsoids(pair, 20000, 9, 2);
  const auto b = mixed_volume_ellipsoids(pair, 20000, 9, 2);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  const auto c = mixed_volume_ellipsoids(pair, 20000, 9, 1);
  CHECK(std::abs(a.value - c.value) < 3 * (a.std_error + c.std_error));
}

TEST_CASE("deterministic 3D mixed volume cross-validates against sampling") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Ellipsoid> triple = {Ellipsoid{random_spd3(rng)}, Ellipsoid{random_spd3(rng)},
                                     Ellipsoid{random_spd3(rng)}};
    const double det_path = mixed_volume_ellipsoids_deterministic(triple);
    const auto mc = mixed_volume_ellipsoids(triple, 200000, 55 + trial);
    CHECK(std::abs(mc.value - det_path) < 4 * mc.std_error);
  }

  // diagonal case through the quadrature path: perturb one copy so the
  // equal-shape shortcut cannot fire, then compare against the volume
  Eigen::MatrixXd m = random_spd3(rng);
  std::vector<Ellipsoid> nearly = {Ellipsoid{m}, Ellipsoid{m}, Ellipsoid{(1 + 1e-12) * m}};
  const double v = mixed_volume_ellipsoids_deterministic(nearly);
  CHECK(v == doctest::Approx(ellipsoid_volume(Ellipsoid{m})).epsilon(1e-6));
}

TEST_CASE("expected real roots") {
  std::vector<SupportSet> l5 = {interval_support(5)};
  CHECK(expected_real_roots(l5, 0, 1) == doctest::Approx(2 * std::sqrt(10.0)).epsilon(1e-14));

  for (int lambda : {2, 7}) {
    std::vector<SupportSet> pair = {validate_support({{lambda}, {-lambda}})};
    CHECK(expected_real_roots(pair, 0, 1) == doctest::Approx(2.0 * lambda).epsilon(1e-14));
  }

  std::vector<SupportSet> crosses = {cross_support(), cross_support()};
  CHECK(expected_real_roots(crosses, 0, 1) == doctest::Approx(4 * kPi / 5).epsilon(1e-12));
}

TEST_CASE("BKK counts are exact integers") {
  for (int lambda : {1, 2, 5}) {
    std::vector<SupportSet> one = {interval_support(lambda)};
    CHECK(bkk_count(one) == 2.0 * lambda);
  }

  std::vector<SupportSet> crosses = {cross_support(), cross_support()};
  CHECK(bkk_count(crosses) == 4.0);

  std::vector<SupportSet> segs = {validate_support({{1, 0}, {-1, 0}}),
                                  validate_support({{0, 1}, {0, -1}})};
  CHECK(bkk_count(segs) == 4.0);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<SupportSet> pair = {testing::random_symmetric_support(rng, 2, 6, 3, false),
                                    testing::random_symmetric_support(rng, 2, 6, 3, false)};
    const double b = bkk_count(pair);
    CHECK(b >= 0.0);
    CHECK(b == std::floor(b));  // integrality asserted inside as well
  }
}

TEST_CASE("real fraction assembles the ratio") {
  std::vector<SupportSet> pair = {validate_support({{4}, {-4}})};
  const auto all_real = real_fraction(pair, 0, 1);
  CHECK(all_real.fraction == 1.0);
  CHECK(all_real.expected_real == doctest::Approx(all_real.bkk));

  std::vector<SupportSet> l50 = {interval_support(50)};
  const auto f50 = real_fraction(l50, 0, 1);
  CHECK(f50.bkk == 100.0);
  CHECK(f50.fraction == doctest::Approx(std::sqrt(50.0 * 51 / 3) / 50));

  std::vector<SupportSet> crosses = {cross_support(), cross_support()};
  const auto fc = real_fraction(crosses, 0, 1);
  CHECK(fc.fraction == doctest::Approx(kPi / 5));
  CHECK(fc.expected_real <= fc.bkk + 1e-9);

  // orthogonal segment supports: every root is real
  std::vector<SupportSet> segs = {validate_support({{1, 0}, {-1, 0}}),
                                  validate_support({{0, 1}, {0, -1}})};
  CHECK(real_fraction(segs, 0, 1).fraction == doctest::Approx(1.0));

  std::vector<SupportSet> zero = {validate_support({{0, 0}}), validate_support({{0, 0}})};
  CHECK_THROWS_AS(real_fraction(zero, 0, 1), ZeroBKK);
}

TEST_CASE("limit real fraction") {
  std::vector<BodySpec> interval = {BodySpec::ball(1, 1)};
  CHECK(limit_real_fraction(interval) == doctest::Approx(1.0 / std::sqrt(3.0)));

  std::vector<BodySpec> disks = {BodySpec::ball(1, 2), BodySpec::ball(1, 2)};
  CHECK(limit_real_fraction(disks) == doctest::Approx(0.25));

  const auto square = BodySpec::polytope({rv({1, 1}), rv({1, -1}), rv({-1, 1}), rv({-1, -1})});
  std::vector<BodySpec> squares = {square, square};
  CHECK(limit_real_fraction(squares) == doctest::Approx(kPi / 12));

  // scaling invariance
  std::vector<BodySpec> scaled = {BodySpec::ball(Rational(7, 2), 2), BodySpec::ball(2, 2)};
  CHECK(limit_real_fraction(scaled) == doctest::Approx(0.25));

  const auto big_square = BodySpec::polytope(
      {rv({3, 3}), rv({3, -3}), rv({-3, 3}), rv({-3, -3})});
  std::vector<BodySpec> mixed_scale = {square, big_square};
  CHECK(limit_real_fraction(mixed_scale) == doctest::Approx(kPi / 12));
}

TEST_CASE("Alexandrov-Fenchel gaps") {
  // coincident supports: the quadratic gap vanishes identically
  std::vector<SupportSet> same = {cross_support(), cross_support()};
  const auto g0 = af_inequality_gap(same);
  CHECK(g0.quadratic_gap == doctest::Approx(0.0).epsilon(1e-12));

  std::vector<SupportSet> pair = {cross_support(),
                                  validate_support({{0, 0}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}})};
  const auto g1 = af_inequality_gap(pair);
  CHECK(g1.quadratic_gap >= -1e-9);
  CHECK(g1.product_gap >= -1e-9);

  // homothetic balls achieve equality
  std::vector<Ellipsoid> balls = {Ellipsoid{Eigen::MatrixXd::Identity(2, 2)},
                                  Ellipsoid{4.0 * Eigen::MatrixXd::Identity(2, 2)}};
  const auto g2 = af_inequality_gap_ellipsoids(balls);
  CHECK(g2.quadratic_gap == doctest::Approx(0.0));

  std::vector<Ellipsoid> balls3 = {Ellipsoid{Eigen::MatrixXd::Identity(3, 3)},
                                   Ellipsoid{4.0 * Eigen::MatrixXd::Identity(3, 3)},
                                   Ellipsoid{0.25 * Eigen::MatrixXd::Identity(3, 3)}};
  const auto g3 = af_inequality_gap_ellipsoids(balls3);
  CHECK(g3.quadratic_gap == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("monotonicity: expected real roots never exceed the BKK count") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<SupportSet> pair = {testing::random_symmetric_support(rng, 2, 6, 3),
                                    testing::random_symmetric_support(rng, 2, 6, 3)};
    const double bkk = bkk_count(pair);
    std::vector<Ellipsoid> ells = {moment_matrix(pair[0]), moment_matrix(pair[1])};
    const double real = 2.0 * mixed_volume_ellipsoids_deterministic(ells);
    CHECK(real <= bkk + 1e-9);
  }
}
