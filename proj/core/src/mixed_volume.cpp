#include "realroots/mixed_volume.hpp"

#include <fftw3.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <optional>
#include <thread>
#include <vector>

#include "realroots/moments.hpp"
#include "realroots/rng.hpp"

namespace realroots {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// E|det| of an n x n standard Gaussian matrix: product of chi means
// chi_1, ..., chi_n. Pinned by the n = 1 and equal-ball cases in tests.
double gaussian_det_moment(int n) {
  double d = 1.0;
  for (int k = 1; k <= n; ++k)
    d *= std::numbers::sqrt2 * std::exp(std::lgamma((k + 1) / 2.0) - std::lgamma(k / 2.0));
  return d;
}

Eigen::MatrixXd psd_factor(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  return es.eigenvectors() *
         es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
}

void check_tuple(std::span<const Ellipsoid> ellipsoids) {
  const int n = static_cast<int>(ellipsoids.size());
  if (n < 1) throw Error("mixed volume needs at least one body");
  if (n > 3) throw UnsupportedDimension("ellipsoid mixed volume: n > 3");
  for (const auto& e : ellipsoids)
    if (e.dim() != n)
      throw DimensionMismatch("mixed volume of n ellipsoids requires dimension n");
}

// Exact values that need no sampling: a single segment, identical shapes,
// balls, and 2D tuples containing a segment (rank <= 1 shape).
std::optional<double> exact_shortcut(std::span<const Ellipsoid> ellipsoids) {
  const int n = static_cast<int>(ellipsoids.size());
  if (n == 1) return 2.0 * std::sqrt(std::max(0.0, ellipsoids[0].shape()(0, 0)));

  bool all_same = true;
  for (int i = 1; i < n; ++i) all_same &= ellipsoids[i].same_shape(ellipsoids[0]);
  if (all_same) return ellipsoid_volume(ellipsoids[0]);

  bool all_balls = true;
  double radii = 1.0;
  for (const auto& e : ellipsoids) {
    double r = 0.0;
    all_balls &= e.is_ball(&r);
    radii *= r;
  }
  if (all_balls) return unit_ball_volume(n) * radii;

  if (n == 2) {
    // A rank <= 1 shape v v' is the segment [-v, v]; sliding the other body
    // along it gives V = 2 sqrt(w' M w) with w the rotated segment vector.
    for (int i = 0; i < 2; ++i) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ellipsoids[i].shape());
      const double lmax = es.eigenvalues()[1];
      if (es.eigenvalues()[0] > 1e-12 * std::max(1.0, lmax)) continue;
      const Eigen::Vector2d v = std::sqrt(std::max(0.0, lmax)) * es.eigenvectors().col(1);
      Eigen::Vector2d w(-v[1], v[0]);
      const Eigen::MatrixXd& m = ellipsoids[1 - i].shape();
      return 2.0 * std::sqrt(std::max(0.0, w.dot(m * w)));
    }
  }
  return std::nullopt;
}

}  // namespace

// --- polytopes ----------------------------------------------------------

Rational mixed_volume_polytopes(std::span<const LatticePolytope> polytopes) {
  const int n = static_cast<int>(polytopes.size());
  if (n < 1) throw Error("mixed volume needs at least one polytope");
  if (n > 3) throw UnsupportedDimension("polytope mixed volume: n > 3");
  for (const auto& p : polytopes)
    if (p.dim() != n)
      throw DimensionMismatch("mixed volume of n polytopes requires dimension n");

  // Polarization over Minkowski sums of subsets: at most 7 exact volumes.
  Rational acc = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::optional<LatticePolytope> sum;
    int bits = 0;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      ++bits;
      sum = sum ? minkowski_sum(*sum, polytopes[i]) : polytopes[i];
    }
    const Rational v = volume(*sum);
    acc += ((n - bits) % 2 == 0) ? v : -v;
  }
  BigInt nf = 1;
  for (int k = 2; k <= n; ++k) nf *= k;
  return acc / Rational(nf);
}

// --- Gaussian-determinant estimator --------------------------------------

MVEstimate mixed_volume_ellipsoids(std::span<const Ellipsoid> ellipsoids,
                                   std::int64_t samples, std::uint64_t seed,
                                   int workers) {
  check_tuple(ellipsoids);
  const int n = static_cast<int>(ellipsoids.size());

  if (const auto exact = exact_shortcut(ellipsoids))
    return MVEstimate{*exact, 0.0, 0, seed};

  if (samples < 10000)
    throw Error("mixed_volume_ellipsoids: need at least 10^4 samples");
  workers = std::max(1, std::min<int>(workers, static_cast<int>(samples)));

  std::vector<Eigen::MatrixXd> factors;
  factors.reserve(n);
  for (const auto& e : ellipsoids) factors.push_back(psd_factor(e.shape()));
  const Eigen::MatrixXd& m1 = ellipsoids[0].shape();

  // One sample: draw Gaussian vectors X_2..X_n, form the generalized cross
  // product w, and use the conditional mean E[|det| | X_2..X_n] =
  // sqrt(2/pi) sqrt(w' M_1 w). Integrating the first column out exactly
  // costs nothing and only lowers the variance.
  const auto sample_once = [&](std::mt19937_64& rng,
                               std::normal_distribution<double>& normal) {
    Eigen::VectorXd w(n);
    if (n == 2) {
      Eigen::Vector2d z(normal(rng), normal(rng));
      const Eigen::Vector2d x = factors[1] * z;
      w << -x[1], x[0];
    } else {
      Eigen::Vector3d z2(normal(rng), normal(rng), normal(rng));
      Eigen::Vector3d z3(normal(rng), normal(rng), normal(rng));
      const Eigen::Vector3d x2 = factors[1] * z2;
      const Eigen::Vector3d x3 = factors[2] * z3;
      w = x2.cross(x3);
    }
    return std::sqrt(2.0 / std::numbers::pi) *
           std::sqrt(std::max(0.0, w.dot(m1 * w)));
  };

  std::vector<RunningStats> partial(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const std::int64_t count = samples / workers + (w < samples % workers ? 1 : 0);
    pool.emplace_back([&, w, count] {
      auto rng = worker_stream(seed, static_cast<std::uint64_t>(w));
      std::normal_distribution<double> normal(0.0, 1.0);
      for (std::int64_t i = 0; i < count; ++i) partial[w].add(sample_once(rng, normal));
    });
  }
  for (auto& t : pool) t.join();
  RunningStats stats;
  for (const auto& p : partial) stats.merge(p);

  const double scale = unit_ball_volume(n) / gaussian_det_moment(n);
  return MVEstimate{scale * stats.mean(), scale * stats.std_error(), stats.count(), seed};
}

// --- 2D quadrature oracle -------------------------------------------------

namespace {

// Planar area from a support function sampled on a uniform grid:
// area = (1/2) * integral of (h^2 - h'^2). With the spectral derivative
// h'_k = i k h_k, Parseval turns the quadrature into
// pi * sum over modes of (1 - k^2) |h_k|^2.
double area_from_support_2d(const std::vector<const Eigen::MatrixXd*>& shapes, int nodes) {
  std::vector<double> h(nodes);
  for (int j = 0; j < nodes; ++j) {
    const double t = 2.0 * std::numbers::pi * j / nodes;
    const Eigen::Vector2d u(std::cos(t), std::sin(t));
    double s = 0.0;
    for (const auto* m : shapes) s += std::sqrt(std::max(0.0, u.dot(*m * u)));
    h[j] = s;
  }

  std::vector<std::complex<double>> spec(nodes / 2 + 1);
  static std::mutex fftw_mutex;  // fftw planning is not thread-safe
  {
    std::lock_guard<std::mutex> lock(fftw_mutex);
    fftw_plan plan = fftw_plan_dft_r2c_1d(
        nodes, h.data(), reinterpret_cast<fftw_complex*>(spec.data()), FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }

  const double norm = static_cast<double>(nodes) * nodes;
  double area = std::norm(spec[0]) / norm;  // k = 0 term
  for (int k = 1; k < nodes / 2; ++k)
    area += 2.0 * (1.0 - static_cast<double>(k) * k) * std::norm(spec[k]) / norm;
  area += (1.0 - 0.25 * static_cast<double>(nodes) * nodes) * std::norm(spec[nodes / 2]) / norm;
  return std::numbers::pi * area;
}

}  // namespace

double mixed_volume_ellipsoids_oracle_2d(const Ellipsoid& e1, const Ellipsoid& e2,
                                         int nodes) {
  if (e1.dim() != 2 || e2.dim() != 2)
    throw DimensionMismatch("2D oracle requires two planar ellipsoids");
  if (nodes < 4096) nodes = 4096;
  const double sum = area_from_support_2d({&e1.shape(), &e2.shape()}, nodes);
  const double a1 = area_from_support_2d({&e1.shape()}, nodes);
  const double a2 = area_from_support_2d({&e2.shape()}, nodes);
  return (sum - a1 - a2) / 2.0;
}

// --- 3D deterministic volume from support functions ----------------------

namespace {

// vol(K) = (1/3) * integral over S^2 of h * det of the tangential Hessian
// of the summed support function (the radii-of-curvature determinant).
// Smooth for positive-definite summands; Gauss-Legendre in cos(theta)
// times a uniform phi grid converges spectrally.
double volume_from_support_3d(const std::vector<const Eigen::MatrixXd*>& shapes,
                              int n_t = 96, int n_phi = 192) {
  gsl_integration_glfixed_table* table =
      gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n_t));

  double acc = 0.0;
  for (int it = 0; it < n_t; ++it) {
    double t = 0.0, wt = 0.0;
    gsl_integration_glfixed_point(-1.0, 1.0, static_cast<std::size_t>(it), &t, &wt, table);
    const double r = std::sqrt(std::max(0.0, 1.0 - t * t));
    for (int ip = 0; ip < n_phi; ++ip) {
      const double phi = 2.0 * std::numbers::pi * ip / n_phi;
      Eigen::Vector3d u(r * std::cos(phi), r * std::sin(phi), t);

      double h = 0.0;
      Eigen::Matrix3d hess = Eigen::Matrix3d::Zero();
      for (const auto* m : shapes) {
        const Eigen::Vector3d mu = (*m) * u;
        const double hi = std::sqrt(std::max(1e-300, u.dot(mu)));
        h += hi;
        hess += (*m) / hi - mu * mu.transpose() / (hi * hi * hi);
      }

      // Orthonormal tangent frame at u.
      Eigen::Vector3d seedv = std::abs(u[0]) < 0.9 ? Eigen::Vector3d::UnitX()
                                                   : Eigen::Vector3d::UnitY();
      const Eigen::Vector3d t1 = u.cross(seedv).normalized();
      const Eigen::Vector3d t2 = u.cross(t1);
      const double a00 = t1.dot(hess * t1);
      const double a01 = t1.dot(hess * t2);
      const double a11 = t2.dot(hess * t2);

      acc += wt * (2.0 * std::numbers::pi / n_phi) * h * (a00 * a11 - a01 * a01);
    }
  }
  gsl_integration_glfixed_table_free(table);
  return acc / 3.0;
}

}  // namespace

double mixed_volume_ellipsoids_deterministic(std::span<const Ellipsoid> ellipsoids) {
  check_tuple(ellipsoids);
  const int n = static_cast<int>(ellipsoids.size());
  if (const auto exact = exact_shortcut(ellipsoids)) return *exact;

  if (n == 2) return mixed_volume_ellipsoids_oracle_2d(ellipsoids[0], ellipsoids[1]);

  // n == 3: polarization; singleton volumes are exact, sums by quadrature.
  double acc = 0.0;
  for (unsigned mask = 1; mask < 8u; ++mask) {
    std::vector<const Eigen::MatrixXd*> shapes;
    for (int i = 0; i < 3; ++i)
      if (mask & (1u << i)) shapes.push_back(&ellipsoids[i].shape());
    const double v = shapes.size() == 1 ? ellipsoid_volume(ellipsoids[__builtin_ctz(mask)])
                                        : volume_from_support_3d(shapes);
    acc += ((3 - static_cast<int>(shapes.size())) % 2 == 0) ? v : -v;
  }
  return acc / 6.0;
}

// --- headline quantities --------------------------------------------------

namespace {

std::vector<Ellipsoid> support_ellipsoids(std::span<const SupportSet> supports) {
  const int n = static_cast<int>(supports.size());
  if (n < 1) throw Error("need at least one support");
  if (n > 3) throw UnsupportedDimension("root statistics: n > 3");
  std::vector<Ellipsoid> ells;
  ells.reserve(n);
  for (const auto& s : supports) {
    if (s.dim() != n)
      throw DimensionMismatch("a system of n supports must live in dimension n");
    ells.push_back(moment_matrix(s));
  }
  return ells;
}

}  // namespace

double expected_real_roots(std::span<const SupportSet> supports, std::int64_t samples,
                           std::uint64_t seed, int workers) {
  const auto ells = support_ellipsoids(supports);
  const MVEstimate mv = mixed_volume_ellipsoids(ells, samples, seed, workers);
  return factorial(static_cast<int>(supports.size())) * mv.value;
}

double bkk_count(std::span<const SupportSet> supports) {
  const int n = static_cast<int>(supports.size());
  if (n < 1) throw Error("need at least one support");
  if (n > 3) throw UnsupportedDimension("bkk_count: n > 3");
  std::vector<LatticePolytope> hulls;
  hulls.reserve(n);
  for (const auto& s : supports) {
    if (s.dim() != n)
      throw DimensionMismatch("a system of n supports must live in dimension n");
    hulls.push_back(newton_polytope(s));
  }
  Rational count = mixed_volume_polytopes(hulls);
  BigInt nf = 1;
  for (int k = 2; k <= n; ++k) nf *= k;
  count *= Rational(nf);
  if (denominator(count) != 1)
    throw Error("BKK count is not an integer: " + rational_to_string(count));
  return to_double(count);
}

RootStatistics real_fraction(std::span<const SupportSet> supports, std::int64_t samples,
                             std::uint64_t seed, int workers) {
  const double bkk = bkk_count(supports);
  if (bkk <= 0)
    throw ZeroBKK("all Newton polytopes are jointly degenerate; BKK count is zero");
  const double expected = expected_real_roots(supports, samples, seed, workers);
  RootStatistics stats;
  stats.expected_real = expected;
  stats.bkk = bkk;
  stats.fraction = std::clamp(expected / bkk, 0.0, 1.0);
  return stats;
}

double limit_real_fraction(std::span<const BodySpec> bodies) {
  const int n = static_cast<int>(bodies.size());
  if (n < 1) throw Error("need at least one body");
  if (n > 3) throw UnsupportedDimension("limit_real_fraction: n > 3");

  std::vector<Ellipsoid> ells;
  ells.reserve(n);
  bool all_balls = true, all_polytopes = true;
  for (const auto& b : bodies) {
    if (b.dim() != n) throw DimensionMismatch("a tuple of n bodies must live in dimension n");
    const auto star = check_condition_star(b);
    if (!star.ok) throw ConditionStarViolated(star.note);
    ells.push_back(limit_moment_matrix(b));
    all_balls &= b.is_ball();
    all_polytopes &= !b.is_ball();
  }

  double denom = 0.0;
  if (all_balls) {
    denom = unit_ball_volume(n);
    for (const auto& b : bodies) denom *= to_double(b.as_ball().radius);
  } else if (all_polytopes) {
    std::vector<LatticePolytope> hulls;
    hulls.reserve(n);
    for (const auto& b : bodies) hulls.push_back(convex_hull(b.as_polytope().vertices));
    denom = to_double(mixed_volume_polytopes(hulls));
  } else {
    throw Error("limit_real_fraction: mixed ball/polytope tuples are not supported");
  }
  if (denom <= 0) throw ZeroBKK("body tuple has zero mixed volume");
  return mixed_volume_ellipsoids_deterministic(ells) / denom;
}

AFGaps af_inequality_gap_ellipsoids(std::span<const Ellipsoid> ellipsoids) {
  const int n = static_cast<int>(ellipsoids.size());
  if (n < 2 || n > 3) throw UnsupportedDimension("Alexandrov-Fenchel gaps need n in {2, 3}");
  for (const auto& e : ellipsoids)
    if (e.dim() != n) throw DimensionMismatch("n ellipsoids must live in dimension n");

  const double nf = factorial(n);
  const auto mv = [&](std::vector<Ellipsoid> tuple) {
    return nf * mixed_volume_ellipsoids_deterministic(tuple);
  };

  std::vector<Ellipsoid> base(ellipsoids.begin(), ellipsoids.end());
  const double mixed = mv(base);

  auto repeat_last = base;
  repeat_last[n - 2] = base[n - 2];
  repeat_last[n - 1] = base[n - 2];
  const double left = mv(repeat_last);
  repeat_last[n - 2] = base[n - 1];
  repeat_last[n - 1] = base[n - 1];
  const double right = mv(repeat_last);

  AFGaps gaps;
  gaps.quadratic_gap = mixed * mixed - left * right;

  double diag_product = 1.0;
  for (int i = 0; i < n; ++i)
    diag_product *= mv(std::vector<Ellipsoid>(static_cast<std::size_t>(n), ellipsoids[i]));
  gaps.product_gap = std::pow(mixed, n) - diag_product;
  return gaps;
}

AFGaps af_inequality_gap(std::span<const SupportSet> supports) {
  return af_inequality_gap_ellipsoids(support_ellipsoids(supports));
}

}  // namespace realroots
