#include "realroots/root_count.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <exception>
#include <numbers>
#include <thread>
#include <vector>

#include "realroots/rng.hpp"

namespace realroots {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

double eval1(const TrigPolynomial& f, double theta) {
  return evaluate(f, std::span<const double>(&theta, 1));
}

}  // namespace

int count_real_roots_1d(const TrigPolynomial& f) {
  if (f.support().dim() != 1)
    throw DimensionMismatch("count_real_roots_1d: support must be one-dimensional");
  const std::int64_t max_freq = f.max_frequency();
  const int scan = static_cast<int>(16 * max_freq + 64);
  const double step = kTwoPi / scan;

  std::vector<double> vals(scan);
  for (int j = 0; j < scan; ++j) vals[j] = eval1(f, j * step);

  // Tangential guard: |f| below threshold at a scan extremum without an
  // adjacent sign change marks an (even-order) grazing zero. Those have
  // probability zero under Gaussian coefficients; reject the sample. A node
  // hitting zero exactly still counts when the neighbors change sign.
  int count = 0;
  for (int j = 0; j < scan; ++j) {
    const double prev = vals[(j + scan - 1) % scan];
    const double next = vals[(j + 1) % scan];
    if (vals[j] == 0.0) {
      if (sign_of(prev) * sign_of(next) < 0) {
        ++count;  // transversal root exactly at the node
        continue;
      }
      throw DegenerateSample("grazing zero at a scan node");
    }
    if (std::abs(vals[j]) < 1e-9 && sign_of(prev) == sign_of(vals[j]) &&
        sign_of(next) == sign_of(vals[j]) && std::abs(vals[j]) <= std::abs(prev) &&
        std::abs(vals[j]) <= std::abs(next))
      throw DegenerateSample("tangential zero suspected at theta = " +
                             std::to_string(j * step));
  }
  for (int j = 0; j < scan; ++j) {
    double a = j * step, b = (j + 1) * step;
    double fa = vals[j];
    const double fb = vals[(j + 1) % scan];
    if (sign_of(fa) * sign_of(fb) >= 0) continue;
    double fm = fa;
    while (b - a > 1e-12) {
      const double mid = 0.5 * (a + b);
      fm = eval1(f, mid);
      if (fm == 0.0) break;
      if (sign_of(fm) == sign_of(fa)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    ++count;
  }
  return count;
}

int count_complex_roots_1d(const TrigPolynomial& f) {
  if (f.support().dim() != 1)
    throw DimensionMismatch("count_complex_roots_1d: support must be one-dimensional");
  const std::int64_t max_freq = f.max_frequency();
  if (max_freq == 0) return 0;  // constant polynomial

  const auto laurent = to_laurent(f);
  const int degree = static_cast<int>(2 * max_freq);
  Eigen::VectorXcd poly = Eigen::VectorXcd::Zero(degree + 1);  // z^{max_freq} f(z)
  for (const auto& [lambda, a] : laurent) poly[lambda[0] + max_freq] = a;

  const std::complex<double> leading = poly[degree];
  if (std::abs(leading) < 1e-300)
    throw LeadingCoefficientZero("top Laurent coefficient vanished");

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -poly[i] / leading;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw Error("companion-matrix eigenvalue computation failed");

  int count = 0;
  for (int i = 0; i < degree; ++i)
    if (std::abs(solver.eigenvalues()[i]) > 1e-10) ++count;
  return count;
}

// --- 2D counting ----------------------------------------------------------

namespace {

struct Point2 {
  double x, y;
};

double eval2(const TrigPolynomial& f, double x, double y) {
  const double theta[2] = {x, y};
  return evaluate(f, theta);
}

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0 ? t + kTwoPi : t;
}

double toroidal_dist(const Point2& a, const Point2& b) {
  double dx = std::abs(a.x - b.x);
  double dy = std::abs(a.y - b.y);
  dx = std::min(dx, kTwoPi - dx);
  dy = std::min(dy, kTwoPi - dy);
  return std::hypot(dx, dy);
}

// Newton on (f1, f2) from a contour point; returns true on convergence.
bool newton_polish(const TrigPolynomial& f1, const TrigPolynomial& f2, Point2& p) {
  for (int iter = 0; iter < 50; ++iter) {
    const double theta[2] = {p.x, p.y};
    const Eigen::Vector2d fv(evaluate(f1, theta), evaluate(f2, theta));
    if (fv.norm() <= 1e-10) return true;
    Eigen::Matrix2d jac;
    jac.row(0) = gradient(f1, theta).transpose();
    jac.row(1) = gradient(f2, theta).transpose();
    if (std::abs(jac.determinant()) < 1e-14) return false;
    const Eigen::Vector2d delta = jac.partialPivLu().solve(fv);
    if (!delta.allFinite() || delta.norm() > 1.0) return false;
    p.x = wrap_angle(p.x - delta[0]);
    p.y = wrap_angle(p.y - delta[1]);
  }
  return false;
}

}  // namespace

int count_real_roots_2d(const TrigPolynomial& f1, const TrigPolynomial& f2, int grid,
                        RootCountDiagnostics* diag) {
  if (f1.support().dim() != 2 || f2.support().dim() != 2)
    throw DimensionMismatch("count_real_roots_2d: supports must be two-dimensional");
  const std::int64_t max_freq = std::max(f1.max_frequency(), f2.max_frequency());
  const int required = static_cast<int>(32 * max_freq);
  if (grid <= 0) grid = std::max(64, required);
  if (grid < required)
    throw GridTooCoarse("grid " + std::to_string(grid) + " is below 32 cells per frequency (" +
                        std::to_string(required) + ")");
  if (diag) diag->grid = grid;

  const SupportSet supports[2] = {f1.support(), f2.support()};
  const double bkk = bkk_count(supports);

  const double h = kTwoPi / grid;
  std::vector<double> vals(static_cast<std::size_t>(grid) * grid);
  const auto at = [&](int i, int j) -> double {
    return vals[static_cast<std::size_t>(((j % grid + grid) % grid)) * grid +
                static_cast<std::size_t>((i % grid + grid) % grid)];
  };
  for (int j = 0; j < grid; ++j)
    for (int i = 0; i < grid; ++i)
      vals[static_cast<std::size_t>(j) * grid + i] = eval2(f1, i * h, j * h);

  std::vector<Point2> roots;
  const auto consider_segment = [&](Point2 a, Point2 b) {
    const double g_a = eval2(f2, a.x, a.y);
    const double g_b = eval2(f2, b.x, b.y);
    if (sign_of(g_a) * sign_of(g_b) >= 0) return;
    const double t = g_a / (g_a - g_b);
    Point2 p{wrap_angle(a.x + t * (b.x - a.x)), wrap_angle(a.y + t * (b.y - a.y))};
    if (!newton_polish(f1, f2, p)) {
      if (diag) ++diag->newton_failures;
      return;
    }
    for (const auto& r : roots)
      if (toroidal_dist(r, p) < 1e-4) return;
    roots.push_back(p);
  };

  // Marching squares over the periodic grid. Corners with f1 >= 0 count as
  // positive; the two ambiguous saddle configurations are resolved with an
  // exact evaluation at the cell center.
  for (int j = 0; j < grid; ++j) {
    for (int i = 0; i < grid; ++i) {
      const double c00 = at(i, j), c10 = at(i + 1, j);
      const double c01 = at(i, j + 1), c11 = at(i + 1, j + 1);
      const int s00 = c00 >= 0, s10 = c10 >= 0, s01 = c01 >= 0, s11 = c11 >= 0;
      const int config = (s11 << 3) | (s01 << 2) | (s10 << 1) | s00;
      if (config == 0 || config == 15) continue;

      const double x0 = i * h, y0 = j * h;
      const auto bottom = [&] { return Point2{x0 + h * c00 / (c00 - c10), y0}; };
      const auto top = [&] { return Point2{x0 + h * c01 / (c01 - c11), y0 + h}; };
      const auto left = [&] { return Point2{x0, y0 + h * c00 / (c00 - c01)}; };
      const auto right = [&] { return Point2{x0 + h, y0 + h * c10 / (c10 - c11)}; };

      switch (config) {
        case 1: case 14: consider_segment(left(), bottom()); break;
        case 2: case 13: consider_segment(bottom(), right()); break;
        case 3: case 12: consider_segment(left(), right()); break;
        case 4: case 11: consider_segment(top(), left()); break;
        case 5: case 10: consider_segment(top(), bottom()); break;
        case 7: case 8:  consider_segment(right(), top()); break;
        case 6: case 9: {
          const double center = eval2(f1, x0 + h / 2, y0 + h / 2);
          const bool center_pos = center >= 0;
          const bool corner_pos = config == 9;  // c00 and c11 positive
          if (center_pos == corner_pos) {
            consider_segment(left(), top());
            consider_segment(bottom(), right());
          } else {
            consider_segment(left(), bottom());
            consider_segment(top(), right());
          }
          break;
        }
        default: break;
      }
    }
  }

  const int count = static_cast<int>(roots.size());
  if (count > bkk + 0.5)
    throw GridTooCoarse("found " + std::to_string(count) +
                        " roots, above the BKK bound " + std::to_string(bkk));
  return count;
}

MVEstimate mc_expected_roots(std::span<const SupportSet> supports, std::int64_t samples,
                             std::uint64_t seed, RootKind kind, int workers,
                             RootCountDiagnostics* diag, int grid) {
  const int n = static_cast<int>(supports.size());
  if (n < 1 || n > 2)
    throw UnsupportedDimension("mc_expected_roots: systems of 1 or 2 polynomials only");
  for (const auto& s : supports)
    if (s.dim() != n) throw DimensionMismatch("a system of n supports needs dimension n");
  if (kind == RootKind::kComplex && n != 1)
    throw UnsupportedDimension("complex root counting is limited to one variable");
  if (samples < 1) throw Error("mc_expected_roots: need at least one sample");
  workers = std::max(1, std::min<int>(workers, static_cast<int>(std::min<std::int64_t>(
                                                   samples, 1 << 16))));

  const std::int64_t resample_cap = std::max<std::int64_t>(1, samples / 100);

  std::vector<RunningStats> partial(workers);
  std::vector<RootCountDiagnostics> pdiag(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);

  for (int w = 0; w < workers; ++w) {
    const std::int64_t count = samples / workers + (w < samples % workers ? 1 : 0);
    pool.emplace_back([&, w, count] {
      try {
        auto rng = worker_stream(seed, static_cast<std::uint64_t>(w));
        for (std::int64_t i = 0; i < count; ++i) {
          for (;;) {
            try {
              int roots = 0;
              if (n == 1) {
                const TrigPolynomial f = sample(supports[0], rng);
                roots = kind == RootKind::kReal ? count_real_roots_1d(f)
                                                : count_complex_roots_1d(f);
              } else {
                const TrigPolynomial f1 = sample(supports[0], rng);
                const TrigPolynomial f2 = sample(supports[1], rng);
                roots = count_real_roots_2d(f1, f2, grid, &pdiag[w]);
              }
              partial[w].add(static_cast<double>(roots));
              break;
            } catch (const DegenerateSample&) {
              if (++pdiag[w].resamples > resample_cap)
                throw ExcessiveDegeneracy(
                    "more than 1% of samples were degenerate; likely an implementation "
                    "or input problem");
            }
          }
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  RunningStats stats;
  RootCountDiagnostics total;
  for (int w = 0; w < workers; ++w) {
    stats.merge(partial[w]);
    total.resamples += pdiag[w].resamples;
    total.newton_failures += pdiag[w].newton_failures;
    total.grid = std::max(total.grid, pdiag[w].grid);
  }
  if (total.resamples > resample_cap)
    throw ExcessiveDegeneracy("more than 1% of samples were degenerate");
  if (diag) *diag = total;

  return MVEstimate{stats.mean(), stats.std_error(), stats.count(), seed};
}

}  // namespace realroots
