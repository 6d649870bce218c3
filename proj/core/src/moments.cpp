#include "realroots/moments.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <numbers>
#include <vector>

namespace realroots {

Ellipsoid moment_matrix(const SupportSet& support) {
  const int n = support.dim();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  for (const auto& p : support.points())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sum(i, j) += static_cast<double>(p[i]) * p[j];
  return Ellipsoid(sum / static_cast<double>(support.size()));
}

namespace {

using RatMatrix = std::vector<RationalVector>;  // row-major n x n

RatMatrix zero_matrix(int n) { return RatMatrix(n, RationalVector(n, Rational(0))); }

void add_outer(RatMatrix& m, const RationalVector& a, const RationalVector& b,
               const Rational& w) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m[i][j] += w * a[i] * b[j];
}

// vol-weighted integral of x x' over the simplex conv(vertices), divided by
// vol: (sum v_i v_i' + (sum v_i)(sum v_i)') / ((k+1)(k+2)). Affine-natural,
// so ambient coordinates work for embedded simplices.
RatMatrix simplex_mean_xx(const std::vector<RationalVector>& verts, int ambient) {
  const int k = static_cast<int>(verts.size()) - 1;
  RatMatrix m = zero_matrix(ambient);
  RationalVector total(ambient, Rational(0));
  for (const auto& v : verts) {
    add_outer(m, v, v, 1);
    total = vec_add(total, v);
  }
  add_outer(m, total, total, 1);
  const Rational denom = (k + 1) * (k + 2);
  for (auto& row : m)
    for (auto& x : row) x /= denom;
  return m;
}

Rational det2(const RationalVector& a, const RationalVector& b) {
  return a[0] * b[1] - a[1] * b[0];
}

Rational det3r(const RationalVector& u, const RationalVector& v, const RationalVector& w) {
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
         u[2] * (v[0] * w[1] - v[1] * w[0]);
}

}  // namespace

Ellipsoid limit_moment_matrix(const BodySpec& body) {
  const auto star = check_condition_star(body);
  if (!star.ok) throw ConditionStarViolated(star.note);
  const int n = body.dim();

  if (body.is_ball()) {
    const Rational r = body.as_ball().radius;
    const double diag = to_double(r * r / (n + 2));
    return Ellipsoid(diag * Eigen::MatrixXd::Identity(n, n));
  }

  const LatticePolytope hull = convex_hull(body.as_polytope().vertices);
  const int k = hull.intrinsic_dim();
  const auto& verts = hull.vertices();

  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  if (k == 0) return Ellipsoid(out);  // the body is the origin

  RatMatrix num = zero_matrix(n);
  Rational den = 0;

  if (k == 1) {
    // One simplex; the 1-volume cancels in the mean.
    num = simplex_mean_xx({verts[0], verts[1]}, n);
    den = 1;
  } else if (k == 2 && n == 2) {
    // Fan from the origin (inside by central symmetry) over the ccw ring.
    const RationalVector origin(n, Rational(0));
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const auto& a = verts[i];
      const auto& b = verts[(i + 1) % verts.size()];
      const Rational vol = det2(a, b) / 2;
      const RatMatrix mean = simplex_mean_xx({origin, a, b}, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) num[r][c] += vol * mean[r][c];
      den += vol;
    }
  } else if (k == 2 && n == 3) {
    // Planar body in 3-space: fan in the plane; signed parameter-space
    // areas share one sign around the ring, so the common scale between
    // parameter measure and Euclidean area cancels in num/den.
    const RationalVector b1 = vec_sub(verts[1], verts[0]);
    const RationalVector b2 = vec_sub(verts[2], verts[0]);
    const auto param = [&](const RationalVector& v) {
      return RationalVector{dot(v, b1), dot(v, b2)};
    };
    const RationalVector origin(n, Rational(0));
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const auto& a = verts[i];
      const auto& b = verts[(i + 1) % verts.size()];
      const Rational vol = det2(param(a), param(b)) / 2;
      const RatMatrix mean = simplex_mean_xx({origin, a, b}, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) num[r][c] += vol * mean[r][c];
      den += vol;
    }
  } else if (k == 3) {
    const RationalVector origin(n, Rational(0));
    for (const auto& f : hull.facets()) {
      const auto& a = hull.hull_points()[f[0]];
      const auto& b = hull.hull_points()[f[1]];
      const auto& c = hull.hull_points()[f[2]];
      const Rational vol = det3r(a, b, c) / 6;  // outward winding: >= 0
      const RatMatrix mean = simplex_mean_xx({origin, a, b, c}, n);
      for (int r = 0; r < n; ++r)
        for (int col = 0; col < n; ++col) num[r][col] += vol * mean[r][col];
      den += vol;
    }
  } else {
    throw UnsupportedDimension("limit_moment_matrix: unsupported span dimension");
  }

  if (den == 0) throw DegeneratePolytope("limit_moment_matrix: zero-volume body");
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out(r, c) = to_double(num[r][c] / den);
  return Ellipsoid(out);
}

namespace {

struct BetaIntegrand {
  double exponent;  // (n-1)/2
};

double beta_integrand(double x, void* params) {
  const auto* p = static_cast<const BetaIntegrand*>(params);
  return x * x * std::pow(1.0 - x * x, p->exponent);
}

}  // namespace

BetaValue beta_n(int n) {
  if (n < 1 || n > 64) throw Error("beta_n: n must be in 1..64");
  BetaValue out;
  out.closed_form = std::exp(0.5 * std::log(std::numbers::pi) +
                             std::lgamma((n + 1) / 2.0) - std::numbers::ln2 -
                             std::lgamma(n / 2.0 + 2.0));

  gsl_set_error_handler_off();
  gsl_integration_workspace* ws = gsl_integration_workspace_alloc(4096);
  BetaIntegrand params{(n - 1) / 2.0};
  gsl_function f;
  f.function = &beta_integrand;
  f.params = &params;
  double result = 0.0, abserr = 0.0;
  // The integrand has endpoint derivative singularities for even n; QAGS
  // extrapolation converges to the requested absolute tolerance anyway.
  const int status =
      gsl_integration_qags(&f, -1.0, 1.0, 1e-12, 0.0, 4096, ws, &result, &abserr);
  gsl_integration_workspace_free(ws);
  if (status != GSL_SUCCESS && status != GSL_EROUND)
    throw Error("beta_n: quadrature failed with GSL status " + std::to_string(status));

  out.quadrature = result;
  out.difference = out.closed_form - out.quadrature;
  return out;
}

double sigma_n(int n) { return unit_ball_volume(n); }

}  // namespace realroots
