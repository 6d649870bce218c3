#include "realroots/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "realroots/errors.hpp"

namespace realroots {

bool lex_positive(const LatticeVector& v) {
  for (const auto c : v) {
    if (c > 0) return true;
    if (c < 0) return false;
  }
  return false;  // zero vector
}

TrigPolynomial::TrigPolynomial(SupportSet support, std::vector<double> coeffs)
    : support_(std::move(support)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != support_.size())
    throw DimensionMismatch("need exactly one coefficient per support vector");
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; }))
    throw Error("trigonometric polynomial must not be identically zero");
}

double TrigPolynomial::coeff(const LatticeVector& v) const {
  const auto& pts = support_.points();
  const auto it = std::lower_bound(pts.begin(), pts.end(), v);
  if (it == pts.end() || *it != v)
    throw Error("coefficient lookup outside the support: " + to_string(v));
  return coeffs_[static_cast<std::size_t>(it - pts.begin())];
}

std::int64_t TrigPolynomial::max_frequency() const {
  std::int64_t m = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0.0) continue;  // only live frequencies set the bandwidth
    for (const auto c : support_.points()[i]) m = std::max(m, std::abs(c));
  }
  return m;
}

TrigPolynomial sample(const SupportSet& support, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> coeffs(support.size());
  do {
    for (auto& c : coeffs) c = normal(rng);
  } while (std::all_of(coeffs.begin(), coeffs.end(), [](double c) { return c == 0.0; }));
  return TrigPolynomial(support, std::move(coeffs));
}

namespace {

double phase(const LatticeVector& lambda, std::span<const double> theta) {
  double s = 0.0;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += lambda[i] * theta[i];
  return s;
}

}  // namespace

double evaluate(const TrigPolynomial& f, std::span<const double> theta) {
  if (static_cast<int>(theta.size()) != f.support().dim())
    throw DimensionMismatch("evaluate: point dimension mismatch");
  const auto& pts = f.support().points();
  const auto& coeffs = f.coeffs();
  double acc = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& lambda = pts[i];
    const double c = coeffs[i];
    if (c == 0.0) continue;
    if (std::all_of(lambda.begin(), lambda.end(), [](auto x) { return x == 0; })) {
      acc += c;
    } else if (lex_positive(lambda)) {
      acc += c * std::numbers::sqrt2 * std::cos(phase(lambda, theta));
    } else {
      // stored at -lambda: the sine partner of the lex-positive frequency
      acc -= c * std::numbers::sqrt2 * std::sin(phase(lambda, theta));
    }
  }
  return acc;
}

Eigen::VectorXd gradient(const TrigPolynomial& f, std::span<const double> theta) {
  const int n = f.support().dim();
  if (static_cast<int>(theta.size()) != n)
    throw DimensionMismatch("gradient: point dimension mismatch");
  Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
  const auto& pts = f.support().points();
  const auto& coeffs = f.coeffs();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& lambda = pts[i];
    const double c = coeffs[i];
    if (c == 0.0) continue;
    if (std::all_of(lambda.begin(), lambda.end(), [](auto x) { return x == 0; })) continue;
    if (lex_positive(lambda)) {
      const double d = -c * std::numbers::sqrt2 * std::sin(phase(lambda, theta));
      for (int j = 0; j < n; ++j) g[j] += d * lambda[j];
    } else {
      const double d = -c * std::numbers::sqrt2 * std::cos(phase(lambda, theta));
      for (int j = 0; j < n; ++j) g[j] += d * lambda[j];
    }
  }
  return g;
}

std::map<LatticeVector, std::complex<double>> to_laurent(const TrigPolynomial& f) {
  std::map<LatticeVector, std::complex<double>> out;
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (const auto& lambda : f.support().points()) {
    if (std::all_of(lambda.begin(), lambda.end(), [](auto x) { return x == 0; })) {
      out[lambda] = f.coeff(lambda);
      continue;
    }
    if (!lex_positive(lambda)) continue;
    LatticeVector neg(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) neg[i] = -lambda[i];
    const std::complex<double> a(f.coeff(lambda) * inv_sqrt2, -f.coeff(neg) * inv_sqrt2);
    out[lambda] = a;
    out[neg] = std::conj(a);
  }
  return out;
}

}  // namespace realroots
