#pragma once

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "realroots/lattice.hpp"

namespace realroots {

/// True when the first nonzero coordinate is positive. This fixes the
/// half-space split of a symmetric support: a lex-positive lambda carries
/// the cosine basis function sqrt(2) cos<theta, lambda>, its negation
/// carries sqrt(2) sin<theta, lambda>, and zero carries the constant 1.
bool lex_positive(const LatticeVector& v);

/// Trigonometric polynomial on the n-torus: one real coefficient per
/// support vector, aligned with the (lexicographically sorted) support
/// points. Coefficients are in the orthonormal basis above.
class TrigPolynomial {
 public:
  TrigPolynomial(SupportSet support, std::vector<double> coeffs);

  const SupportSet& support() const { return support_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double coeff(const LatticeVector& v) const;

  // Largest absolute frequency over all coordinates; bounds the bandwidth.
  std::int64_t max_frequency() const;

 private:
  SupportSet support_;
  std::vector<double> coeffs_;
};

/// Independent standard normal coefficients. Zero sets are invariant under
/// positive scaling, so root-count statistics match the uniform-on-sphere
/// model without a normalization step.
TrigPolynomial sample(const SupportSet& support, std::mt19937_64& rng);

double evaluate(const TrigPolynomial& f, std::span<const double> theta);

Eigen::VectorXd gradient(const TrigPolynomial& f, std::span<const double> theta);

/// Laurent coefficients a_lambda with a_{-lambda} = conj(a_lambda):
/// a_lambda = (c_lambda - i c_{-lambda}) / sqrt(2) for lex-positive lambda.
std::map<LatticeVector, std::complex<double>> to_laurent(const TrigPolynomial& f);

}  // namespace realroots
