#pragma once

#include "realroots/geometry.hpp"
#include "realroots/lattice.hpp"

namespace realroots {

/// Second-moment ellipsoid of a support: shape M = (1/N) sum of lambda
/// lambda' over the support. Its support function is the root mean square
/// of <lambda, xi>, so the body is contained in the Newton polytope.
Ellipsoid moment_matrix(const SupportSet& support);

/// Continuum limit of (1/m^2) * moment_matrix of the dilated supports:
/// M = (1/vol_k B) * integral of x x' over the body B, computed exactly.
/// Balls give (R^2/(n+2)) * I; polytopes are fan-triangulated from the
/// origin and use the closed-form simplex second moment.
Ellipsoid limit_moment_matrix(const BodySpec& body);

struct BetaValue {
  double closed_form = 0.0;  // sqrt(pi) * Gamma((n+1)/2) / (2 * Gamma(n/2 + 2))
  double quadrature = 0.0;   // adaptive quadrature of x^2 (1-x^2)^((n-1)/2) on [-1,1]
  double difference = 0.0;
};

/// Both evaluation routes for the ball-asymptotics constant, n in [1, 64].
BetaValue beta_n(int n);

/// Volume of the n-dimensional unit ball.
double sigma_n(int n);

}  // namespace realroots
