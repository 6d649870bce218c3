#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace realroots {

// Exact arithmetic for lattice geometry. Hull, volume and mixed-volume
// computations on polytopes run entirely over Rational so that n!-scaled
// lattice volumes come out as exact integers.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Accepts "p", "-p", "p/q" with arbitrary-precision integer parts.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& q);

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector negated(const RationalVector& v);
RationalVector vec_sub(const RationalVector& a, const RationalVector& b);
RationalVector vec_add(const RationalVector& a, const RationalVector& b);

// Scales an integer-valued direction to coprime entries; flips no signs.
// Precondition: v has integer entries (denominator 1).
RationalVector primitive_direction(const RationalVector& v);

// Clears denominators, then divides by the gcd of the numerators.
RationalVector to_primitive_integer(const RationalVector& v);

// Row rank by exact Gaussian elimination.
int rational_rank(std::vector<RationalVector> rows);

}  // namespace realroots
