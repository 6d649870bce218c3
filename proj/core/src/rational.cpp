#include "realroots/rational.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "realroots/errors.hpp"

namespace realroots {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw ParseError("rational with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("not a rational: '" + text + "'");
  }
}

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector negated(const RationalVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

RationalVector vec_sub(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_sub: dimension mismatch");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVector vec_add(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_add: dimension mismatch");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVector primitive_direction(const RationalVector& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, numerator(x));
  if (g == 0) return v;
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / Rational(g);
  return r;
}

RationalVector to_primitive_integer(const RationalVector& v) {
  BigInt l = 1;
  for (const auto& x : v) l = lcm(l, denominator(x));
  RationalVector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = v[i] * Rational(l);
  return primitive_direction(scaled);
}

int rational_rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t col = 0; r < rows.size() && col < cols; ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const Rational factor = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace realroots
