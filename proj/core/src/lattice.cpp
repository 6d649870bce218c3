#include "realroots/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "realroots/geometry.hpp"

namespace realroots {

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

SupportSet SupportSet::validate(std::vector<LatticeVector> points) {
  if (points.empty()) throw Error("support set must be nonempty");
  const int dim = static_cast<int>(points[0].size());
  if (dim < 1) throw DimensionMismatch("support points must have dimension >= 1");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw DimensionMismatch("support point " + to_string(p) + " has dimension " +
                              std::to_string(p.size()) + ", expected " + std::to_string(dim));

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  for (const auto& p : points) {
    LatticeVector neg(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) neg[i] = -p[i];
    if (!std::binary_search(points.begin(), points.end(), neg))
      throw NotCentrallySymmetric("support is not centrally symmetric: contains " +
                                  to_string(p) + " but not " + to_string(neg));
  }
  return SupportSet(dim, std::move(points));
}

bool SupportSet::contains(const LatticeVector& v) const {
  return std::binary_search(points_.begin(), points_.end(), v);
}

SupportSet validate_support(const std::vector<LatticeVector>& points) {
  return SupportSet::validate(points);
}

BodySpec BodySpec::ball(Rational radius, int dim) {
  if (radius <= 0) throw Error("ball radius must be positive");
  if (dim < 1 || dim > 3)
    throw UnsupportedDimension("ball dimension must be in 1..3");
  return BodySpec(Ball{std::move(radius), dim});
}

BodySpec BodySpec::polytope(std::vector<RationalVector> vertices) {
  if (vertices.empty()) throw Error("polytope needs at least one vertex");
  const int dim = static_cast<int>(vertices[0].size());
  if (dim < 1 || dim > 3)
    throw UnsupportedDimension("polytope dimension must be in 1..3");
  for (const auto& v : vertices)
    if (static_cast<int>(v.size()) != dim)
      throw DimensionMismatch("polytope vertices have mixed dimensions");

  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (const auto& v : vertices)
    if (!std::binary_search(vertices.begin(), vertices.end(), negated(v)))
      throw NotCentrallySymmetric("polytope vertex set is not symmetric under negation");
  return BodySpec(PolytopeSpec{std::move(vertices)});
}

int BodySpec::dim() const {
  if (is_ball()) return as_ball().dim;
  return static_cast<int>(as_polytope().vertices[0].size());
}

ConditionStarReport check_condition_star(const BodySpec& body) {
  ConditionStarReport report;
  if (body.is_ball()) {
    report.ok = true;
    report.span_dim = body.as_ball().dim;
    report.note = "full-dimensional ball";
    return report;
  }
  // The linear span of a symmetric polytope is spanned by its (rational)
  // vertices, so an integer basis always exists: scale each spanning vertex
  // to clear denominators.
  report.span_dim = rational_rank(body.as_polytope().vertices);
  report.ok = true;
  report.note = report.span_dim == body.dim()
                    ? "full-dimensional polytope"
                    : "span of dimension " + std::to_string(report.span_dim) +
                          " generated by scaled rational vertices";
  return report;
}

namespace {

void enumerate_box(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
                   const std::function<void(const LatticeVector&)>& visit) {
  LatticeVector x(lo.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == x.size()) {
      visit(x);
      return;
    }
    for (std::int64_t v = lo[i]; v <= hi[i]; ++v) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

std::int64_t floor_div(const BigInt& num, const BigInt& den) {
  // den > 0
  BigInt q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q.convert_to<std::int64_t>();
}

}  // namespace

SupportSet dilate_and_intersect(const BodySpec& body, int m) {
  if (m < 1) throw Error("dilation factor must be a positive integer");
  const auto star = check_condition_star(body);
  if (!star.ok) throw ConditionStarViolated(star.note);
  const int n = body.dim();

  std::vector<LatticeVector> found;

  if (body.is_ball()) {
    const Rational r = body.as_ball().radius * m;
    const BigInt p = numerator(r);
    const BigInt q = denominator(r);
    const std::int64_t bound = floor_div(p, q);
    const BigInt rhs = p * p;
    std::vector<std::int64_t> lo(n, -bound), hi(n, bound);
    enumerate_box(lo, hi, [&](const LatticeVector& x) {
      BigInt s = 0;
      for (const auto c : x) s += BigInt(c) * c;
      if (s * q * q <= rhs) found.push_back(x);
    });
  } else {
    const LatticePolytope hull = convex_hull(body.as_polytope().vertices);
    const FacetSystem fs = facet_system(hull);
    std::vector<std::int64_t> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
      Rational coord_max = 0;
      for (const auto& v : hull.vertices()) coord_max = std::max(coord_max, Rational(abs(v[i])));
      const Rational b = coord_max * m;
      hi[i] = floor_div(numerator(b), denominator(b));
      lo[i] = -hi[i];
    }
    enumerate_box(lo, hi, [&](const LatticeVector& x) {
      RationalVector xr(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) xr[i] = x[i];
      for (const auto& eq : fs.equalities)
        if (dot(eq.normal, xr) != eq.offset * m) return;
      for (const auto& ineq : fs.inequalities)
        if (dot(ineq.normal, xr) > ineq.offset * m) return;
      found.push_back(x);
    });
  }

  return SupportSet::validate(std::move(found));
}

}  // namespace realroots
