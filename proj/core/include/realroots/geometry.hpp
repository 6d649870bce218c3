#pragma once

#include <Eigen/Dense>

#include <array>
#include <variant>
#include <vector>

#include "realroots/errors.hpp"
#include "realroots/lattice.hpp"
#include "realroots/rational.hpp"

namespace realroots {

/// Convex polytope with exact rational vertices, dimensions 1-3.
/// Only extreme points are stored. In 2D (and for planar hulls embedded in
/// 3D) the vertices form a counter-clockwise ring; in 1D they are {min, max}.
/// Volumes are Lebesgue with the lattice fundamental cube normalized to 1.
class LatticePolytope {
 public:
  int dim() const { return dim_; }
  int intrinsic_dim() const { return intrinsic_dim_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }

  // Triangulated boundary, outward-wound, present only for full-dimensional
  // hulls in 3D. Indices refer to hull_points(), which may retain points
  // that the extreme-vertex filter dropped from vertices().
  const std::vector<std::array<int, 3>>& facets() const { return facets_; }
  const std::vector<RationalVector>& hull_points() const { return hull_points_; }

 private:
  friend LatticePolytope convex_hull(const std::vector<RationalVector>& points);

  int dim_ = 0;
  int intrinsic_dim_ = 0;
  std::vector<RationalVector> vertices_;
  std::vector<RationalVector> hull_points_;
  std::vector<std::array<int, 3>> facets_;
};

/// Centered ellipsoid {x : sqrt(x' M x) bounds directions}, represented by
/// its symmetric positive-semidefinite shape matrix M. The support function
/// is h(xi) = sqrt(xi' M xi). Singular M gives a lower-dimensional body.
class Ellipsoid {
 public:
  explicit Ellipsoid(Eigen::MatrixXd shape);

  int dim() const { return static_cast<int>(shape_.rows()); }
  const Eigen::MatrixXd& shape() const { return shape_; }
  double support(const Eigen::VectorXd& xi) const;
  Ellipsoid scaled(double t) const;

  // Exact structural tests used by the deterministic mixed-volume shortcuts.
  bool is_ball(double* radius = nullptr) const;
  bool same_shape(const Ellipsoid& other) const;

 private:
  Eigen::MatrixXd shape_;
};

using ConvexBody = std::variant<LatticePolytope, Ellipsoid>;

struct HalfSpace {
  RationalVector normal;  // primitive integer direction
  Rational offset;        // <normal, x> <= offset
};

struct FacetSystem {
  std::vector<HalfSpace> inequalities;
  std::vector<HalfSpace> equalities;  // <normal, x> = offset, for degenerate hulls
};

/// Exact convex hull in dimensions 1-3. Lower-dimensional input is allowed;
/// the result is flagged with its intrinsic dimension.
LatticePolytope convex_hull(const std::vector<RationalVector>& points);

LatticePolytope newton_polytope(const SupportSet& support);

/// Hull of pairwise vertex sums.
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

/// Ambient-dimension Lebesgue volume; zero for degenerate hulls.
Rational volume(const LatticePolytope& p);

/// Facet inequalities (plus span equalities when the hull is degenerate),
/// with primitive integer normals. For a facet normal u the offset equals
/// the support function h_P(u).
FacetSystem facet_system(const LatticePolytope& p);

double unit_ball_volume(int n);

/// kappa_n * sqrt(det M); zero when M is singular.
double ellipsoid_volume(const Ellipsoid& e);

double support_function(const LatticePolytope& p, const Eigen::VectorXd& xi);
double support_function(const Ellipsoid& e, const Eigen::VectorXd& xi);
double support_function(const ConvexBody& b, const Eigen::VectorXd& xi);

/// Deterministic unit directions: +-1 in 1D, uniform angles in 2D,
/// Fibonacci sphere in 3D.
std::vector<Eigen::VectorXd> direction_grid(int dim, int count);

/// Max support-function gap over a deterministic direction grid. A lower
/// bound on the true Hausdorff distance at finite sampling; exact in the
/// dense-direction limit for convex bodies.
double hausdorff_distance(const ConvexBody& a, const ConvexBody& b, int directions);

/// Exact facet test: sqrt(u' M u) <= h_P(u) for every facet normal u.
/// Throws DegeneratePolytope when P is not full-dimensional.
bool ellipsoid_in_polytope(const Ellipsoid& e, const LatticePolytope& p);

}  // namespace realroots
