#include "realroots/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <utility>

namespace realroots {

namespace {

Rational cross2(const RationalVector& o, const RationalVector& a, const RationalVector& b,
                int xi = 0, int yi = 1) {
  return (a[xi] - o[xi]) * (b[yi] - o[yi]) - (a[yi] - o[yi]) * (b[xi] - o[xi]);
}

RationalVector cross3(const RationalVector& u, const RationalVector& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Rational det3(const RationalVector& u, const RationalVector& v, const RationalVector& w) {
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
         u[2] * (v[0] * w[1] - v[1] * w[0]);
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// --- 2D hull (Andrew's monotone chain, strict turns, exact) ------------

std::vector<RationalVector> hull_ring_2d(std::vector<RationalVector> pts, int xi = 0,
                                         int yi = 1) {
  std::sort(pts.begin(), pts.end(), [&](const RationalVector& a, const RationalVector& b) {
    if (a[xi] != b[xi]) return a[xi] < b[xi];
    return a[yi] < b[yi];
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<RationalVector> ring;
  // lower
  for (const auto& p : pts) {
    while (ring.size() >= 2 && cross2(ring[ring.size() - 2], ring.back(), p, xi, yi) <= 0)
      ring.pop_back();
    ring.push_back(p);
  }
  // upper
  const std::size_t lower_size = ring.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (ring.size() >= lower_size &&
           cross2(ring[ring.size() - 2], ring.back(), *it, xi, yi) <= 0)
      ring.pop_back();
    ring.push_back(*it);
  }
  ring.pop_back();  // closes on pts.front()
  return ring;      // counter-clockwise
}

// --- 3D hull (incremental, exact, strict visibility) -------------------

struct Face {
  std::array<int, 3> v;
};

// > 0 iff p is strictly on the outward side of the (ccw) face.
Rational orient_face(const std::vector<RationalVector>& pts, const Face& f,
                     const RationalVector& p) {
  return det3(vec_sub(pts[f.v[1]], pts[f.v[0]]), vec_sub(pts[f.v[2]], pts[f.v[0]]),
              vec_sub(p, pts[f.v[0]]));
}

// Points must be deduplicated and of affine rank 3; seed indices give a
// non-degenerate tetrahedron. Strict visibility keeps points lying exactly
// on the current boundary out of the hull, so every inserted point is
// outside; coplanar facets remain split into triangles.
std::vector<Face> hull_3d(const std::vector<RationalVector>& pts,
                          const std::array<int, 4>& seed) {
  int a = seed[0], b = seed[1], c = seed[2], d = seed[3];
  if (det3(vec_sub(pts[b], pts[a]), vec_sub(pts[c], pts[a]), vec_sub(pts[d], pts[a])) > 0)
    std::swap(b, c);
  std::vector<Face> faces = {{{a, b, c}}, {{a, c, d}}, {{a, d, b}}, {{b, d, c}}};

  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    if (i == a || i == b || i == c || i == d) continue;
    std::vector<bool> visible(faces.size(), false);
    bool any = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (orient_face(pts, faces[f], pts[i]) > 0) {
        visible[f] = true;
        any = true;
      }
    }
    if (!any) continue;  // inside or on the boundary

    std::map<std::pair<int, int>, std::size_t> owner;
    for (std::size_t f = 0; f < faces.size(); ++f)
      for (int e = 0; e < 3; ++e)
        owner[{faces[f].v[e], faces[f].v[(e + 1) % 3]}] = f;

    std::vector<Face> next;
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (!visible[f]) next.push_back(faces[f]);
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      for (int e = 0; e < 3; ++e) {
        const int u = faces[f].v[e];
        const int v = faces[f].v[(e + 1) % 3];
        if (!visible[owner.at({v, u})]) next.push_back(Face{{u, v, i}});
      }
    }
    faces = std::move(next);
  }
  return faces;
}

struct PlaneKey {
  RationalVector normal;
  Rational offset;
  bool operator<(const PlaneKey& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

PlaneKey face_plane(const std::vector<RationalVector>& pts, const Face& f) {
  RationalVector n = to_primitive_integer(
      cross3(vec_sub(pts[f.v[1]], pts[f.v[0]]), vec_sub(pts[f.v[2]], pts[f.v[0]])));
  return PlaneKey{n, dot(n, pts[f.v[0]])};
}

}  // namespace

LatticePolytope convex_hull(const std::vector<RationalVector>& points) {
  if (points.empty()) throw Error("convex_hull: empty point set");
  const int dim = static_cast<int>(points[0].size());
  if (dim < 1) throw UnsupportedDimension("convex_hull: dimension must be >= 1");
  if (dim > 3)
    throw UnsupportedDimension("convex_hull: dimension " + std::to_string(dim) +
                               " not supported (max 3)");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw DimensionMismatch("convex_hull: mixed point dimensions");

  std::vector<RationalVector> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope poly;
  poly.dim_ = dim;

  // Affine rank detection: a base point plus up to dim independent edges.
  const RationalVector& p0 = pts[0];
  int i1 = -1, i2 = -1, i3 = -1;
  for (std::size_t i = 1; i < pts.size() && i1 < 0; ++i)
    if (pts[i] != p0) i1 = static_cast<int>(i);
  if (i1 < 0) {
    poly.intrinsic_dim_ = 0;
    poly.vertices_ = {p0};
    return poly;
  }
  const RationalVector d1 = vec_sub(pts[i1], p0);

  if (dim == 1) {
    poly.intrinsic_dim_ = 1;
    poly.vertices_ = {pts.front(), pts.back()};  // sorted => min, max
    return poly;
  }

  for (std::size_t i = 1; i < pts.size() && i2 < 0; ++i) {
    const RationalVector e = vec_sub(pts[i], p0);
    const bool parallel = dim == 2 ? (d1[0] * e[1] - d1[1] * e[0]) == 0 : is_zero(cross3(d1, e));
    if (!parallel) i2 = static_cast<int>(i);
  }
  if (i2 < 0) {
    // Collinear: extremes along the parameter <p - p0, d1>.
    poly.intrinsic_dim_ = 1;
    const auto param = [&](const RationalVector& p) { return dot(vec_sub(p, p0), d1); };
    auto lo = pts[0], hi = pts[0];
    for (const auto& p : pts) {
      if (param(p) < param(lo)) lo = p;
      if (param(p) > param(hi)) hi = p;
    }
    poly.vertices_ = {lo, hi};
    return poly;
  }

  if (dim == 2) {
    poly.intrinsic_dim_ = 2;
    poly.vertices_ = hull_ring_2d(std::move(pts));
    return poly;
  }

  const RationalVector d2 = vec_sub(pts[i2], p0);
  for (std::size_t i = 1; i < pts.size() && i3 < 0; ++i)
    if (det3(d1, d2, vec_sub(pts[i], p0)) != 0) i3 = static_cast<int>(i);

  if (i3 < 0) {
    // Planar in 3D: hull in the exact projected coordinates
    // (<p,d1>, <p,d2>), which restrict to a linear bijection on the plane.
    poly.intrinsic_dim_ = 2;
    std::map<std::pair<Rational, Rational>, RationalVector> back;
    std::vector<RationalVector> proj;
    proj.reserve(pts.size());
    for (const auto& p : pts) {
      RationalVector q{dot(p, d1), dot(p, d2)};
      back[{q[0], q[1]}] = p;
      proj.push_back(std::move(q));
    }
    for (const auto& q : hull_ring_2d(std::move(proj)))
      poly.vertices_.push_back(back.at({q[0], q[1]}));
    return poly;
  }

  poly.intrinsic_dim_ = 3;
  const auto faces = hull_3d(pts, {0, i1, i2, i3});
  poly.hull_points_ = pts;
  poly.facets_.reserve(faces.size());
  for (const auto& f : faces) poly.facets_.push_back(f.v);

  // Extreme-vertex filter: a hull point is a vertex iff its incident facet
  // planes span all of 3-space. Points interior to a merged coplanar facet
  // (one plane) or interior to an edge (two planes) are dropped.
  std::map<int, std::set<PlaneKey>> incident;
  for (const auto& f : faces) {
    const PlaneKey key = face_plane(pts, f);
    for (int e = 0; e < 3; ++e) incident[f.v[e]].insert(key);
  }
  for (const auto& [idx, planes] : incident) {
    if (planes.size() < 3) continue;
    std::vector<RationalVector> normals;
    normals.reserve(planes.size());
    for (const auto& pk : planes) normals.push_back(pk.normal);
    if (rational_rank(std::move(normals)) == 3) poly.vertices_.push_back(pts[idx]);
  }
  std::sort(poly.vertices_.begin(), poly.vertices_.end());
  return poly;
}

LatticePolytope newton_polytope(const SupportSet& support) {
  std::vector<RationalVector> pts;
  pts.reserve(support.size());
  for (const auto& p : support.points()) {
    RationalVector q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i];
    pts.push_back(std::move(q));
  }
  return convex_hull(pts);
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim() != q.dim())
    throw DimensionMismatch("minkowski_sum: ambient dimensions differ");
  std::vector<RationalVector> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(vec_add(a, b));
  return convex_hull(sums);
}

Rational volume(const LatticePolytope& p) {
  if (p.intrinsic_dim() < p.dim()) return 0;
  switch (p.dim()) {
    case 1:
      return p.vertices()[1][0] - p.vertices()[0][0];
    case 2: {
      Rational twice = 0;
      const auto& ring = p.vertices();
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const auto& a = ring[i];
        const auto& b = ring[(i + 1) % ring.size()];
        twice += a[0] * b[1] - b[0] * a[1];
      }
      return abs(twice) / 2;
    }
    case 3: {
      // Outward winding makes the origin-anchored signed fan nonnegative.
      Rational six = 0;
      for (const auto& f : p.facets())
        six += det3(p.hull_points()[f[0]], p.hull_points()[f[1]], p.hull_points()[f[2]]);
      return abs(six) / 6;
    }
    default:
      throw UnsupportedDimension("volume: dimension > 3");
  }
}

namespace {

// Orthogonal complement of a single direction, as primitive integer rows.
std::vector<RationalVector> complement_of_direction(const RationalVector& d) {
  const int n = static_cast<int>(d.size());
  std::vector<RationalVector> rows;
  if (n == 2) {
    rows.push_back(to_primitive_integer({-d[1], d[0]}));
  } else if (n == 3) {
    std::vector<RationalVector> candidates;
    for (int i = 0; i < 3; ++i) {
      RationalVector e(3, Rational(0));
      e[i] = 1;
      RationalVector c = cross3(d, e);
      if (!is_zero(c)) candidates.push_back(to_primitive_integer(c));
    }
    for (const auto& c : candidates) {
      std::vector<RationalVector> trial = rows;
      trial.push_back(c);
      if (rational_rank(trial) == static_cast<int>(rows.size()) + 1) rows.push_back(c);
      if (rows.size() == 2) break;
    }
  }
  return rows;
}

}  // namespace

FacetSystem facet_system(const LatticePolytope& p) {
  FacetSystem sys;
  const int n = p.dim();
  const int k = p.intrinsic_dim();
  const auto& verts = p.vertices();

  if (k == 0) {
    for (int i = 0; i < n; ++i) {
      RationalVector e(n, Rational(0));
      e[i] = 1;
      sys.equalities.push_back({e, verts[0][i]});
    }
    return sys;
  }

  if (k == 1) {
    const RationalVector d = to_primitive_integer(vec_sub(verts[1], verts[0]));
    for (const auto& w : complement_of_direction(d))
      sys.equalities.push_back({w, dot(w, verts[0])});
    const Rational t0 = dot(d, verts[0]);
    const Rational t1 = dot(d, verts[1]);
    sys.inequalities.push_back({d, std::max(t0, t1)});
    sys.inequalities.push_back({negated(d), -std::min(t0, t1)});
    return sys;
  }

  if (n == 2 && k == 2) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const auto& a = verts[i];
      const auto& b = verts[(i + 1) % verts.size()];
      const RationalVector e = vec_sub(b, a);
      // ccw ring => (e_y, -e_x) points outward
      const RationalVector u = to_primitive_integer({e[1], -e[0]});
      sys.inequalities.push_back({u, dot(u, a)});
    }
    return sys;
  }

  if (n == 3 && k == 2) {
    // Ring is ccw with respect to the corner normal by construction.
    RationalVector normal = to_primitive_integer(
        cross3(vec_sub(verts[1], verts[0]), vec_sub(verts[2], verts[0])));
    sys.equalities.push_back({normal, dot(normal, verts[0])});
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const auto& a = verts[i];
      const auto& b = verts[(i + 1) % verts.size()];
      const RationalVector u = to_primitive_integer(cross3(vec_sub(b, a), normal));
      sys.inequalities.push_back({u, dot(u, a)});
    }
    return sys;
  }

  // full-dimensional 3D
  std::set<PlaneKey> planes;
  for (const auto& f : p.facets()) {
    const auto& pts = p.hull_points();
    RationalVector nvec = to_primitive_integer(
        cross3(vec_sub(pts[f[1]], pts[f[0]]), vec_sub(pts[f[2]], pts[f[0]])));
    planes.insert(PlaneKey{nvec, dot(nvec, pts[f[0]])});
  }
  for (const auto& pk : planes) sys.inequalities.push_back({pk.normal, pk.offset});
  return sys;
}

// --- Ellipsoid ----------------------------------------------------------

Ellipsoid::Ellipsoid(Eigen::MatrixXd shape) : shape_(std::move(shape)) {
  if (shape_.rows() != shape_.cols() || shape_.rows() < 1)
    throw NonPSDInput("ellipsoid shape must be a square matrix");
  const double scale = std::max(1.0, shape_.cwiseAbs().maxCoeff());
  const double asym = (shape_ - shape_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale)
    throw NonPSDInput("ellipsoid shape not symmetric (asymmetry " + std::to_string(asym) + ")");
  if (asym > 0) shape_ = ((shape_ + shape_.transpose()) / 2).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(shape_);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -1e-12 * scale)
    throw NonPSDInput("ellipsoid shape has negative eigenvalue " + std::to_string(min_eig));
  if (min_eig < 0) {
    const Eigen::VectorXd clamped = es.eigenvalues().cwiseMax(0.0);
    shape_ = es.eigenvectors() * clamped.asDiagonal() * es.eigenvectors().transpose();
    shape_ = ((shape_ + shape_.transpose()) / 2).eval();
  }
}

double Ellipsoid::support(const Eigen::VectorXd& xi) const {
  if (xi.size() != shape_.rows())
    throw DimensionMismatch("ellipsoid support: direction dimension mismatch");
  return std::sqrt(std::max(0.0, xi.dot(shape_ * xi)));
}

Ellipsoid Ellipsoid::scaled(double t) const { return Ellipsoid(t * t * shape_); }

bool Ellipsoid::is_ball(double* radius) const {
  const double d0 = shape_(0, 0);
  for (int i = 0; i < shape_.rows(); ++i)
    for (int j = 0; j < shape_.cols(); ++j) {
      if (i == j && shape_(i, j) != d0) return false;
      if (i != j && shape_(i, j) != 0.0) return false;
    }
  if (radius) *radius = std::sqrt(d0);
  return true;
}

bool Ellipsoid::same_shape(const Ellipsoid& other) const {
  return shape_.rows() == other.shape_.rows() && shape_ == other.shape_;
}

double unit_ball_volume(int n) {
  if (n < 0) throw UnsupportedDimension("unit_ball_volume: negative dimension");
  return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

double ellipsoid_volume(const Ellipsoid& e) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e.shape());
  double det = 1.0;
  for (int i = 0; i < e.dim(); ++i) det *= std::max(0.0, es.eigenvalues()[i]);
  return unit_ball_volume(e.dim()) * std::sqrt(det);
}

double support_function(const LatticePolytope& p, const Eigen::VectorXd& xi) {
  if (xi.size() != p.dim())
    throw DimensionMismatch("support_function: direction dimension mismatch");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : p.vertices()) {
    double s = 0.0;
    for (int i = 0; i < p.dim(); ++i) s += to_double(v[i]) * xi[i];
    best = std::max(best, s);
  }
  return best;
}

double support_function(const Ellipsoid& e, const Eigen::VectorXd& xi) {
  return e.support(xi);
}

double support_function(const ConvexBody& b, const Eigen::VectorXd& xi) {
  return std::visit([&](const auto& body) { return support_function(body, xi); }, b);
}

std::vector<Eigen::VectorXd> direction_grid(int dim, int count) {
  std::vector<Eigen::VectorXd> dirs;
  if (dim == 1) {
    dirs.push_back(Eigen::VectorXd::Constant(1, 1.0));
    dirs.push_back(Eigen::VectorXd::Constant(1, -1.0));
  } else if (dim == 2) {
    dirs.reserve(count);
    for (int k = 0; k < count; ++k) {
      const double t = 2.0 * std::numbers::pi * k / count;
      Eigen::VectorXd u(2);
      u << std::cos(t), std::sin(t);
      dirs.push_back(std::move(u));
    }
  } else if (dim == 3) {
    dirs.reserve(count);
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    for (int k = 0; k < count; ++k) {
      const double z = 1.0 - 2.0 * (k + 0.5) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = 2.0 * std::numbers::pi * k / golden;
      Eigen::VectorXd u(3);
      u << r * std::cos(phi), r * std::sin(phi), z;
      dirs.push_back(std::move(u));
    }
  } else {
    throw UnsupportedDimension("direction_grid: dimension > 3");
  }
  return dirs;
}

double hausdorff_distance(const ConvexBody& a, const ConvexBody& b, int directions) {
  const int da = std::visit([](const auto& body) { return body.dim(); }, a);
  const int db = std::visit([](const auto& body) { return body.dim(); }, b);
  if (da != db) throw DimensionMismatch("hausdorff_distance: dimension mismatch");
  if (directions < 64) throw Error("hausdorff_distance: need at least 64 directions");
  double worst = 0.0;
  for (const auto& u : direction_grid(da, directions))
    worst = std::max(worst, std::abs(support_function(a, u) - support_function(b, u)));
  return worst;
}

bool ellipsoid_in_polytope(const Ellipsoid& e, const LatticePolytope& p) {
  if (e.dim() != p.dim())
    throw DimensionMismatch("ellipsoid_in_polytope: dimension mismatch");
  if (p.intrinsic_dim() < p.dim())
    throw DegeneratePolytope("ellipsoid_in_polytope: polytope is lower-dimensional");
  for (const auto& hs : facet_system(p).inequalities) {
    Eigen::VectorXd u(p.dim());
    for (int i = 0; i < p.dim(); ++i) u[i] = to_double(hs.normal[i]);
    const double h = to_double(hs.offset);
    if (e.support(u) > h + 1e-9 * std::max(1.0, std::abs(h))) return false;
  }
  return true;
}

}  // namespace realroots
