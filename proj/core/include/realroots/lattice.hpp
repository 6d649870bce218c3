#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "realroots/errors.hpp"
#include "realroots/rational.hpp"

namespace realroots {

using LatticeVector = std::vector<std::int64_t>;

std::string to_string(const LatticeVector& v);

/// Finite centrally symmetric set of integer lattice vectors.
/// Points are stored deduplicated in lexicographic order, so two sets with
/// the same elements compare equal and serialize identically.
class SupportSet {
 public:
  static SupportSet validate(std::vector<LatticeVector> points);

  int dim() const { return dim_; }
  const std::vector<LatticeVector>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const LatticeVector& v) const;

  bool operator==(const SupportSet& other) const = default;

 private:
  SupportSet(int dim, std::vector<LatticeVector> points)
      : dim_(dim), points_(std::move(points)) {}

  int dim_ = 0;
  std::vector<LatticeVector> points_;
};

struct Ball {
  Rational radius;  // > 0
  int dim = 0;
};

struct PolytopeSpec {
  std::vector<RationalVector> vertices;  // centrally symmetric vertex set
};

/// Centrally symmetric convex body given exactly: a rational-radius ball or
/// a rational-vertex polytope. Rational inputs keep the lattice-subspace
/// condition on lower-dimensional bodies decidable.
class BodySpec {
 public:
  static BodySpec ball(Rational radius, int dim);
  static BodySpec polytope(std::vector<RationalVector> vertices);

  bool is_ball() const { return std::holds_alternative<Ball>(body_); }
  const Ball& as_ball() const { return std::get<Ball>(body_); }
  const PolytopeSpec& as_polytope() const { return std::get<PolytopeSpec>(body_); }
  int dim() const;

 private:
  explicit BodySpec(std::variant<Ball, PolytopeSpec> body) : body_(std::move(body)) {}
  std::variant<Ball, PolytopeSpec> body_;
};

struct ConditionStarReport {
  bool ok = false;
  int span_dim = 0;
  std::string note;
};

/// Deduplicates and checks central symmetry; names the offending vector on
/// failure.
SupportSet validate_support(const std::vector<LatticeVector>& points);

/// All lattice points of m·body. Cardinality grows like vol(body)·m^k where
/// k is the body's intrinsic dimension.
SupportSet dilate_and_intersect(const BodySpec& body, int m);

/// Diagnostic for the lattice-subspace condition on lower-dimensional
/// bodies. Rational-vertex polytopes and full-dimensional balls satisfy it
/// by construction; the report records the span dimension actually found.
ConditionStarReport check_condition_star(const BodySpec& body);

}  // namespace realroots
