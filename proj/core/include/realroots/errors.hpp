#pragma once

#include <stdexcept>
#include <string>

namespace realroots {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotCentrallySymmetric : Error {
  using Error::Error;
};

struct ConditionStarViolated : Error {
  using Error::Error;
};

struct UnsupportedDimension : Error {
  using Error::Error;
};

struct DegeneratePolytope : Error {
  using Error::Error;
};

struct NonPSDInput : Error {
  using Error::Error;
};

struct ZeroBKK : Error {
  using Error::Error;
};

// A sample hit a probability-zero configuration (tangential zero,
// vanishing leading coefficient). The estimator discards it and redraws.
struct DegenerateSample : Error {
  using Error::Error;
};

struct LeadingCoefficientZero : DegenerateSample {
  using DegenerateSample::DegenerateSample;
};

struct GridTooCoarse : Error {
  using Error::Error;
};

struct ExcessiveDegeneracy : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace realroots
