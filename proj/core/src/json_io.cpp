#include "realroots/json_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace realroots {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

LatticeVector lattice_vector_from(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty())
    throw ParseError(where + ": expected a nonempty array of integers");
  LatticeVector v;
  v.reserve(arr.size());
  for (const auto& x : arr) {
    if (!x.is_number_integer())
      throw ParseError(where + ": lattice coordinates must be integers");
    v.push_back(x.get<std::int64_t>());
  }
  return v;
}

Rational rational_from(const json& x, const std::string& where) {
  if (x.is_number_integer()) return Rational(x.get<std::int64_t>());
  if (x.is_string()) return parse_rational(x.get<std::string>());
  throw ParseError(where + ": rationals must be integers or \"p/q\" strings "
                   "(floating point would lose exactness)");
}

}  // namespace

SupportSet parse_support_json(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
    throw ParseError("support set needs {\"dim\": n, \"points\": [[...], ...]}");
  if (!j["dim"].is_number_integer())
    throw ParseError("support set: \"dim\" must be an integer");
  const int dim = j["dim"].get<int>();
  if (!j["points"].is_array() || j["points"].empty())
    throw ParseError("support set: \"points\" must be a nonempty array");
  std::vector<LatticeVector> points;
  points.reserve(j["points"].size());
  for (const auto& p : j["points"]) {
    LatticeVector v = lattice_vector_from(p, "support point");
    if (static_cast<int>(v.size()) != dim)
      throw ParseError("support point " + to_string(v) + " does not match dim " +
                       std::to_string(dim));
    points.push_back(std::move(v));
  }
  return SupportSet::validate(std::move(points));
}

BodySpec parse_body_json(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("type"))
    throw ParseError("body needs a \"type\" of \"ball\" or \"polytope\"");
  const std::string type = j["type"].get<std::string>();
  if (type == "ball") {
    if (!j.contains("radius") || !j.contains("dim"))
      throw ParseError("ball body needs \"radius\" and \"dim\"");
    return BodySpec::ball(rational_from(j["radius"], "ball radius"), j["dim"].get<int>());
  }
  if (type == "polytope") {
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
      throw ParseError("polytope body needs a nonempty \"vertices\" array");
    std::vector<RationalVector> vertices;
    vertices.reserve(j["vertices"].size());
    for (const auto& row : j["vertices"]) {
      if (!row.is_array() || row.empty())
        throw ParseError("polytope vertex must be an array of rationals");
      RationalVector v;
      v.reserve(row.size());
      for (const auto& x : row) v.push_back(rational_from(x, "polytope vertex"));
      vertices.push_back(std::move(v));
    }
    return BodySpec::polytope(std::move(vertices));
  }
  throw ParseError("unknown body type '" + type + "'");
}

TrigPolynomial parse_trig_polynomial_json(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("support") || !j.contains("coeffs"))
    throw ParseError("trig polynomial needs {\"support\": ..., \"coeffs\": {...}}");
  SupportSet support = parse_support_json(j["support"].dump());
  if (!j["coeffs"].is_object())
    throw ParseError("trig polynomial: \"coeffs\" must be an object keyed by lattice vectors");

  std::vector<double> coeffs(support.size(), 0.0);
  std::size_t seen = 0;
  for (const auto& [key, value] : j["coeffs"].items()) {
    const LatticeVector v = lattice_vector_from(parse_or_throw(key), "coefficient key");
    const auto& pts = support.points();
    const auto it = std::lower_bound(pts.begin(), pts.end(), v);
    if (it == pts.end() || *it != v)
      throw ParseError("coefficient key " + to_string(v) + " is not in the support");
    if (!value.is_number())
      throw ParseError("coefficient for " + to_string(v) + " must be a number");
    coeffs[static_cast<std::size_t>(it - pts.begin())] = value.get<double>();
    ++seen;
  }
  if (seen != support.size())
    throw ParseError("need one coefficient per support vector (got " +
                     std::to_string(seen) + " of " + std::to_string(support.size()) + ")");
  return TrigPolynomial(std::move(support), std::move(coeffs));
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json lattice_vector_json(const LatticeVector& v) {
  json arr = json::array();
  for (const auto c : v) arr.push_back(c);
  return arr;
}

}  // namespace

SupportSet load_support_file(const std::string& path) {
  return parse_support_json(slurp(path));
}

BodySpec load_body_file(const std::string& path) { return parse_body_json(slurp(path)); }

std::string support_to_json(const SupportSet& s) {
  json j;
  j["dim"] = s.dim();
  j["points"] = json::array();
  for (const auto& p : s.points()) j["points"].push_back(lattice_vector_json(p));
  return j.dump();
}

std::string body_to_json(const BodySpec& b) {
  json j;
  if (b.is_ball()) {
    j["type"] = "ball";
    j["radius"] = rational_to_string(b.as_ball().radius);
    j["dim"] = b.as_ball().dim;
  } else {
    j["type"] = "polytope";
    j["vertices"] = json::array();
    for (const auto& v : b.as_polytope().vertices) {
      json row = json::array();
      for (const auto& x : v) {
        if (denominator(x) == 1) {
          row.push_back(numerator(x).convert_to<std::int64_t>());
        } else {
          row.push_back(rational_to_string(x));
        }
      }
      j["vertices"].push_back(row);
    }
  }
  return j.dump();
}

std::string trig_polynomial_to_json(const TrigPolynomial& f) {
  json j;
  j["support"] = json::parse(support_to_json(f.support()));
  json coeffs = json::object();
  const auto& pts = f.support().points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    coeffs[lattice_vector_json(pts[i]).dump()] = f.coeffs()[i];
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

}  // namespace realroots
