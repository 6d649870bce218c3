#include <doctest.h>

#include <random>

#include "realroots/json_io.hpp"

using namespace realroots;

TEST_CASE("support sets parse and serialize") {
  const auto s = parse_support_json(R"({"dim": 2, "points": [[1,0],[-1,0],[0,1],[0,-1]]})");
  CHECK(s.dim() == 2);
  CHECK(s.size() == 4);

  const auto round = parse_support_json(support_to_json(s));
  CHECK(round == s);
}

TEST_CASE("support parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_support_json("not json"), ParseError);
  CHECK_THROWS_AS(parse_support_json(R"({"points": [[1],[-1]]})"), ParseError);
  CHECK_THROWS_AS(parse_support_json(R"({"dim": 1, "points": []})"), ParseError);
  CHECK_THROWS_AS(parse_support_json(R"({"dim": 1, "points": [[0.5],[-0.5]]})"), ParseError);
  CHECK_THROWS_AS(parse_support_json(R"({"dim": 2, "points": [[1],[-1]]})"), ParseError);
  CHECK_THROWS_AS(parse_support_json(R"({"dim": 1, "points": [[1],[2],[-1]]})"),
                  NotCentrallySymmetric);
}

TEST_CASE("bodies parse: balls with exact rational radii") {
  const auto ball = parse_body_json(R"({"type": "ball", "radius": "3/2", "dim": 2})");
  CHECK(ball.is_ball());
  CHECK(ball.as_ball().radius == Rational(3, 2));

  const auto intr = parse_body_json(R"({"type": "ball", "radius": 2, "dim": 1})");
  CHECK(intr.as_ball().radius == 2);

  CHECK_THROWS_AS(parse_body_json(R"({"type": "ball", "radius": 1.5, "dim": 2})"), ParseError);
  CHECK_THROWS_AS(parse_body_json(R"({"type": "ball", "radius": "0", "dim": 2})"), Error);
  CHECK_THROWS_AS(parse_body_json(R"({"type": "cone", "radius": "1", "dim": 2})"), ParseError);
}

TEST_CASE("bodies parse: polytopes with mixed integer and rational entries") {
  const auto poly = parse_body_json(
      R"({"type": "polytope", "vertices": [[1, "1/2"], [-1, "-1/2"]]})");
  CHECK_FALSE(poly.is_ball());
  CHECK(poly.as_polytope().vertices.size() == 2);
  CHECK(poly.as_polytope().vertices[1][1] == Rational(1, 2));

  const auto round = parse_body_json(body_to_json(poly));
  CHECK(round.as_polytope().vertices == poly.as_polytope().vertices);

  CHECK_THROWS_AS(
      parse_body_json(R"({"type": "polytope", "vertices": [[1, 0], [0, 1]]})"),
      NotCentrallySymmetric);
}

TEST_CASE("trig polynomials: full round trip with the sign convention") {
  const std::string text = R"({
    "support": {"dim": 2, "points": [[0,0],[1,0],[-1,0],[0,1],[0,-1]]},
    "coeffs": {"[0,0]": 0.5, "[1,0]": 1.0, "[-1,0]": -2.0, "[0,1]": 0.25, "[0,-1]": 4.0}
  })";
  const auto f = parse_trig_polynomial_json(text);
  CHECK(f.coeff({1, 0}) == 1.0);
  CHECK(f.coeff({-1, 0}) == -2.0);

  // cosine coefficient sits at the lex-positive key
  const double origin[2] = {0.0, 0.0};
  CHECK(evaluate(f, origin) ==
        doctest::Approx(0.5 + std::numbers::sqrt2 * (1.0 + 0.25)));

  const auto round = parse_trig_polynomial_json(trig_polynomial_to_json(f));
  CHECK(round.coeffs() == f.coeffs());
  CHECK(round.support() == f.support());
}

TEST_CASE("trig polynomial parsing is strict about coverage") {
  CHECK_THROWS_AS(parse_trig_polynomial_json(
                      R"({"support": {"dim": 1, "points": [[1],[-1]]},
                          "coeffs": {"[1]": 1.0}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_trig_polynomial_json(
                      R"({"support": {"dim": 1, "points": [[1],[-1]]},
                          "coeffs": {"[1]": 1.0, "[2]": 0.5}})"),
                  ParseError);
}

TEST_CASE("file loading reports missing paths") {
  CHECK_THROWS_AS(load_support_file("/nonexistent/support.json"), ParseError);
  CHECK_THROWS_AS(load_body_file("/nonexistent/body.json"), ParseError);
}
