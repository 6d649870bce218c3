#pragma once

#include <string>

#include "realroots/lattice.hpp"
#include "realroots/sampler.hpp"

namespace realroots {

// Wire formats (all JSON):
//   SupportSet      {"dim": n, "points": [[...], ...]}
//   BodySpec        {"type": "ball", "radius": "p/q", "dim": n}
//                   {"type": "polytope", "vertices": [[...], ...]}
//                   (rational entries as integers or "p/q" strings)
//   TrigPolynomial  {"support": {...}, "coeffs": {"[1,0]": c, ...}}
//                   (a lex-positive key holds the cosine coefficient of
//                    that frequency, its negation the sine coefficient)

SupportSet parse_support_json(const std::string& text);
BodySpec parse_body_json(const std::string& text);
TrigPolynomial parse_trig_polynomial_json(const std::string& text);

SupportSet load_support_file(const std::string& path);
BodySpec load_body_file(const std::string& path);

std::string support_to_json(const SupportSet& s);
std::string body_to_json(const BodySpec& b);
std::string trig_polynomial_to_json(const TrigPolynomial& f);

}  // namespace realroots
