#pragma once

#include <string>

#include "roelcke/json_io.hpp"

namespace roelcke::render {

// Fixed-point decimal with at most `digits` fractional digits, rounded half
// away from zero, trailing zeros dropped. Exact integer arithmetic.
std::string decimal(const Rational& r, int digits = 4);

// Renders a PL function, tuple, Roelcke coordinate or gap set document.
// The SVG canvas is 440x440 with the unit square mapped to [20,420]^2;
// Roelcke coordinates use [-1,1] on the vertical axis. Throws InputError for
// documents of unknown kind.
std::string svg(const json::json& doc);

// Same objects as CSV: "series,x,y" rows of exact vertices, or "gap,lo,hi"
// rows for a gap set.
std::string csv(const json::json& doc);

}  // namespace roelcke::render
