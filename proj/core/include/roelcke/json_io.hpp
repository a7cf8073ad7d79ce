#pragma once

#include <nlohmann/json.hpp>

#include "roelcke/gaps.hpp"
#include "roelcke/quotdist.hpp"
#include "roelcke/typespace.hpp"

// JSON documents exchanged by the CLI. Every rational is a "p/q" (or "p")
// string; no floating point is read or written.
//
//   PL function    {"breakpoints": [["0","0"], ["1/4","1/4"], ...]}
//   Roelcke coord  {"kind": "roelcke", "breakpoints": [...]}
//   tuple          {"components": [<PL>, ...], "weights": ["1/2","1/2"]}
//                  (weights optional, default uniform; canonical tuples
//                  add "canonical": true)
//   gap set        {"gaps": [["1/4","3/4"], ...]}
//   interval       {"lo": "p/q", "hi": "p/q", "decisions": <count>}
//
// Readers throw InputError on malformed documents.
namespace roelcke::json {

using nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const PiecewiseLinear& f);
json to_json(const PLMono& f);
json to_json(const PLHomeo& g);
json to_json(const RoelckeCoord& f);
json to_json(const MonoTuple& t);
json to_json(const MonoTuple& t, const WeightVector& w);
json to_json(const CanonicalTuple& c);
json to_json(const GapSet& g);
json to_json(const QuotInterval& q);

PiecewiseLinear pl_from_json(const json& j);
PLMono mono_from_json(const json& j);
PLHomeo homeo_from_json(const json& j);
RoelckeCoord roelcke_from_json(const json& j);
// Weights default to uniform when absent.
std::pair<MonoTuple, WeightVector> tuple_from_json(const json& j);
GapSet gapset_from_json(const json& j);

// Wraps json::parse, converting parse errors to InputError.
json parse(std::string_view text);

}  // namespace roelcke::json
