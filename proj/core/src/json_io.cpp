#include "roelcke/json_io.hpp"

namespace roelcke::json {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  return a;
}

std::pair<Rational, Rational> pair_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("expected a pair of rationals");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

}  // namespace

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw InputError("rationals must be \"p/q\" strings, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

json to_json(const PiecewiseLinear& f) {
  json pts = json::array();
  for (const auto& v : f.vertices()) pts.push_back({to_string(v.x), to_string(v.y)});
  return {{"breakpoints", std::move(pts)}};
}

json to_json(const PLMono& f) { return to_json(f.graph()); }

json to_json(const PLHomeo& g) { return to_json(g.mono()); }

json to_json(const RoelckeCoord& f) {
  json j = to_json(f.function());
  j["kind"] = "roelcke";
  return j;
}

json to_json(const MonoTuple& t) {
  json comps = json::array();
  for (const auto& c : t.components()) comps.push_back(to_json(c));
  return {{"components", std::move(comps)}};
}

json to_json(const MonoTuple& t, const WeightVector& w) {
  json j = to_json(t);
  json ws = json::array();
  for (const auto& x : w.values()) ws.push_back(to_string(x));
  j["weights"] = std::move(ws);
  return j;
}

json to_json(const CanonicalTuple& c) {
  json j = to_json(c.tuple(), c.weights());
  j["canonical"] = true;
  return j;
}

json to_json(const GapSet& g) {
  json gaps = json::array();
  for (const auto& i : g.gaps()) gaps.push_back({to_string(i.lo), to_string(i.hi)});
  return {{"gaps", std::move(gaps)}};
}

json to_json(const QuotInterval& q) {
  return {{"lo", to_string(q.lo)}, {"hi", to_string(q.hi)}, {"decisions", q.decisions}};
}

PiecewiseLinear pl_from_json(const json& j) {
  std::vector<Vertex> v;
  for (const auto& p : array_field(j, "breakpoints")) {
    auto [x, y] = pair_from_json(p);
    v.push_back({std::move(x), std::move(y)});
  }
  return PiecewiseLinear::from_vertices(std::move(v));
}

PLMono mono_from_json(const json& j) { return PLMono(pl_from_json(j)); }

PLHomeo homeo_from_json(const json& j) { return PLHomeo(mono_from_json(j)); }

RoelckeCoord roelcke_from_json(const json& j) { return RoelckeCoord(pl_from_json(j)); }

std::pair<MonoTuple, WeightVector> tuple_from_json(const json& j) {
  std::vector<PLMono> parts;
  for (const auto& c : array_field(j, "components")) parts.push_back(mono_from_json(c));
  MonoTuple t(std::move(parts));
  if (!j.contains("weights")) {
    auto w = WeightVector::uniform(t.size());
    return {std::move(t), std::move(w)};
  }
  std::vector<Rational> ws;
  for (const auto& w : array_field(j, "weights")) ws.push_back(rational_from_json(w));
  if (ws.size() != t.size()) throw InputError("weights and components differ in length");
  return {std::move(t), WeightVector::from(std::move(ws))};
}

GapSet gapset_from_json(const json& j) {
  std::vector<OpenInterval> gaps;
  for (const auto& p : array_field(j, "gaps")) {
    auto [lo, hi] = pair_from_json(p);
    gaps.push_back({std::move(lo), std::move(hi)});
  }
  return merge_gaps(std::move(gaps));
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace roelcke::json
