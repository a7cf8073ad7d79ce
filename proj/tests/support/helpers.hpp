#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "roelcke/gaps.hpp"
#include "roelcke/plcore.hpp"
#include "roelcke/typespace.hpp"

namespace roelcke::testing {

inline Rational Q(const char* s) { return parse_rational(s); }

inline std::vector<Vertex> vertices(std::initializer_list<std::pair<const char*, const char*>> pts) {
  std::vector<Vertex> v;
  for (const auto& [x, y] : pts) v.push_back({Q(x), Q(y)});
  return v;
}

inline PLMono mono(std::initializer_list<std::pair<const char*, const char*>> pts) {
  return PLMono::from_vertices(vertices(pts));
}

inline PLHomeo homeo(std::initializer_list<std::pair<const char*, const char*>> pts) {
  return PLHomeo::from_vertices(vertices(pts));
}

inline OpenInterval interval(const char* lo, const char* hi) { return {Q(lo), Q(hi)}; }

inline MonoTuple pair_of(const PLMono& a, const PLMono& b) { return MonoTuple({a, b}); }

inline MonoTuple ids(std::size_t n) { return MonoTuple(std::vector<PLMono>(n, PLMono::identity())); }

}  // namespace roelcke::testing
