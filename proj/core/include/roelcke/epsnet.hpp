#pragma once

#include <cstddef>
#include <vector>

#include "roelcke/sampling.hpp"
#include "roelcke/typespace.hpp"

namespace roelcke {

// The grid net of S_n at resolution m: tuples whose components are linear
// between the knots j/m, take values in (1/m)Z there, and average to id.
// Each component rises by 0..n steps of 1/m per cell, so net points satisfy
// the S_n slope bound. For n = 2 these are exactly the Roelcke coordinates
// with knot values in (1/m)Z and increments in {-1/m, 0, 1/m}.

// Number of net points (central trinomial coefficient for n = 2).
mpz_class epsnet_size(std::size_t n, std::size_t m);

// All net points in lexicographic order of knot values. Throws InputError if
// there are more than `limit`.
std::vector<CanonicalTuple> epsnet_points(std::size_t n, std::size_t m, std::size_t limit);

// n = 2: rounds m*f(j/m) half-up at every knot. The result is a net point
// within 1/m of f in sup norm.
RoelckeCoord nearest_net_point(const RoelckeCoord& f, std::size_t m);
bool is_net_point(const RoelckeCoord& f, std::size_t m);

struct CoveringReport {
  std::size_t samples = 0;
  std::size_t covered = 0;
  Rational max_distance;
  Rational bound;  // 2/m
  bool passed() const { return covered == samples; }
};

// Draws `samples` points of S_2 and measures their distance to the net at
// resolution m. Half the points come from Sampler::canonical, half from
// canonicalizing Sampler::tuple.
CoveringReport check_covering_s2(std::size_t m, std::size_t samples, Sampler& rng);

}  // namespace roelcke
