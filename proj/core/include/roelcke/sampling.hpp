#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "roelcke/gaps.hpp"
#include "roelcke/typespace.hpp"

namespace roelcke {

// Deterministic random objects for tests, benchmarks and `roelcke sample`.
//
// All randomness comes from std::mt19937_64, whose output sequence is fixed
// by the standard, and is reduced to ranges by rejection, so a seed produces
// the same objects on every platform.
//
// Distributions:
//  - mono(): 1..6 interior knots with abscissae on the grid 1/D, D drawn from
//    {8, 12, 16, 30}; ordinates drawn on the same grid, sorted; each knot
//    repeats the previous ordinate with probability plateau/8 (plateau 0..7).
//  - homeo(): distinct sorted abscissae and ordinates on that grid.
//  - canonical(n): uniform grid of K cells, K in 1..max_cells. The n*K unit
//    increments are matched to the n components by a uniformly random
//    bijection between "cell slots" (n per cell) and "component slots" (K per
//    component). Component i rises by c_ij / K over cell j, where c_ij counts
//    the slots matched; the mean rises by exactly 1/K per cell, so every
//    sample lies in S_n. Nothing is rejected.
//  - tuple(n): canonical(n) ∘ mono(), i.e. an arbitrary tuple with its
//    orbit-closure type and mean both random.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  PLMono mono(unsigned plateau = 2);
  PLHomeo homeo();
  // A homeomorphism that is not the identity.
  PLHomeo nontrivial_homeo();
  CanonicalTuple canonical(std::size_t n, std::size_t max_cells = 8);
  MonoTuple tuple(std::size_t n);

  // Random open interval with endpoints on the grid 1/16.
  OpenInterval interval();
  std::vector<OpenInterval> intervals(std::size_t max_count);
  // Gap set without isolated points, possibly empty.
  GapSet clean_gapset(std::size_t max_gaps = 3);

 private:
  std::vector<long> distinct_sorted(long lo, long hi, std::size_t count);

  std::mt19937_64 engine_;
};

}  // namespace roelcke
