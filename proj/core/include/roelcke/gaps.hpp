#pragma once

#include <functional>
#include <vector>

#include "roelcke/typespace.hpp"

namespace roelcke {

// Open interval (lo, hi) with 0 <= lo < hi <= 1.
struct OpenInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& s) const { return lo < s && s < hi; }

  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

// Closed interval [lo, hi], possibly a single point.
struct ClosedInterval {
  Rational lo;
  Rational hi;

  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

// Finite union of disjoint open subintervals of (0,1), sorted. Neighbours may
// share an endpoint; isolated_points() reports those.
class GapSet {
 public:
  GapSet() = default;

  std::span<const OpenInterval> gaps() const { return gaps_; }
  bool empty() const { return gaps_.empty(); }
  bool covers(const Rational& s) const;

  // Connected components of [0,1] minus the gaps. Touching gaps leave a
  // degenerate component.
  std::vector<ClosedInterval> complement() const;
  // Total length of the complement.
  Rational complement_length() const;

  friend bool operator==(const GapSet&, const GapSet&) = default;
  friend GapSet merge_gaps(std::vector<OpenInterval> intervals);

 private:
  explicit GapSet(std::vector<OpenInterval> g) : gaps_(std::move(g)) {}
  std::vector<OpenInterval> gaps_;
};

// Smallest GapSet with the same union: overlapping and nested intervals
// coalesce, intervals meeting at a single point stay apart.
// Throws InputError for empty, inverted or out-of-range intervals.
GapSet merge_gaps(std::vector<OpenInterval> intervals);

// Shared endpoints of adjacent gaps. Nonempty means the set cannot be the
// gap set of a pseudo-distance.
std::vector<Rational> isolated_points(const GapSet& g);

struct ExtremePair {
  PLMono xi;
  PLMono zeta;
};

// ξ_I = s off [α,β], α on [α,(α+β)/2], 2s-β on [(α+β)/2,β]; ζ_I symmetric.
ExtremePair extreme_pair(const OpenInterval& gap);

// Identity off the gaps, the extreme pair of I on each gap I.
// Throws InputError if g has isolated points.
ExtremePair extreme_pair_all(const GapSet& g);

// Does f(s) != h(s) imply (f(s) + h(s))/2 lies in a gap? Exact.
bool equiv_test(const PLMono& f, const PLMono& h, const GapSet& g);

// χ(t) = |[0,t] ∩ K| / |K| with K the complement of the gaps: constant on
// each gap, strictly increasing on K.
PLMono collapse_map(const GapSet& g);

// sup |χ∘f - χ∘h|.
Rational rho_chi(const PLMono& f, const PLMono& h, const PLMono& chi);

// Pseudo-distance on tuples of equal length. Evaluators must be safe to call
// concurrently.
using PseudoDist = std::function<Rational(const MonoTuple&, const MonoTuple&)>;

// Max over components of rho_chi.
PseudoDist make_rho_chi(PLMono chi);

// (f, f') ↦ rho(base∘f, base∘f') for single-element tuples f, f'.
PseudoDist pullback_pseudometric(MonoTuple base, PseudoDist rho);

}  // namespace roelcke
