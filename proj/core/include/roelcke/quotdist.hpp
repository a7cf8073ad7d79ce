#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "roelcke/typespace.hpp"

namespace roelcke {

// Bracket [lo, hi] around the quotient distance between two orbit closures.
struct QuotInterval {
  Rational lo;
  Rational hi;
  std::size_t decisions = 0;
};

// Closed sub-interval of a cell edge, in the edge's local parameter [0,1].
struct EdgeInterval {
  Rational lo;
  Rational hi;
};

// Free-space diagram of two tuples viewed as monotone curves in R^n with the
// max-norm. Cell (p, q) spans the p-th segment of `a` (parameter u) and the
// q-th segment of `b` (parameter v); both tuples are cut at the union of
// their components' breakpoints.
class FreeSpace {
 public:
  FreeSpace(const MonoTuple& a, const MonoTuple& b, Rational eps);

  std::size_t rows() const { return u_.size() - 1; }
  std::size_t cols() const { return v_.size() - 1; }

  // Feasible part of the edge u = u_p, v in [v_q, v_{q+1}] (p <= rows()).
  std::optional<EdgeInterval> vertical_edge(std::size_t p, std::size_t q) const;
  // Feasible part of the edge v = v_q, u in [u_p, u_{p+1}] (q <= cols()).
  std::optional<EdgeInterval> horizontal_edge(std::size_t p, std::size_t q) const;

  // True iff a path monotone in both parameters joins (0,0) to (1,1) inside
  // the free space.
  bool monotone_path_exists() const;

 private:
  std::optional<EdgeInterval> edge(const std::vector<Rational>& fixed, std::span<const Rational> start,
                                   std::span<const Rational> end) const;

  Rational eps_;
  std::size_t n_;
  std::vector<Rational> u_, v_;
  // Row-major knot values: a_[p * n + i] = a_i(u_p).
  std::vector<Rational> a_, b_;
};

// Max over components of the sup distance.
Rational tuple_sup_dist(const MonoTuple& a, const MonoTuple& b);

// Is the quotient distance between [a] and [b] at most eps? Exact.
bool quot_decision(const MonoTuple& a, const MonoTuple& b, const Rational& eps);

// Bisection on quot_decision until hi - lo <= tol, starting from the bracket
// [0, sup distance of the canonical forms].
QuotInterval quot_dist(const MonoTuple& a, const MonoTuple& b, const Rational& tol);

// Bottleneck cost of the best monotone lattice path on a (k+1) x (k+1) grid
// of parameter values, with horizontal, vertical and diagonal steps. Every
// step is charged the exact sup of the cost along it (axis steps by their
// endpoints, since components are monotone; diagonal steps also at interior
// breakpoints), so the result is an upper bound on the quotient distance and
// does not increase when the grid is refined.
Rational brute_oracle(const MonoTuple& a, const MonoTuple& b, std::size_t k);

struct VEpsResult {
  // Upper bound on d(Gp, 1); never a lower bound.
  Rational upper_bound;
  // bound < eps. A false value certifies nothing.
  bool member = false;
  // Reparameterization g attaining the bound.
  PLHomeo best;
  std::size_t candidates = 0;
};

// Searches reparameterizations g at resolutions 1, 2, 4, ... up to `net`
// for small quot_dist((ξ∘g^-1, ζ), (id, id)). At resolution N, g
// interpolates ζ*∘ξ at the knots j/N, blended with id by 1/N^2 so it is
// strictly increasing.
VEpsResult v_eps_upper(const CanonicalTuple& p, const Rational& eps, std::size_t net, const Rational& tol);

}  // namespace roelcke
