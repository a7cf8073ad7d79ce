#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "roelcke/plcore.hpp"

namespace roelcke {

// Strictly positive rational weights summing to exactly 1.
class WeightVector {
 public:
  static WeightVector uniform(std::size_t n);
  static WeightVector from(std::vector<Rational> weights);

  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  std::span<const Rational> values() const { return weights_; }
  bool is_uniform() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  explicit WeightVector(std::vector<Rational> w) : weights_(std::move(w)) {}
  std::vector<Rational> weights_;
};

// A nonempty finite tuple in M^n.
class MonoTuple {
 public:
  explicit MonoTuple(std::vector<PLMono> components);

  std::size_t size() const { return components_.size(); }
  const PLMono& operator[](std::size_t i) const { return components_[i]; }
  std::span<const PLMono> components() const { return components_; }

  friend bool operator==(const MonoTuple&, const MonoTuple&) = default;

 private:
  std::vector<PLMono> components_;
};

// A tuple whose weighted mean is the identity (a point of S_n for uniform
// weights). Every component then has slope at most 1/w_i.
class CanonicalTuple {
 public:
  // Throws InputError unless the weighted mean is exactly id, and
  // InvariantViolation if a component breaks the slope bound.
  static CanonicalTuple from(MonoTuple tuple, WeightVector weights);
  static CanonicalTuple from(MonoTuple tuple);

  std::size_t size() const { return tuple_.size(); }
  const PLMono& operator[](std::size_t i) const { return tuple_[i]; }
  const MonoTuple& tuple() const { return tuple_; }
  const WeightVector& weights() const { return weights_; }

  friend bool operator==(const CanonicalTuple&, const CanonicalTuple&) = default;

 private:
  CanonicalTuple(MonoTuple t, WeightVector w) : tuple_(std::move(t)), weights_(std::move(w)) {}

  MonoTuple tuple_;
  WeightVector weights_;
};

// Continuous PL function [0,1] -> [-1,1], 1-Lipschitz, vanishing at both
// endpoints. Coordinates of the Roelcke compactification via S_2.
class RoelckeCoord {
 public:
  explicit RoelckeCoord(PiecewiseLinear f);

  const PiecewiseLinear& function() const { return f_; }

  friend bool operator==(const RoelckeCoord&, const RoelckeCoord&) = default;

 private:
  PiecewiseLinear f_;
};

// Weighted mean Σ w_i t_i.
PLMono mean(const MonoTuple& t, const WeightVector& w);

struct Canonicalized {
  CanonicalTuple canonical;
  PLMono mean;
};

// canonical_i = t_i ∘ mean*, so that canonical_i ∘ mean = t_i. The canonical
// tuple depends only on the orbit closure of t.
Canonicalized canonicalize(const MonoTuple& t, const WeightVector& w);
Canonicalized canonicalize(const MonoTuple& t);

// Largest segment slope of component i. Throws std::out_of_range.
Rational lipschitz_constant(const CanonicalTuple& c, std::size_t i);

// For (ξ, ζ) in S_2 (uniform weights): ξ - id.
RoelckeCoord roelcke_coord(const CanonicalTuple& c);
// Inverse of roelcke_coord: f ↦ (id + f, id - f).
CanonicalTuple from_roelcke(const RoelckeCoord& f);

// g ↦ canonical form of (id, g) in S_2.
CanonicalTuple embed_group(const PLHomeo& g);

// Componentwise t_i ∘ g.
MonoTuple reparameterize(const MonoTuple& t, const PLMono& g);

}  // namespace roelcke
