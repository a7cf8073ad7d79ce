#include "roelcke/typespace.hpp"

#include <stdexcept>
#include <string>

namespace roelcke {

WeightVector WeightVector::uniform(std::size_t n) {
  if (n == 0) throw InputError("weight vector must be nonempty");
  return WeightVector(std::vector<Rational>(n, rational(1, static_cast<long>(n))));
}

WeightVector WeightVector::from(std::vector<Rational> weights) {
  if (weights.empty()) throw InputError("weight vector must be nonempty");
  Rational total = 0;
  for (const auto& w : weights) {
    if (w <= 0) throw InputError("weights must be strictly positive");
    total += w;
  }
  if (total != 1) throw InputError("weights must sum to 1, got " + to_string(total));
  return WeightVector(std::move(weights));
}

bool WeightVector::is_uniform() const {
  for (const auto& w : weights_) {
    if (w != weights_.front()) return false;
  }
  return true;
}

MonoTuple::MonoTuple(std::vector<PLMono> components) : components_(std::move(components)) {
  if (components_.empty()) throw InputError("tuple must have at least one component");
}

CanonicalTuple CanonicalTuple::from(MonoTuple tuple, WeightVector weights) {
  if (!mean(tuple, weights).is_identity()) throw InputError("tuple is not canonical: weighted mean is not id");
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i].graph().max_slope() * weights[i] > 1) {
      throw InvariantViolation("canonical component " + std::to_string(i) + " exceeds slope bound");
    }
  }
  return CanonicalTuple(std::move(tuple), std::move(weights));
}

CanonicalTuple CanonicalTuple::from(MonoTuple tuple) {
  auto w = WeightVector::uniform(tuple.size());
  return from(std::move(tuple), std::move(w));
}

RoelckeCoord::RoelckeCoord(PiecewiseLinear f) : f_(std::move(f)) {
  const auto v = f_.vertices();
  if (v.front().y != 0 || v.back().y != 0) throw InputError("Roelcke coordinate must vanish at 0 and 1");
  if (f_.max_slope() > 1 || f_.min_slope() < -1) throw InputError("Roelcke coordinate must be 1-Lipschitz");
}

PLMono mean(const MonoTuple& t, const WeightVector& w) {
  if (t.size() != w.size()) {
    throw InputError("tuple has " + std::to_string(t.size()) + " components but " + std::to_string(w.size()) +
                     " weights");
  }
  PiecewiseLinear sum = w[0] * t[0].graph();
  for (std::size_t i = 1; i < t.size(); ++i) sum = sum + w[i] * t[i].graph();
  return PLMono(std::move(sum));
}

Canonicalized canonicalize(const MonoTuple& t, const WeightVector& w) {
  PLMono m = mean(t, w);
  const LcMono inv = pseudo_inverse(m);
  std::vector<PLMono> parts;
  parts.reserve(t.size());
  for (const auto& c : t.components()) parts.push_back(compose(c, inv));
  auto canonical = CanonicalTuple::from(MonoTuple(std::move(parts)), w);
  return {std::move(canonical), std::move(m)};
}

Canonicalized canonicalize(const MonoTuple& t) { return canonicalize(t, WeightVector::uniform(t.size())); }

Rational lipschitz_constant(const CanonicalTuple& c, std::size_t i) {
  if (i >= c.size()) throw std::out_of_range("component index " + std::to_string(i) + " out of range");
  return c[i].graph().max_slope();
}

RoelckeCoord roelcke_coord(const CanonicalTuple& c) {
  if (c.size() != 2 || !c.weights().is_uniform()) throw InputError("Roelcke coordinates need a point of S_2");
  return RoelckeCoord(c[0].graph() - PiecewiseLinear::identity());
}

CanonicalTuple from_roelcke(const RoelckeCoord& f) {
  const auto& id = PiecewiseLinear::identity();
  return CanonicalTuple::from(
      MonoTuple({PLMono(id + f.function()), PLMono(id - f.function())}));
}

CanonicalTuple embed_group(const PLHomeo& g) {
  return canonicalize(MonoTuple({PLMono::identity(), g.mono()})).canonical;
}

MonoTuple reparameterize(const MonoTuple& t, const PLMono& g) {
  std::vector<PLMono> parts;
  parts.reserve(t.size());
  for (const auto& c : t.components()) parts.push_back(compose(c, g));
  return MonoTuple(std::move(parts));
}

}  // namespace roelcke
