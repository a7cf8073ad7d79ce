#pragma once

#include <span>
#include <vector>

#include "roelcke/rational.hpp"

namespace roelcke {

struct Vertex {
  Rational x;
  Rational y;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// A continuous piecewise-linear function on [0,1] with rational vertices.
//
// The vertex list is kept normalized: x strictly increasing from 0 to 1 and
// no three consecutive vertices collinear. Two functions are equal iff their
// vertex lists are equal.
class PiecewiseLinear {
 public:
  // Validates the domain (first x = 0, last x = 1, x strictly increasing)
  // and drops collinear interior vertices.
  static PiecewiseLinear from_vertices(std::vector<Vertex> vertices);
  static PiecewiseLinear identity();
  static PiecewiseLinear constant(const Rational& value);

  // Exact value by linear interpolation. Throws InputError for t outside [0,1].
  Rational operator()(const Rational& t) const;

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  Rational min_slope() const;
  Rational max_slope() const;
  Rational min_value() const;
  Rational max_value() const;

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

 private:
  explicit PiecewiseLinear(std::vector<Vertex> v) : vertices_(std::move(v)) {}

  std::vector<Vertex> vertices_;
};

PiecewiseLinear operator+(const PiecewiseLinear& a, const PiecewiseLinear& b);
PiecewiseLinear operator-(const PiecewiseLinear& a, const PiecewiseLinear& b);
PiecewiseLinear operator*(const Rational& c, const PiecewiseLinear& a);

// Sorted union of the vertex abscissae of a and b.
std::vector<Rational> merged_breakpoints(const PiecewiseLinear& a, const PiecewiseLinear& b);

// f at each of the ascending points xs (all in [0,1]), in one forward walk.
std::vector<Rational> evaluate_sorted(const PiecewiseLinear& f, std::span<const Rational> xs);

// Element of M: continuous, weakly increasing, surjective [0,1] -> [0,1].
// Plateaus are allowed.
class PLMono {
 public:
  explicit PLMono(PiecewiseLinear graph);
  static PLMono from_vertices(std::vector<Vertex> vertices);
  static PLMono identity();

  Rational operator()(const Rational& t) const { return graph_(t); }
  const PiecewiseLinear& graph() const { return graph_; }
  std::span<const Vertex> vertices() const { return graph_.vertices(); }

  bool is_strictly_increasing() const;
  bool is_identity() const { return graph_.size() == 2; }

  friend bool operator==(const PLMono&, const PLMono&) = default;

 private:
  PiecewiseLinear graph_;
};

// Element of Homeo+[0,1]: a PLMono with every segment of positive slope.
class PLHomeo {
 public:
  explicit PLHomeo(PLMono f);
  static PLHomeo from_vertices(std::vector<Vertex> vertices);
  static PLHomeo identity();

  Rational operator()(const Rational& t) const { return mono_(t); }
  const PLMono& mono() const { return mono_; }
  std::span<const Vertex> vertices() const { return mono_.vertices(); }
  bool is_identity() const { return mono_.is_identity(); }

  PLHomeo inverse() const;

  friend bool operator==(const PLHomeo&, const PLHomeo&) = default;

 private:
  PLMono mono_;
};

// One linear piece of a left-continuous monotone function: on the half-open
// interval (from, to] it runs linearly from `lo` (the right limit at `from`)
// to `hi` (the value at `to`).
struct LcPiece {
  Rational from;
  Rational to;
  Rational lo;
  Rational hi;

  friend bool operator==(const LcPiece&, const LcPiece&) = default;
};

// Weakly increasing, left-continuous piecewise-linear map [0,1] -> [0,1]
// with finitely many jumps. Pseudo-inverses of PLMono live here.
class LcMono {
 public:
  // Pieces must tile (0,1] in order, be weakly increasing within and across
  // pieces, and stay in [0,1]. `at_zero` is the value at 0, at most the
  // first piece's right limit.
  static LcMono from_pieces(std::vector<LcPiece> pieces, Rational at_zero = 0);

  Rational operator()(const Rational& t) const;
  std::span<const LcPiece> pieces() const { return pieces_; }
  const Rational& at_zero() const { return at_zero_; }

  // Points where the right limit exceeds the value (includes 0 when the
  // function jumps immediately after 0).
  std::vector<Rational> jump_points() const;

  friend bool operator==(const LcMono&, const LcMono&) = default;

 private:
  LcMono(std::vector<LcPiece> p, Rational z) : pieces_(std::move(p)), at_zero_(std::move(z)) {}

  std::vector<LcPiece> pieces_;
  Rational at_zero_;
};

// outer ∘ inner. Breakpoints of the result are inner's breakpoints plus the
// inner-preimages of outer's breakpoints.
PiecewiseLinear compose(const PiecewiseLinear& outer, const PLMono& inner);
PLMono compose(const PLMono& f, const PLMono& g);
PLMono compose(const PLMono& f, const PLHomeo& g);
PLHomeo compose(const PLHomeo& f, const PLHomeo& g);

// f ∘ s for a jump function s. The result must be continuous, which holds
// when f is constant across every jump of s (for instance s = mean* and f a
// component of that mean). Throws InvariantViolation otherwise.
PLMono compose(const PLMono& f, const LcMono& s);

// The left-continuous pseudo-inverse f*: f ∘ f* = id, and on a plateau of f
// at value v, f*(v) is the plateau's left endpoint.
LcMono pseudo_inverse(const PLMono& f);

// sup |a - b|, attained at a merged breakpoint.
Rational sup_dist(const PiecewiseLinear& a, const PiecewiseLinear& b);
inline Rational sup_dist(const PLMono& a, const PLMono& b) { return sup_dist(a.graph(), b.graph()); }

// Continuous order predicate o(f, g) = sup (f - g). Zero iff g >= f.
Rational order_pred(const PLMono& f, const PLMono& g);

struct UniformWitness {
  PLMono witness;
  // g itself when g(s) > s somewhere, otherwise g^-1.
  PLHomeo shift;
  bool used_inverse = false;
  // Breakpoint maximizing shift(t) - t (smallest on ties).
  Rational t;
};

// Element of M equal to 0 on [0,t] and 1 on [shift(t),1], linear between.
// Guarantees sup_dist(witness ∘ shift^-1, witness) = 1.
// Throws InputError for the identity.
UniformWitness uniform_witness(const PLHomeo& g);

}  // namespace roelcke
