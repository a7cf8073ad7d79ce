#include "roelcke/plcore.hpp"

#include <algorithm>
#include <string>

namespace roelcke {

namespace {

bool collinear(const Vertex& a, const Vertex& b, const Vertex& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

std::vector<Vertex> normalize(std::vector<Vertex> v) {
  std::vector<Vertex> out;
  out.reserve(v.size());
  for (auto& p : v) {
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), p)) out.pop_back();
    out.push_back(std::move(p));
  }
  return out;
}

Rational interpolate(const Vertex& a, const Vertex& b, const Rational& t) {
  return a.y + (b.y - a.y) * (t - a.x) / (b.x - a.x);
}

Rational slope(const Vertex& a, const Vertex& b) { return (b.y - a.y) / (b.x - a.x); }

template <typename Op>
PiecewiseLinear pointwise(const PiecewiseLinear& a, const PiecewiseLinear& b, Op op) {
  const auto xs = merged_breakpoints(a, b);
  const auto ya = evaluate_sorted(a, xs);
  const auto yb = evaluate_sorted(b, xs);
  std::vector<Vertex> v;
  v.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) v.push_back({xs[i], op(ya[i], yb[i])});
  return PiecewiseLinear::from_vertices(std::move(v));
}

void check_unit(const Rational& t) {
  if (t < 0 || t > 1) throw InputError("argument " + to_string(t) + " outside [0,1]");
}

}  // namespace

// ---------------------------------------------------------------------------
// PiecewiseLinear

PiecewiseLinear PiecewiseLinear::from_vertices(std::vector<Vertex> vertices) {
  if (vertices.size() < 2) throw InputError("a piecewise-linear function needs at least two vertices");
  if (vertices.front().x != 0 || vertices.back().x != 1) {
    throw InputError("vertices must span x = 0 to x = 1");
  }
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (!(vertices[i - 1].x < vertices[i].x)) {
      throw InputError("vertex abscissae must be strictly increasing");
    }
  }
  return PiecewiseLinear(normalize(std::move(vertices)));
}

PiecewiseLinear PiecewiseLinear::identity() { return PiecewiseLinear({{0, 0}, {1, 1}}); }

PiecewiseLinear PiecewiseLinear::constant(const Rational& value) {
  return PiecewiseLinear({{0, value}, {1, value}});
}

Rational PiecewiseLinear::operator()(const Rational& t) const {
  check_unit(t);
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), t,
                             [](const Vertex& v, const Rational& x) { return v.x < x; });
  if (it->x == t) return it->y;
  return interpolate(*(it - 1), *it, t);
}

Rational PiecewiseLinear::min_slope() const {
  Rational m = slope(vertices_[0], vertices_[1]);
  for (std::size_t i = 2; i < vertices_.size(); ++i) m = std::min(m, slope(vertices_[i - 1], vertices_[i]));
  return m;
}

Rational PiecewiseLinear::max_slope() const {
  Rational m = slope(vertices_[0], vertices_[1]);
  for (std::size_t i = 2; i < vertices_.size(); ++i) m = std::max(m, slope(vertices_[i - 1], vertices_[i]));
  return m;
}

Rational PiecewiseLinear::min_value() const {
  Rational m = vertices_[0].y;
  for (const auto& v : vertices_) m = std::min(m, v.y);
  return m;
}

Rational PiecewiseLinear::max_value() const {
  Rational m = vertices_[0].y;
  for (const auto& v : vertices_) m = std::max(m, v.y);
  return m;
}

std::vector<Rational> evaluate_sorted(const PiecewiseLinear& f, std::span<const Rational> xs) {
  const auto v = f.vertices();
  std::vector<Rational> out;
  out.reserve(xs.size());
  std::size_t k = 0;
  for (const auto& x : xs) {
    while (k + 2 < v.size() && v[k + 1].x < x) ++k;
    if (x == v[k].x) {
      out.push_back(v[k].y);
    } else if (x == v[k + 1].x) {
      out.push_back(v[k + 1].y);
    } else {
      out.push_back(interpolate(v[k], v[k + 1], x));
    }
  }
  return out;
}

std::vector<Rational> merged_breakpoints(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  std::vector<Rational> xs;
  xs.reserve(a.size() + b.size());
  const auto va = a.vertices();
  const auto vb = b.vertices();
  std::size_t i = 0, j = 0;
  while (i < va.size() || j < vb.size()) {
    if (j == vb.size() || (i < va.size() && va[i].x < vb[j].x)) {
      xs.push_back(va[i++].x);
    } else if (i == va.size() || vb[j].x < va[i].x) {
      xs.push_back(vb[j++].x);
    } else {
      xs.push_back(va[i].x);
      ++i;
      ++j;
    }
  }
  return xs;
}

PiecewiseLinear operator+(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  return pointwise(a, b, [](const Rational& p, const Rational& q) { return Rational(p + q); });
}

PiecewiseLinear operator-(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  return pointwise(a, b, [](const Rational& p, const Rational& q) { return Rational(p - q); });
}

PiecewiseLinear operator*(const Rational& c, const PiecewiseLinear& a) {
  std::vector<Vertex> v(a.vertices().begin(), a.vertices().end());
  for (auto& p : v) p.y *= c;
  return PiecewiseLinear::from_vertices(std::move(v));
}

// ---------------------------------------------------------------------------
// PLMono / PLHomeo

PLMono::PLMono(PiecewiseLinear graph) : graph_(std::move(graph)) {
  const auto v = graph_.vertices();
  if (v.front().y != 0 || v.back().y != 1) throw InputError("element of M must fix 0 and 1");
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].y < v[i - 1].y) throw InputError("element of M must be weakly increasing");
  }
}

PLMono PLMono::from_vertices(std::vector<Vertex> vertices) {
  return PLMono(PiecewiseLinear::from_vertices(std::move(vertices)));
}

PLMono PLMono::identity() { return PLMono(PiecewiseLinear::identity()); }

bool PLMono::is_strictly_increasing() const {
  const auto v = vertices();
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].y == v[i - 1].y) return false;
  }
  return true;
}

PLHomeo::PLHomeo(PLMono f) : mono_(std::move(f)) {
  if (!mono_.is_strictly_increasing()) throw InputError("homeomorphism must be strictly increasing");
}

PLHomeo PLHomeo::from_vertices(std::vector<Vertex> vertices) {
  return PLHomeo(PLMono::from_vertices(std::move(vertices)));
}

PLHomeo PLHomeo::identity() { return PLHomeo(PLMono::identity()); }

PLHomeo PLHomeo::inverse() const {
  std::vector<Vertex> v;
  v.reserve(vertices().size());
  for (const auto& p : vertices()) v.push_back({p.y, p.x});
  return PLHomeo::from_vertices(std::move(v));
}

// ---------------------------------------------------------------------------
// LcMono

LcMono LcMono::from_pieces(std::vector<LcPiece> pieces, Rational at_zero) {
  if (pieces.empty()) throw InputError("left-continuous function needs at least one piece");
  if (pieces.front().from != 0 || pieces.back().to != 1) throw InputError("pieces must tile (0,1]");
  if (at_zero < 0 || at_zero > pieces.front().lo) throw InputError("value at 0 out of order");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (!(p.from < p.to)) throw InputError("empty piece");
    if (p.lo > p.hi || p.lo < 0 || p.hi > 1) throw InputError("piece not increasing within [0,1]");
    if (i > 0) {
      if (pieces[i - 1].to != p.from) throw InputError("pieces must be contiguous");
      if (pieces[i - 1].hi > p.lo) throw InputError("pieces must be weakly increasing");
    }
  }
  // Merge continuous collinear neighbours so equal functions compare equal.
  std::vector<LcPiece> merged;
  for (auto& p : pieces) {
    if (!merged.empty()) {
      auto& q = merged.back();
      if (q.hi == p.lo && (q.hi - q.lo) * (p.to - p.from) == (p.hi - p.lo) * (q.to - q.from)) {
        q.to = p.to;
        q.hi = p.hi;
        continue;
      }
    }
    merged.push_back(std::move(p));
  }
  return LcMono(std::move(merged), std::move(at_zero));
}

Rational LcMono::operator()(const Rational& t) const {
  check_unit(t);
  if (t == 0) return at_zero_;
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), t,
                             [](const LcPiece& p, const Rational& x) { return p.to < x; });
  const auto& p = *it;
  if (t == p.to) return p.hi;
  return p.lo + (p.hi - p.lo) * (t - p.from) / (p.to - p.from);
}

std::vector<Rational> LcMono::jump_points() const {
  std::vector<Rational> out;
  if (at_zero_ < pieces_.front().lo) out.push_back(0);
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i - 1].hi < pieces_[i].lo) out.push_back(pieces_[i].from);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Composition

PiecewiseLinear compose(const PiecewiseLinear& outer, const PLMono& inner) {
  const auto ov = outer.vertices();
  const auto iv = inner.vertices();
  std::vector<Vertex> out;
  out.reserve(iv.size() + ov.size());
  out.push_back({0, outer(iv[0].y)});
  for (std::size_t k = 1; k < iv.size(); ++k) {
    const auto& a = iv[k - 1];
    const auto& b = iv[k];
    if (a.y < b.y) {
      auto it = std::upper_bound(ov.begin(), ov.end(), a.y,
                                 [](const Rational& y, const Vertex& v) { return y < v.x; });
      for (; it != ov.end() && it->x < b.y; ++it) {
        const Rational x = a.x + (it->x - a.y) * (b.x - a.x) / (b.y - a.y);
        out.push_back({x, it->y});
      }
    }
    out.push_back({b.x, outer(b.y)});
  }
  return PiecewiseLinear::from_vertices(std::move(out));
}

PLMono compose(const PLMono& f, const PLMono& g) { return PLMono(compose(f.graph(), g)); }

PLMono compose(const PLMono& f, const PLHomeo& g) { return compose(f, g.mono()); }

PLHomeo compose(const PLHomeo& f, const PLHomeo& g) { return PLHomeo(compose(f.mono(), g.mono())); }

PLMono compose(const PLMono& f, const LcMono& s) {
  const auto fv = f.vertices();
  std::vector<Vertex> out;
  Rational left_value = f(s.at_zero());
  out.push_back({0, left_value});
  for (const auto& p : s.pieces()) {
    const Rational start = f(p.lo);
    if (start != left_value) {
      throw InvariantViolation("composition through a jump is discontinuous at " + to_string(p.from));
    }
    if (p.lo < p.hi) {
      auto it = std::upper_bound(fv.begin(), fv.end(), p.lo,
                                 [](const Rational& y, const Vertex& v) { return y < v.x; });
      for (; it != fv.end() && it->x < p.hi; ++it) {
        const Rational x = p.from + (it->x - p.lo) * (p.to - p.from) / (p.hi - p.lo);
        out.push_back({x, it->y});
      }
    }
    left_value = f(p.hi);
    out.push_back({p.to, left_value});
  }
  return PLMono::from_vertices(std::move(out));
}

LcMono pseudo_inverse(const PLMono& f) {
  const auto v = f.vertices();
  std::vector<LcPiece> pieces;
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k - 1].y < v[k].y) pieces.push_back({v[k - 1].y, v[k].y, v[k - 1].x, v[k].x});
  }
  return LcMono::from_pieces(std::move(pieces), 0);
}

// ---------------------------------------------------------------------------
// Distances

Rational sup_dist(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  const auto xs = merged_breakpoints(a, b);
  const auto ya = evaluate_sorted(a, xs);
  const auto yb = evaluate_sorted(b, xs);
  Rational best = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) best = std::max(best, Rational(abs(ya[i] - yb[i])));
  return best;
}

Rational order_pred(const PLMono& f, const PLMono& g) {
  const auto xs = merged_breakpoints(f.graph(), g.graph());
  const auto yf = evaluate_sorted(f.graph(), xs);
  const auto yg = evaluate_sorted(g.graph(), xs);
  Rational best = 0;  // attained at s = 0, where both vanish
  for (std::size_t i = 0; i < xs.size(); ++i) best = std::max(best, Rational(yf[i] - yg[i]));
  return best;
}

UniformWitness uniform_witness(const PLHomeo& g) {
  if (g.is_identity()) throw InputError("identity has no witness");
  const bool above = std::any_of(g.vertices().begin(), g.vertices().end(),
                                 [](const Vertex& v) { return v.y > v.x; });
  PLHomeo shift = above ? g : g.inverse();

  const Vertex* best = nullptr;
  Rational gap = 0;
  for (const auto& v : shift.vertices()) {
    if (v.y - v.x > gap) {
      gap = v.y - v.x;
      best = &v;
    }
  }
  // shift != id and shift(s) > s somewhere, so some breakpoint has a positive gap.
  const Rational t = best->x;
  const Rational top = best->y;
  std::vector<Vertex> w{{0, 0}, {t, 0}, {top, 1}};
  if (top != 1) w.push_back({1, 1});
  return {PLMono::from_vertices(std::move(w)), std::move(shift), !above, t};
}

}  // namespace roelcke
