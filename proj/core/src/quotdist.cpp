#include "roelcke/quotdist.hpp"

#include <algorithm>
#include <string>

namespace roelcke {

namespace {

void check_lengths(const MonoTuple& a, const MonoTuple& b) {
  if (a.size() != b.size()) {
    throw InputError("tuple lengths differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

// Union of component breakpoints and the component values there, row-major.
void sample_knots(const MonoTuple& t, std::vector<Rational>& knots, std::vector<Rational>& values) {
  PiecewiseLinear all = t[0].graph();
  knots.assign(all.vertices().size(), 0);
  std::transform(all.vertices().begin(), all.vertices().end(), knots.begin(), [](const Vertex& v) { return v.x; });
  for (std::size_t i = 1; i < t.size(); ++i) {
    std::vector<Rational> merged;
    const auto cv = t[i].vertices();
    std::vector<Rational> xs(cv.size());
    std::transform(cv.begin(), cv.end(), xs.begin(), [](const Vertex& v) { return v.x; });
    std::set_union(knots.begin(), knots.end(), xs.begin(), xs.end(), std::back_inserter(merged));
    knots = std::move(merged);
  }
  const std::size_t n = t.size();
  values.assign(knots.size() * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ys = evaluate_sorted(t[i].graph(), knots);
    for (std::size_t p = 0; p < knots.size(); ++p) values[p * n + i] = ys[p];
  }
}

std::optional<EdgeInterval> clip_below(const std::optional<EdgeInterval>& e, const Rational& from) {
  if (!e) return std::nullopt;
  if (e->hi < from) return std::nullopt;
  return EdgeInterval{std::max(e->lo, from), e->hi};
}

}  // namespace

FreeSpace::FreeSpace(const MonoTuple& a, const MonoTuple& b, Rational eps) : eps_(std::move(eps)), n_(a.size()) {
  check_lengths(a, b);
  if (eps_ < 0) throw InputError("eps must be nonnegative");
  sample_knots(a, u_, a_);
  sample_knots(b, v_, b_);
}

std::optional<EdgeInterval> FreeSpace::edge(const std::vector<Rational>& fixed, std::span<const Rational> start,
                                            std::span<const Rational> end) const {
  Rational lo = 0, hi = 1;
  Rational delta, l1, l2;
  for (std::size_t i = 0; i < n_; ++i) {
    delta = end[i] - start[i];
    if (delta == 0) {
      if (Rational(abs(fixed[i] - start[i])) > eps_) return std::nullopt;
      continue;
    }
    l1 = (fixed[i] - eps_ - start[i]) / delta;
    l2 = (fixed[i] + eps_ - start[i]) / delta;
    if (delta < 0) std::swap(l1, l2);
    if (l1 > lo) lo = l1;
    if (l2 < hi) hi = l2;
    if (lo > hi) return std::nullopt;
  }
  return EdgeInterval{std::move(lo), std::move(hi)};
}

std::optional<EdgeInterval> FreeSpace::vertical_edge(std::size_t p, std::size_t q) const {
  std::vector<Rational> fixed(a_.begin() + p * n_, a_.begin() + (p + 1) * n_);
  return edge(fixed, std::span(b_).subspan(q * n_, n_), std::span(b_).subspan((q + 1) * n_, n_));
}

std::optional<EdgeInterval> FreeSpace::horizontal_edge(std::size_t p, std::size_t q) const {
  std::vector<Rational> fixed(b_.begin() + q * n_, b_.begin() + (q + 1) * n_);
  return edge(fixed, std::span(a_).subspan(p * n_, n_), std::span(a_).subspan((p + 1) * n_, n_));
}

bool FreeSpace::monotone_path_exists() const {
  const std::size_t rows = this->rows();
  const std::size_t cols = this->cols();

  // Reachable part of the bottom edge of each cell in the current row of v.
  std::vector<std::optional<EdgeInterval>> bottom(rows);
  bool chain = true;
  for (std::size_t p = 0; p < rows; ++p) {
    auto f = horizontal_edge(p, 0);
    if (chain && f && f->lo == 0) {
      chain = f->hi == 1;
      bottom[p] = std::move(f);
    } else {
      chain = false;
    }
  }

  bool left_chain = true;
  std::optional<EdgeInterval> left;
  for (std::size_t q = 0; q < cols; ++q) {
    left.reset();
    auto f = vertical_edge(0, q);
    if (left_chain && f && f->lo == 0) {
      left_chain = f->hi == 1;
      left = std::move(f);
    } else {
      left_chain = false;
    }
    for (std::size_t p = 0; p < rows; ++p) {
      const bool from_left = left.has_value();
      const bool from_bottom = bottom[p].has_value();
      std::optional<EdgeInterval> top_reach, right_reach;
      if (from_left) {
        top_reach = horizontal_edge(p, q + 1);
      } else if (from_bottom) {
        top_reach = clip_below(horizontal_edge(p, q + 1), bottom[p]->lo);
      }
      if (from_bottom) {
        right_reach = vertical_edge(p + 1, q);
      } else if (from_left) {
        right_reach = clip_below(vertical_edge(p + 1, q), left->lo);
      }
      bottom[p] = std::move(top_reach);
      left = std::move(right_reach);
    }
  }
  return (bottom[rows - 1] && bottom[rows - 1]->hi == 1) || (left && left->hi == 1);
}

Rational tuple_sup_dist(const MonoTuple& a, const MonoTuple& b) {
  check_lengths(a, b);
  Rational best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, sup_dist(a[i], b[i]));
  return best;
}

bool quot_decision(const MonoTuple& a, const MonoTuple& b, const Rational& eps) {
  return FreeSpace(a, b, eps).monotone_path_exists();
}

QuotInterval quot_dist(const MonoTuple& a, const MonoTuple& b, const Rational& tol) {
  check_lengths(a, b);
  if (tol <= 0) throw InputError("tolerance must be positive");
  QuotInterval out{0, tuple_sup_dist(canonicalize(a).canonical.tuple(), canonicalize(b).canonical.tuple()), 0};

  ++out.decisions;
  if (quot_decision(a, b, 0)) {
    out.hi = 0;
    return out;
  }
  ++out.decisions;
  if (!quot_decision(a, b, out.hi)) {
    throw InvariantViolation("quotient distance exceeds the canonical sup distance " + to_string(out.hi));
  }
  while (out.hi - out.lo > tol) {
    Rational mid = (out.lo + out.hi) / 2;
    ++out.decisions;
    if (quot_decision(a, b, mid)) {
      out.hi = std::move(mid);
    } else {
      out.lo = std::move(mid);
    }
  }
  return out;
}

namespace {

// Breakpoints of f strictly inside each grid cell (j/k, (j+1)/k).
std::vector<std::vector<Vertex>> interior_breakpoints(const PLMono& f, std::size_t k) {
  std::vector<std::vector<Vertex>> cells(k);
  for (const auto& v : f.vertices()) {
    const Rational scaled = v.x * static_cast<long>(k);
    if (scaled.get_den() == 1) continue;
    cells[floor(scaled).get_num().get_ui()].push_back(v);
  }
  return cells;
}

}  // namespace

Rational brute_oracle(const MonoTuple& a, const MonoTuple& b, std::size_t k) {
  check_lengths(a, b);
  if (k == 0) throw InputError("grid size k must be positive");
  const std::size_t n = a.size();
  std::vector<Rational> grid(k + 1);
  for (std::size_t j = 0; j <= k; ++j) grid[j] = rational(static_cast<long>(j), static_cast<long>(k));

  std::vector<Rational> av((k + 1) * n), bv((k + 1) * n);
  std::vector<std::vector<std::vector<Vertex>>> a_inner(n), b_inner(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ya = evaluate_sorted(a[i].graph(), grid);
    const auto yb = evaluate_sorted(b[i].graph(), grid);
    for (std::size_t j = 0; j <= k; ++j) {
      av[j * n + i] = ya[j];
      bv[j * n + i] = yb[j];
    }
    a_inner[i] = interior_breakpoints(a[i], k);
    b_inner[i] = interior_breakpoints(b[i], k);
  }

  // Exact sup of the cost along the diagonal step from (j, l) to
  // (j+1, l+1), excluding its endpoints: each component's difference is PL
  // along the step, with breakpoints where either component has one.
  Rational d;
  auto diagonal_interior = [&](std::size_t j, std::size_t l) {
    Rational worst = 0;
    const Rational shift = grid[l] - grid[j];
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& v : a_inner[i][j]) {
        d = v.y - b[i](v.x + shift);
        if (sgn(d) < 0) d = -d;
        if (d > worst) worst = d;
      }
      for (const auto& v : b_inner[i][l]) {
        d = a[i](v.x - shift) - v.y;
        if (sgn(d) < 0) d = -d;
        if (d > worst) worst = d;
      }
    }
    return worst;
  };

  std::vector<Rational> prev(k + 1), cur(k + 1);
  Rational cost, diff, best;
  for (std::size_t l = 0; l <= k; ++l) {
    for (std::size_t j = 0; j <= k; ++j) {
      cost = 0;
      for (std::size_t i = 0; i < n; ++i) {
        mpq_sub(diff.get_mpq_t(), av[j * n + i].get_mpq_t(), bv[l * n + i].get_mpq_t());
        if (sgn(diff) < 0) mpq_neg(diff.get_mpq_t(), diff.get_mpq_t());
        if (diff > cost) cost = diff;
      }
      if (j == 0 && l == 0) {
        cur[j] = cost;
        continue;
      }
      // Axis steps: one parameter is fixed and every component is monotone in
      // the other, so the step's cost is bounded by its endpoints.
      bool have = false;
      if (j > 0) {
        best = cur[j - 1];
        have = true;
      }
      if (l > 0 && (!have || prev[j] < best)) {
        best = prev[j];
        have = true;
      }
      if (j > 0 && l > 0 && prev[j - 1] < best) {
        const Rational inner = diagonal_interior(j - 1, l - 1);
        const Rational via = prev[j - 1] > inner ? prev[j - 1] : inner;
        if (via < best) best = via;
      }
      cur[j] = best > cost ? best : cost;
    }
    std::swap(prev, cur);
  }
  return prev[k];
}

VEpsResult v_eps_upper(const CanonicalTuple& p, const Rational& eps, std::size_t net, const Rational& tol) {
  if (p.size() != 2 || !p.weights().is_uniform()) throw InputError("V_eps search needs a point of S_2");
  if (net == 0) throw InputError("net resolution must be positive");
  const PLMono& xi = p[0];
  const PLMono& zeta = p[1];
  const LcMono zeta_inv = pseudo_inverse(zeta);
  const MonoTuple one({PLMono::identity(), PLMono::identity()});

  VEpsResult best{0, false, PLHomeo::identity(), 0};
  bool have = false;
  for (std::size_t res = 1; res <= net; res *= 2) {
    const Rational step = rational(1, static_cast<long>(res));
    const Rational blend = step * step;
    std::vector<Vertex> knots;
    knots.reserve(res + 1);
    for (std::size_t j = 0; j < res; ++j) {
      const Rational x = step * static_cast<long>(j);
      knots.push_back({x, (1 - blend) * zeta_inv(xi(x)) + blend * x});
    }
    knots.push_back({1, 1});
    PLHomeo g = PLHomeo::from_vertices(std::move(knots));

    const MonoTuple moved({compose(xi, g.inverse()), zeta});
    auto r = quot_dist(moved, one, tol);
    ++best.candidates;
    if (!have || r.hi < best.upper_bound) {
      best.upper_bound = r.hi;
      best.best = std::move(g);
      have = true;
    }
  }
  best.member = best.upper_bound < eps;
  return best;
}

}  // namespace roelcke
