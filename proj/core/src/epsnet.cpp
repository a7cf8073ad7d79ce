#include "roelcke/epsnet.hpp"

#include <map>
#include <string>

namespace roelcke {

namespace {

// All ways to split n unit steps among n components.
std::vector<std::vector<long>> step_patterns(std::size_t n) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (long d = left; d >= 0; --d) {
      cur[i] = d;
      self(self, i + 1, left - d);
    }
  };
  rec(rec, 0, static_cast<long>(n));
  return out;
}

void check_args(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw InputError("net needs n >= 1 and m >= 1");
}

}  // namespace

mpz_class epsnet_size(std::size_t n, std::size_t m) {
  check_args(n, m);
  const auto patterns = step_patterns(n);
  const long top = static_cast<long>(m);
  std::map<std::vector<long>, mpz_class> level{{std::vector<long>(n, 0), 1}};
  for (std::size_t step = 0; step < m; ++step) {
    std::map<std::vector<long>, mpz_class> next;
    for (const auto& [state, count] : level) {
      for (const auto& d : patterns) {
        std::vector<long> s = state;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = (s[i] += d[i]) <= top;
        if (ok) next[s] += count;
      }
    }
    level = std::move(next);
  }
  auto it = level.find(std::vector<long>(n, top));
  return it == level.end() ? mpz_class(0) : it->second;
}

std::vector<CanonicalTuple> epsnet_points(std::size_t n, std::size_t m, std::size_t limit) {
  const mpz_class size = epsnet_size(n, m);
  if (size > static_cast<unsigned long>(limit)) {
    throw InputError("net has " + size.get_str() + " points, more than the limit " + std::to_string(limit));
  }
  const auto patterns = step_patterns(n);
  const long top = static_cast<long>(m);
  std::vector<CanonicalTuple> out;
  // levels[j][i] = m * component_i(j/m)
  std::vector<std::vector<long>> levels{std::vector<long>(n, 0)};

  auto emit = [&] {
    std::vector<PLMono> parts;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Vertex> v;
      for (std::size_t j = 0; j <= m; ++j) {
        v.push_back({rational(static_cast<long>(j), top), rational(levels[j][i], top)});
      }
      parts.push_back(PLMono::from_vertices(std::move(v)));
    }
    out.push_back(CanonicalTuple::from(MonoTuple(std::move(parts))));
  };

  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == m) {
      if (levels.back() == std::vector<long>(n, top)) emit();
      return;
    }
    const long remaining = top - static_cast<long>(j);
    for (const auto& d : patterns) {
      std::vector<long> s = levels.back();
      bool ok = true;
      // Each component must still be able to reach m with at most n per step.
      for (std::size_t i = 0; i < n && ok; ++i) {
        s[i] += d[i];
        ok = s[i] <= top && top - s[i] <= static_cast<long>(n) * (remaining - 1);
      }
      if (!ok) continue;
      levels.push_back(std::move(s));
      self(self, j + 1);
      levels.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

RoelckeCoord nearest_net_point(const RoelckeCoord& f, std::size_t m) {
  check_args(2, m);
  const long top = static_cast<long>(m);
  std::vector<Rational> knots;
  for (std::size_t j = 0; j <= m; ++j) knots.push_back(rational(static_cast<long>(j), top));
  const auto values = evaluate_sorted(f.function(), knots);
  std::vector<Vertex> v;
  for (std::size_t j = 0; j <= m; ++j) {
    v.push_back({knots[j], floor(values[j] * top + Rational(1, 2)) / top});
  }
  return RoelckeCoord(PiecewiseLinear::from_vertices(std::move(v)));
}

bool is_net_point(const RoelckeCoord& f, std::size_t m) {
  check_args(2, m);
  const long top = static_cast<long>(m);
  const auto v = f.function().vertices();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (Rational(v[k].x * top).get_den() != 1 || Rational(v[k].y * top).get_den() != 1) return false;
    if (k == 0) continue;
    // Vertices drop collinear knots, so every segment must itself have an
    // admissible slope for the knots in between to stay on the grid.
    const Rational slope = (v[k].y - v[k - 1].y) / (v[k].x - v[k - 1].x);
    if (slope != 0 && slope != 1 && slope != -1) return false;
  }
  return true;
}

CoveringReport check_covering_s2(std::size_t m, std::size_t samples, Sampler& rng) {
  CoveringReport report;
  report.samples = samples;
  report.max_distance = 0;
  report.bound = rational(2, static_cast<long>(m));
  for (std::size_t s = 0; s < samples; ++s) {
    const CanonicalTuple p = s % 2 == 0 ? rng.canonical(2) : canonicalize(rng.tuple(2)).canonical;
    const RoelckeCoord f = roelcke_coord(p);
    const RoelckeCoord net = nearest_net_point(f, m);
    if (!is_net_point(net, m)) throw InvariantViolation("rounded point is not on the net");
    const Rational d = sup_dist(f.function(), net.function());
    if (d > report.max_distance) report.max_distance = d;
    if (d <= report.bound) ++report.covered;
  }
  return report;
}

}  // namespace roelcke
