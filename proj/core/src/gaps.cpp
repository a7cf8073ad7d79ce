#include "roelcke/gaps.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace roelcke {

bool GapSet::covers(const Rational& s) const {
  return std::any_of(gaps_.begin(), gaps_.end(), [&](const OpenInterval& g) { return g.contains(s); });
}

std::vector<ClosedInterval> GapSet::complement() const {
  std::vector<ClosedInterval> out;
  Rational cursor = 0;
  for (const auto& g : gaps_) {
    out.push_back({cursor, g.lo});
    cursor = g.hi;
  }
  out.push_back({cursor, 1});
  return out;
}

Rational GapSet::complement_length() const {
  Rational total = 1;
  for (const auto& g : gaps_) total -= g.hi - g.lo;
  return total;
}

GapSet merge_gaps(std::vector<OpenInterval> intervals) {
  for (const auto& i : intervals) {
    if (!(i.lo < i.hi)) throw InputError("empty or inverted interval (" + to_string(i.lo) + ", " + to_string(i.hi) + ")");
    if (i.lo < 0 || i.hi > 1) throw InputError("interval outside [0,1]");
  }
  std::sort(intervals.begin(), intervals.end(), [](const OpenInterval& a, const OpenInterval& b) { return a.lo < b.lo; });
  std::vector<OpenInterval> out;
  for (auto& i : intervals) {
    if (!out.empty() && i.lo < out.back().hi) {
      if (i.hi > out.back().hi) out.back().hi = i.hi;
    } else {
      out.push_back(std::move(i));
    }
  }
  return GapSet(std::move(out));
}

std::vector<Rational> isolated_points(const GapSet& g) {
  std::vector<Rational> out;
  const auto gaps = g.gaps();
  for (std::size_t i = 1; i < gaps.size(); ++i) {
    if (gaps[i - 1].hi == gaps[i].lo) out.push_back(gaps[i].lo);
  }
  return out;
}

namespace {

void require_no_isolated_points(const GapSet& g) {
  const auto pts = isolated_points(g);
  if (!pts.empty()) throw InputError("gap set has an isolated point at " + to_string(pts.front()));
}

// Appends the graph of the extreme pair over [α,β] to the vertex lists.
void append_extreme(const OpenInterval& gap, std::vector<Vertex>& xi, std::vector<Vertex>& zeta) {
  const Rational mid = (gap.lo + gap.hi) / 2;
  if (gap.lo > xi.back().x) {
    xi.push_back({gap.lo, gap.lo});
    zeta.push_back({gap.lo, gap.lo});
  }
  xi.push_back({mid, gap.lo});
  zeta.push_back({mid, gap.hi});
  xi.push_back({gap.hi, gap.hi});
  zeta.push_back({gap.hi, gap.hi});
}

ExtremePair finish(std::vector<Vertex> xi, std::vector<Vertex> zeta) {
  if (xi.back().x < 1) {
    xi.push_back({1, 1});
    zeta.push_back({1, 1});
  }
  return {PLMono::from_vertices(std::move(xi)), PLMono::from_vertices(std::move(zeta))};
}

}  // namespace

ExtremePair extreme_pair(const OpenInterval& gap) {
  if (!(gap.lo < gap.hi) || gap.lo < 0 || gap.hi > 1) throw InputError("degenerate interval");
  std::vector<Vertex> xi{{0, 0}}, zeta{{0, 0}};
  append_extreme(gap, xi, zeta);
  return finish(std::move(xi), std::move(zeta));
}

ExtremePair extreme_pair_all(const GapSet& g) {
  require_no_isolated_points(g);
  std::vector<Vertex> xi{{0, 0}}, zeta{{0, 0}};
  for (const auto& gap : g.gaps()) append_extreme(gap, xi, zeta);
  return finish(std::move(xi), std::move(zeta));
}

bool equiv_test(const PLMono& f, const PLMono& h, const GapSet& g) {
  const auto xs = merged_breakpoints(f.graph(), h.graph());
  const auto yf = evaluate_sorted(f.graph(), xs);
  const auto yh = evaluate_sorted(h.graph(), xs);
  const auto closed = g.complement();

  for (std::size_t k = 1; k < xs.size(); ++k) {
    const Rational& x0 = xs[k - 1];
    const Rational& x1 = xs[k];
    const Rational d0 = yf[k - 1] - yh[k - 1];
    const Rational d1 = yf[k] - yh[k];
    if (d0 == 0 && d1 == 0) continue;

    // The only point of the segment where f = h, if any.
    std::optional<Rational> zero;
    if (sgn(d0) * sgn(d1) <= 0) zero = x0 + d0 / (d0 - d1) * (x1 - x0);

    const Rational m0 = (yf[k - 1] + yh[k - 1]) / 2;
    const Rational m1 = (yf[k] + yh[k]) / 2;
    for (const auto& c : closed) {
      // Preimage of c under the midpoint map on this segment.
      Rational p_lo, p_hi;
      if (m0 == m1) {
        if (m0 < c.lo || m0 > c.hi) continue;
        p_lo = x0;
        p_hi = x1;
      } else {
        const Rational lo_v = std::max(c.lo, m0);
        const Rational hi_v = std::min(c.hi, m1);
        if (lo_v > hi_v) continue;
        p_lo = x0 + (lo_v - m0) / (m1 - m0) * (x1 - x0);
        p_hi = x0 + (hi_v - m0) / (m1 - m0) * (x1 - x0);
      }
      if (p_lo == p_hi && zero && *zero == p_lo) continue;
      return false;
    }
  }
  return true;
}

PLMono collapse_map(const GapSet& g) {
  require_no_isolated_points(g);
  const Rational total = g.complement_length();
  if (total == 0) throw InputError("trivial pseudo-distance: the gaps cover (0,1)");
  std::vector<Vertex> v{{0, 0}};
  Rational measure = 0;
  Rational cursor = 0;
  for (const auto& gap : g.gaps()) {
    measure += gap.lo - cursor;
    const Rational level = measure / total;
    if (gap.lo > 0) v.push_back({gap.lo, level});
    v.push_back({gap.hi, level});
    cursor = gap.hi;
  }
  if (cursor < 1) v.push_back({1, 1});
  return PLMono::from_vertices(std::move(v));
}

Rational rho_chi(const PLMono& f, const PLMono& h, const PLMono& chi) {
  return sup_dist(compose(chi, f), compose(chi, h));
}

PseudoDist make_rho_chi(PLMono chi) {
  return [chi = std::move(chi)](const MonoTuple& a, const MonoTuple& b) {
    if (a.size() != b.size()) throw InputError("tuple lengths differ");
    Rational best = 0;
    for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, rho_chi(a[i], b[i], chi));
    return best;
  };
}

PseudoDist pullback_pseudometric(MonoTuple base, PseudoDist rho) {
  return [base = std::move(base), rho = std::move(rho)](const MonoTuple& f, const MonoTuple& f2) {
    if (f.size() != 1 || f2.size() != 1) throw InputError("pulled-back pseudo-distance takes single elements");
    return rho(reparameterize(base, f[0]), reparameterize(base, f2[0]));
  };
}

}  // namespace roelcke
