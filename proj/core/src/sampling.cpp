#include "roelcke/sampling.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace roelcke {

std::uint64_t Sampler::below(std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % bound;
}

// `count` distinct integers from [lo, hi], ascending.
std::vector<long> Sampler::distinct_sorted(long lo, long hi, std::size_t count) {
  std::vector<long> pool;
  for (long v = lo; v <= hi; ++v) pool.push_back(v);
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + below(pool.size() - i)]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

PLMono Sampler::mono(unsigned plateau) {
  static constexpr std::array<long, 4> kDenominators{8, 12, 16, 30};
  const long d = kDenominators[below(kDenominators.size())];
  const std::size_t knots = 1 + below(6);
  const auto xs = distinct_sorted(1, d - 1, knots);
  std::vector<long> ys(knots);
  for (auto& y : ys) y = static_cast<long>(below(static_cast<std::uint64_t>(d) + 1));
  std::sort(ys.begin(), ys.end());
  for (std::size_t i = 1; i < knots; ++i) {
    if (below(8) < plateau) ys[i] = ys[i - 1];
  }
  std::vector<Vertex> v{{0, 0}};
  for (std::size_t i = 0; i < knots; ++i) v.push_back({rational(xs[i], d), rational(ys[i], d)});
  v.push_back({1, 1});
  return PLMono::from_vertices(std::move(v));
}

PLHomeo Sampler::homeo() {
  static constexpr std::array<long, 4> kDenominators{8, 12, 16, 30};
  const long d = kDenominators[below(kDenominators.size())];
  const std::size_t knots = 1 + below(5);
  const auto xs = distinct_sorted(1, d - 1, knots);
  const auto ys = distinct_sorted(1, d - 1, knots);
  std::vector<Vertex> v{{0, 0}};
  for (std::size_t i = 0; i < knots; ++i) v.push_back({rational(xs[i], d), rational(ys[i], d)});
  v.push_back({1, 1});
  return PLHomeo::from_vertices(std::move(v));
}

PLHomeo Sampler::nontrivial_homeo() {
  for (;;) {
    auto g = homeo();
    if (!g.is_identity()) return g;
  }
}

CanonicalTuple Sampler::canonical(std::size_t n, std::size_t max_cells) {
  const std::size_t cells = 1 + below(max_cells);
  // Cell slots in order; shuffling them and reading K at a time assigns each
  // component K slots.
  std::vector<std::size_t> slots;
  slots.reserve(n * cells);
  for (std::size_t j = 0; j < cells; ++j) {
    for (std::size_t r = 0; r < n; ++r) slots.push_back(j);
  }
  for (std::size_t i = slots.size(); i > 1; --i) std::swap(slots[i - 1], slots[below(i)]);

  const long k = static_cast<long>(cells);
  std::vector<PLMono> parts;
  parts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> rise(cells, 0);
    for (std::size_t s = i * cells; s < (i + 1) * cells; ++s) ++rise[slots[s]];
    std::vector<Vertex> v{{0, 0}};
    long level = 0;
    for (std::size_t j = 0; j < cells; ++j) {
      level += rise[j];
      v.push_back({rational(static_cast<long>(j) + 1, k), rational(level, k)});
    }
    parts.push_back(PLMono::from_vertices(std::move(v)));
  }
  return CanonicalTuple::from(MonoTuple(std::move(parts)));
}

MonoTuple Sampler::tuple(std::size_t n) {
  const auto c = canonical(n);
  return reparameterize(c.tuple(), mono(static_cast<unsigned>(below(6))));
}

OpenInterval Sampler::interval() {
  const auto ends = distinct_sorted(0, 16, 2);
  return {rational(ends[0], 16), rational(ends[1], 16)};
}

std::vector<OpenInterval> Sampler::intervals(std::size_t max_count) {
  std::vector<OpenInterval> out(1 + below(max_count));
  for (auto& i : out) i = interval();
  return out;
}

GapSet Sampler::clean_gapset(std::size_t max_gaps) {
  // Endpoints are 2*count distinct grid points, so consecutive gaps never
  // touch; (0,1) alone is redrawn so the complement keeps positive length.
  const std::size_t count = below(max_gaps + 1);
  auto ends = distinct_sorted(0, 32, 2 * count);
  while (count == 1 && ends[0] == 0 && ends[1] == 32) ends = distinct_sorted(0, 32, 2);
  std::vector<OpenInterval> gaps;
  for (std::size_t i = 0; i < count; ++i) gaps.push_back({rational(ends[2 * i], 32), rational(ends[2 * i + 1], 32)});
  return merge_gaps(std::move(gaps));
}

}  // namespace roelcke
