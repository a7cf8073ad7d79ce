#include <gtest/gtest.h>

#include "roelcke/gaps.hpp"
#include "roelcke/sampling.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace roelcke;
using roelcke::testing::ids;
using roelcke::testing::interval;
using roelcke::testing::mono;
using roelcke::testing::pair_of;
using roelcke::testing::Q;

namespace {

// Membership in the union of raw intervals, by direct scan.
bool in_union(const std::vector<OpenInterval>& raw, const Rational& s) {
  for (const auto& i : raw) {
    if (i.lo < s && s < i.hi) return true;
  }
  return false;
}

// Every endpoint and every midpoint between consecutive endpoints.
std::vector<Rational> probe_points(const std::vector<OpenInterval>& raw) {
  std::vector<Rational> ends{0, 1};
  for (const auto& i : raw) {
    ends.push_back(i.lo);
    ends.push_back(i.hi);
  }
  std::sort(ends.begin(), ends.end());
  std::vector<Rational> out;
  for (std::size_t k = 0; k < ends.size(); ++k) {
    out.push_back(ends[k]);
    if (k + 1 < ends.size()) out.push_back((ends[k] + ends[k + 1]) / 2);
  }
  return out;
}

}  // namespace

TEST(MergeGaps, Examples) {
  EXPECT_EQ(merge_gaps({interval("1/10", "3/10"), interval("2/10", "5/10")}), merge_gaps({interval("1/10", "1/2")}));
  const auto disjoint = merge_gaps({interval("3/10", "4/10"), interval("1/10", "2/10")});
  ASSERT_EQ(disjoint.gaps().size(), 2u);
  EXPECT_EQ(disjoint.gaps()[0], interval("1/10", "2/10"));
  EXPECT_EQ(disjoint.gaps()[1], interval("3/10", "4/10"));
  const auto nested = merge_gaps({interval("1/10", "4/10"), interval("2/10", "3/10")});
  ASSERT_EQ(nested.gaps().size(), 1u);
  EXPECT_EQ(nested.gaps()[0], interval("1/10", "4/10"));
  EXPECT_EQ(merge_gaps({interval("1/4", "1/2"), interval("1/2", "3/4")}).gaps().size(), 2u);
}

TEST(MergeGaps, Errors) {
  EXPECT_THROW(merge_gaps({interval("1/2", "1/2")}), InputError);
  EXPECT_THROW(merge_gaps({interval("3/4", "1/4")}), InputError);
  EXPECT_THROW(merge_gaps({interval("-1/4", "1/4")}), InputError);
  EXPECT_THROW(merge_gaps({interval("1/4", "5/4")}), InputError);
}

TEST(MergeGaps, IdempotentOrderInsensitiveUnionPreserving) {
  Sampler rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto raw = rng.intervals(6);
    const auto merged = merge_gaps(raw);
    const std::vector<OpenInterval> out(merged.gaps().begin(), merged.gaps().end());
    EXPECT_EQ(merge_gaps(out), merged);
    std::reverse(raw.begin(), raw.end());
    EXPECT_EQ(merge_gaps(raw), merged);
    for (std::size_t k = 1; k < out.size(); ++k) EXPECT_LE(out[k - 1].hi, out[k].lo);
    for (const auto& s : probe_points(raw)) EXPECT_EQ(merged.covers(s), in_union(raw, s)) << to_string(s);
  }
}

TEST(IsolatedPoints, Examples) {
  EXPECT_EQ(isolated_points(merge_gaps({interval("1/4", "1/2"), interval("1/2", "3/4")})),
            std::vector<Rational>{Q("1/2")});
  EXPECT_TRUE(isolated_points(merge_gaps({interval("1/4", "3/4")})).empty());
  EXPECT_TRUE(isolated_points(GapSet{}).empty());
}

TEST(GapSet, Complement) {
  const auto g = merge_gaps({interval("0", "1/4"), interval("1/4", "1/2"), interval("3/4", "1")});
  const std::vector<ClosedInterval> expected{{0, 0}, {Q("1/4"), Q("1/4")}, {Q("1/2"), Q("3/4")}, {1, 1}};
  EXPECT_EQ(g.complement(), expected);
  EXPECT_EQ(g.complement_length(), Q("1/4"));
}

TEST(ExtremePair, Examples) {
  const auto [xi, zeta] = extreme_pair(interval("1/4", "3/4"));
  EXPECT_EQ(xi(Q("1/2")), Q("1/4"));
  EXPECT_EQ(zeta(Q("1/2")), Q("3/4"));
  const auto full = extreme_pair(interval("0", "1"));
  EXPECT_EQ(full.xi, mono({{"0", "0"}, {"1/2", "0"}, {"1", "1"}}));
  EXPECT_EQ(full.zeta, mono({{"0", "0"}, {"1/2", "1"}, {"1", "1"}}));
  EXPECT_THROW(extreme_pair(interval("1/2", "1/2")), InputError);
}

TEST(ExtremePair, MatchesFormulasAndBounds) {
  Sampler rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto gap = rng.interval();
    const auto [xi, zeta] = extreme_pair(gap);
    for (const auto& s : oracle::grid(64)) {
      EXPECT_EQ(xi(s), oracle::xi_formula(gap.lo, gap.hi, s));
      EXPECT_EQ(zeta(s), oracle::zeta_formula(gap.lo, gap.hi, s));
      EXPECT_LE(xi(s), s);
      EXPECT_GE(zeta(s), s);
    }
  }
}

TEST(ExtremePairAll, Examples) {
  const auto empty = extreme_pair_all(GapSet{});
  EXPECT_EQ(empty.xi, PLMono::identity());
  EXPECT_EQ(empty.zeta, PLMono::identity());
  const auto one = extreme_pair_all(merge_gaps({interval("1/8", "5/8")}));
  const auto ref = extreme_pair(interval("1/8", "5/8"));
  EXPECT_EQ(one.xi, ref.xi);
  EXPECT_EQ(one.zeta, ref.zeta);
  EXPECT_THROW(extreme_pair_all(merge_gaps({interval("1/4", "1/2"), interval("1/2", "3/4")})), InputError);
}

TEST(ExtremePairAll, AgreesWithEachGapsPair) {
  Sampler rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = rng.clean_gapset(4);
    const auto all = extreme_pair_all(g);
    for (const auto& s : oracle::grid(96)) {
      Rational ex = s, ez = s;
      for (const auto& gap : g.gaps()) {
        if (gap.contains(s)) {
          ex = oracle::xi_formula(gap.lo, gap.hi, s);
          ez = oracle::zeta_formula(gap.lo, gap.hi, s);
        }
      }
      EXPECT_EQ(all.xi(s), ex);
      EXPECT_EQ(all.zeta(s), ez);
    }
    EXPECT_TRUE(equiv_test(all.xi, all.zeta, g));
  }
}

TEST(EquivTest, Examples) {
  const auto i = interval("1/4", "3/4");
  const auto [xi, zeta] = extreme_pair(i);
  EXPECT_TRUE(equiv_test(xi, zeta, merge_gaps({i})));
  EXPECT_TRUE(equiv_test(xi, xi, GapSet{}));
  const auto j = extreme_pair(interval("1/8", "7/8"));
  EXPECT_FALSE(equiv_test(j.xi, j.zeta, merge_gaps({i})));
  EXPECT_TRUE(equiv_test(PLMono::identity(), xi, merge_gaps({i})));
  EXPECT_FALSE(equiv_test(PLMono::identity(), xi, GapSet{}));
}

TEST(EquivTest, AgreesWithGridNecessaryCondition) {
  // If equiv_test holds, every sampled s with f(s) != h(s) has its midpoint
  // in a gap.
  Sampler rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = rng.clean_gapset(3);
    const auto f = rng.mono(3), h = rng.mono(3);
    if (!equiv_test(f, h, g)) continue;
    for (const auto& s : oracle::grid(120)) {
      if (f(s) != h(s)) {
        EXPECT_TRUE(g.covers((f(s) + h(s)) / 2));
      }
    }
  }
}

TEST(EquivTest, EquivalenceRelation) {
  Sampler rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = rng.clean_gapset(3);
    const auto [xi, zeta] = extreme_pair_all(g);
    const auto f = rng.mono(3);
    EXPECT_TRUE(equiv_test(f, f, g));
    EXPECT_EQ(equiv_test(xi, zeta, g), equiv_test(zeta, xi, g));
    // id, ξ and ζ differ only inside gaps, so all three pairs are related.
    const auto& id = PLMono::identity();
    EXPECT_TRUE(equiv_test(xi, id, g));
    EXPECT_TRUE(equiv_test(id, zeta, g));
    EXPECT_TRUE(equiv_test(xi, zeta, g));
  }
}

TEST(CollapseMap, Examples) {
  EXPECT_EQ(collapse_map(GapSet{}), PLMono::identity());
  EXPECT_EQ(collapse_map(merge_gaps({interval("1/4", "3/4")})),
            mono({{"0", "0"}, {"1/4", "1/2"}, {"3/4", "1/2"}, {"1", "1"}}));
  EXPECT_EQ(collapse_map(merge_gaps({interval("0", "1/2")})), mono({{"0", "0"}, {"1/2", "0"}, {"1", "1"}}));
  EXPECT_THROW(collapse_map(merge_gaps({interval("0", "1")})), InputError);
  EXPECT_THROW(collapse_map(merge_gaps({interval("1/4", "1/2"), interval("1/2", "3/4")})), InputError);
}

TEST(CollapseMap, ConstantOnGapsIncreasingOnComplement) {
  Sampler rng(36);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = rng.clean_gapset(4);
    const auto chi = collapse_map(g);
    for (const auto& gap : g.gaps()) EXPECT_EQ(chi(gap.lo), chi(gap.hi));
    const auto v = chi.vertices();
    for (std::size_t k = 1; k < v.size(); ++k) {
      const Rational mid = (v[k - 1].x + v[k].x) / 2;
      EXPECT_EQ(v[k].y > v[k - 1].y, !g.covers(mid));
    }
    // Normalized measure, by direct integration on a grid aligned with 1/32.
    for (const auto& t : oracle::grid(32)) {
      Rational covered = 0;
      for (const auto& gap : g.gaps()) {
        if (t > gap.lo) covered += std::min(t, gap.hi) - gap.lo;
      }
      EXPECT_EQ(chi(t), (t - covered) / g.complement_length());
    }
  }
}

TEST(RhoChi, Examples) {
  const auto i = interval("1/4", "3/4");
  const auto [xi, zeta] = extreme_pair(i);
  const auto chi = collapse_map(merge_gaps({i}));
  EXPECT_EQ(rho_chi(xi, zeta, chi), 0);
  EXPECT_EQ(rho_chi(xi, xi, chi), 0);
  EXPECT_EQ(rho_chi(PLMono::identity(), xi, chi), 0);
  EXPECT_GT(rho_chi(PLMono::identity(), xi, PLMono::identity()), 0);
}

TEST(RhoChi, CharacterizationOnS2) {
  Sampler rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = rng.clean_gapset(3);
    const auto chi = collapse_map(g);
    const auto p = trial % 3 == 0 ? CanonicalTuple::from(pair_of(extreme_pair_all(g).xi, extreme_pair_all(g).zeta))
                                  : rng.canonical(2);
    EXPECT_EQ(rho_chi(p[0], p[1], chi) == 0, equiv_test(p[0], p[1], g));
  }
}

TEST(Pullback, Examples) {
  const auto i = interval("1/4", "3/4");
  const auto chi = collapse_map(merge_gaps({i}));
  const auto rho = make_rho_chi(chi);
  const auto same = pullback_pseudometric(ids(1), rho);
  Sampler rng(38);
  for (int trial = 0; trial < 50; ++trial) {
    const MonoTuple f({rng.mono(3)}), h({rng.mono(3)});
    EXPECT_EQ(same(f, h), rho(f, h));
  }
  const auto pulled = pullback_pseudometric(MonoTuple({extreme_pair(i).xi}), rho);
  EXPECT_EQ(pulled(ids(1), ids(1)), 0);
  EXPECT_THROW(pulled(ids(2), ids(2)), InputError);
}

TEST(Pullback, PseudometricAxioms) {
  Sampler rng(39);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = rng.clean_gapset(3);
    const auto base = rng.canonical(2).tuple();
    const auto rho = pullback_pseudometric(base, make_rho_chi(collapse_map(g)));
    const MonoTuple a({rng.mono(3)}), b({rng.mono(3)}), c({rng.mono(3)});
    EXPECT_EQ(rho(a, a), 0);
    EXPECT_EQ(rho(a, b), rho(b, a));
    EXPECT_GE(rho(a, b), 0);
    EXPECT_LE(rho(a, c), rho(a, b) + rho(b, c));
  }
}
