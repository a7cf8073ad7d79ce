#include <gtest/gtest.h>

#include <algorithm>

#include "roelcke/gaps.hpp"
#include "roelcke/sampling.hpp"
#include "roelcke/typespace.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace roelcke;
using roelcke::testing::ids;
using roelcke::testing::interval;
using roelcke::testing::mono;
using roelcke::testing::pair_of;
using roelcke::testing::Q;

TEST(WeightVector, Validation) {
  EXPECT_TRUE(WeightVector::uniform(3).is_uniform());
  EXPECT_EQ(WeightVector::uniform(4)[2], Q("1/4"));
  EXPECT_NO_THROW(WeightVector::from({Q("1/2"), Q("1/4"), Q("1/4")}));
  EXPECT_FALSE(WeightVector::from({Q("1/2"), Q("1/4"), Q("1/4")}).is_uniform());
  EXPECT_THROW(WeightVector::from({}), InputError);
  EXPECT_THROW(WeightVector::from({Q("1/2"), Q("1/3")}), InputError);
  EXPECT_THROW(WeightVector::from({Q("3/2"), Q("-1/2")}), InputError);
  EXPECT_THROW(WeightVector::from({Q("1"), Q("0")}), InputError);
  EXPECT_THROW(WeightVector::uniform(0), InputError);
}

TEST(MonoTuple, RejectsEmpty) { EXPECT_THROW(MonoTuple({}), InputError); }

TEST(Mean, Examples) {
  EXPECT_EQ(mean(ids(2), WeightVector::uniform(2)), PLMono::identity());
  const auto xi = mono({{"0", "0"}, {"1/2", "1/4"}, {"1", "1"}});
  EXPECT_EQ(mean(MonoTuple({xi}), WeightVector::uniform(1)), xi);
  EXPECT_THROW(mean(ids(2), WeightVector::uniform(3)), InputError);
}

TEST(Mean, ExtremePairsAverageToIdentity) {
  Sampler rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto gap = rng.interval();
    const auto [xi, zeta] = extreme_pair(gap);
    EXPECT_EQ(mean(pair_of(xi, zeta), WeightVector::uniform(2)), PLMono::identity());
  }
}

TEST(Mean, MatchesPointwiseWeightedSum) {
  Sampler rng(22);
  const auto w = WeightVector::from({Q("1/2"), Q("1/3"), Q("1/6")});
  for (int trial = 0; trial < 50; ++trial) {
    MonoTuple t({rng.mono(3), rng.mono(3), rng.mono(3)});
    const auto m = mean(t, w);
    for (const auto& s : oracle::grid(60)) {
      Rational expected = 0;
      for (std::size_t i = 0; i < 3; ++i) expected += w[i] * oracle::eval(oracle::points_of(t[i]), s);
      EXPECT_EQ(m(s), expected);
    }
  }
}

TEST(CanonicalTuple, RejectsNonCanonical) {
  const auto xi = mono({{"0", "0"}, {"1/2", "1/4"}, {"1", "1"}});
  EXPECT_THROW(CanonicalTuple::from(pair_of(xi, PLMono::identity())), InputError);
  EXPECT_NO_THROW(CanonicalTuple::from(ids(3)));
}

TEST(Canonicalize, AlreadyCanonicalIsFixed) {
  const auto [xi, zeta] = extreme_pair(interval("1/4", "3/4"));
  const auto r = canonicalize(pair_of(xi, zeta));
  EXPECT_EQ(r.canonical.tuple(), pair_of(xi, zeta));
  EXPECT_EQ(r.mean, PLMono::identity());
}

TEST(Canonicalize, SingleComponentCollapsesToIdentity) {
  Sampler rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = rng.mono(4);
    const auto r = canonicalize(MonoTuple({f}));
    EXPECT_EQ(r.canonical.tuple(), ids(1));
    EXPECT_EQ(r.mean, f);
  }
}

TEST(Canonicalize, ReconstructionAndSlopeBound) {
  Sampler rng(24);
  for (std::size_t n : {1u, 2u, 3u, 5u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto t = rng.tuple(n);
      const auto r = canonicalize(t);
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(compose(r.canonical[i], r.mean), t[i]);
        EXPECT_LE(lipschitz_constant(r.canonical, i), static_cast<long>(n));
      }
    }
  }
}

TEST(Canonicalize, WeightedReconstructionAndSlopeBound) {
  Sampler rng(25);
  const auto w = WeightVector::from({Q("1/2"), Q("1/4"), Q("1/8"), Q("1/8")});
  for (int trial = 0; trial < 50; ++trial) {
    MonoTuple t({rng.mono(3), rng.mono(3), rng.mono(3), rng.mono(3)});
    const auto r = canonicalize(t, w);
    EXPECT_EQ(mean(r.canonical.tuple(), w), PLMono::identity());
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_EQ(compose(r.canonical[i], r.mean), t[i]);
      EXPECT_LE(lipschitz_constant(r.canonical, i) * w[i], 1);
    }
  }
}

TEST(Canonicalize, Idempotent) {
  Sampler rng(26);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = canonicalize(rng.tuple(3)).canonical;
    const auto again = canonicalize(c.tuple());
    EXPECT_EQ(again.canonical, c);
    EXPECT_EQ(again.mean, PLMono::identity());
  }
}

TEST(Canonicalize, ReparameterizationInvariance) {
  Sampler rng(27);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = rng.tuple(3);
    const auto g = rng.homeo();
    const auto base = canonicalize(t);
    const auto moved = canonicalize(reparameterize(t, g.mono()));
    EXPECT_EQ(moved.canonical, base.canonical);
    EXPECT_EQ(moved.mean, compose(base.mean, g.mono()));
  }
}

TEST(Canonicalize, PermutationEquivariance) {
  Sampler rng(28);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = rng.tuple(3);
    const auto c = canonicalize(t).canonical;
    const MonoTuple rotated({t[2], t[0], t[1]});
    EXPECT_EQ(canonicalize(rotated).canonical.tuple(), MonoTuple({c[2], c[0], c[1]}));
  }
}

TEST(Lipschitz, Examples) {
  EXPECT_EQ(lipschitz_constant(CanonicalTuple::from(ids(3)), 1), 1);
  const auto [xi, zeta] = extreme_pair(interval("1/4", "3/4"));
  const auto c = CanonicalTuple::from(pair_of(xi, zeta));
  EXPECT_EQ(lipschitz_constant(c, 0), 2);
  EXPECT_THROW(lipschitz_constant(c, 2), std::out_of_range);
}

TEST(RoelckeCoord, Examples) {
  EXPECT_EQ(roelcke_coord(CanonicalTuple::from(ids(2))).function(), PiecewiseLinear::constant(0));
  const auto [xi, zeta] = extreme_pair(interval("1/4", "3/4"));
  const auto f = roelcke_coord(CanonicalTuple::from(pair_of(xi, zeta))).function();
  EXPECT_EQ(f.min_value(), Q("-1/4"));
  EXPECT_EQ(f(Q("1/2")), Q("-1/4"));
  EXPECT_EQ(f.max_value(), 0);
  EXPECT_THROW(roelcke_coord(CanonicalTuple::from(ids(3))), InputError);
}

TEST(RoelckeCoord, Validation) {
  EXPECT_THROW(RoelckeCoord(PiecewiseLinear::constant(Q("1/8"))), InputError);
  EXPECT_THROW(RoelckeCoord(PiecewiseLinear::from_vertices({{0, 0}, {Q("1/4"), Q("1/2")}, {1, 0}})), InputError);
  EXPECT_NO_THROW(RoelckeCoord(PiecewiseLinear::from_vertices({{0, 0}, {Q("1/2"), Q("1/2")}, {1, 0}})));
}

TEST(RoelckeCoord, RoundTrip) {
  Sampler rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = rng.canonical(2);
    EXPECT_EQ(from_roelcke(roelcke_coord(c)), c);
  }
}

TEST(EmbedGroup, IdentityAndProperties) {
  EXPECT_EQ(embed_group(PLHomeo::identity()), CanonicalTuple::from(ids(2)));
  Sampler rng(30);
  std::vector<std::pair<PLHomeo, CanonicalTuple>> seen;
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = rng.homeo();
    const auto c = embed_group(g);
    EXPECT_EQ(mean(c.tuple(), WeightVector::uniform(2)), PLMono::identity());
    EXPECT_LE(lipschitz_constant(c, 0), 2);
    EXPECT_LE(lipschitz_constant(c, 1), 2);
    for (const auto& [h, d] : seen) EXPECT_EQ(c == d, g == h);
    seen.emplace_back(g, c);
  }
}
