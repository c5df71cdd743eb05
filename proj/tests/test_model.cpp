#include "rainbow/clustered_graph.hpp"
#include "rainbow/extremal.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace rainbow;
using rainbow::testing::oracle_density;
using rainbow::testing::random_exact_graph;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

std::vector<Rational> exact_densities(const ExactGraph& g) { return densities(g).density; }

}  // namespace

TEST(Layout, CoordinatesRoundTripThroughIndices) {
  for (int k = 1; k <= 9; ++k) {
    for (std::size_t idx = 0; idx < coordinate_count(k); ++idx) EXPECT_EQ(index_of(k, coordinate_at(k, idx)), idx);
    // pairs come first, lexicographically
    std::size_t expected = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) EXPECT_EQ(pair_index(k, i, j), expected++);
    EXPECT_EQ(pair_index(k, 0, 0) + 0, pair_index(k, 0, 0));
  }
  EXPECT_EQ(coordinate_count(4), 6u + 4u + 1u);
}

TEST(Validate, AcceptsSimpleConstructions) {
  ExactGraph two(2);
  two.set_pair(0, 1, q(1));
  EXPECT_FALSE(validate(two).has_value());

  ExactGraph one(1);
  one.set_single(0, q(1));
  EXPECT_FALSE(validate(one).has_value());
}

TEST(Validate, ReportsEmptyWeights) {
  ExactGraph empty(3);
  auto v = validate(empty);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, "sum = 0 != 1");
}

TEST(Validate, ReportsNegativeWeightFirst) {
  ExactGraph g(2);
  g.set_single(0, q(-1, 2)).set_pair(0, 1, q(3, 2));
  auto v = validate(g);
  ASSERT_TRUE(v.has_value());
  EXPECT_NE(v->find("single(1)"), std::string::npos);
  EXPECT_NE(v->find("negative"), std::string::npos);
}

TEST(Validate, FloatToleranceIsOneEMinus12) {
  FloatGraph g(2);
  g.set_pair(0, 1, 1.0 + 5e-13);
  EXPECT_FALSE(validate(g).has_value());
  g.set_pair(0, 1, 1.0 + 5e-12);
  EXPECT_TRUE(validate(g).has_value());
}

TEST(Validate, PairWeightIsSymmetricAndHasNoDiagonal) {
  ExactGraph g(3);
  g.set_pair(2, 0, q(1));
  EXPECT_EQ(g.pair_weight(0, 2), q(1));
  EXPECT_THROW(g.set_pair(1, 1, q(1)), std::invalid_argument);
}

TEST(Densities, StarForFiveColors) {
  ExactGraph g(5);
  for (int i = 0; i < 5; ++i) g.set_single(i, q(1, 9));
  g.set_hub(q(4, 9));
  for (const auto& d : exact_densities(g)) EXPECT_EQ(d, q(1, 9));
}

TEST(Densities, SinglePairForTwoColors) {
  ExactGraph g(2);
  g.set_pair(0, 1, q(1));
  EXPECT_EQ(exact_densities(g), (std::vector<Rational>{q(1), q(1)}));
}

TEST(Densities, TwoPairsSharingColorOne) {
  ExactGraph g(3);
  g.set_pair(0, 1, q(1, 2)).set_pair(0, 2, q(1, 2));
  auto dq = densities(g);
  EXPECT_EQ(dq.density, (std::vector<Rational>{q(1, 2), q(1, 4), q(1, 4)}));
  EXPECT_EQ(dq.pair_total, (std::vector<Rational>{q(1), q(1, 2), q(1, 2)}));
  EXPECT_EQ(dq.cover, (std::vector<Rational>{q(1), q(1, 2), q(1, 2)}));
  EXPECT_EQ(dq.min_cover, q(1, 2));
  ASSERT_TRUE(dq.min_positive_pair.has_value());
  EXPECT_EQ(*dq.min_positive_pair, q(1, 2));
}

TEST(Densities, MinPositivePairUndefinedWithoutPairs) {
  auto dq = densities(extremal(7, Family::Star));
  EXPECT_FALSE(dq.min_positive_pair.has_value());
}

TEST(Densities, RejectsInvalidInput) {
  EXPECT_THROW(densities(ExactGraph(3)), std::invalid_argument);
}

TEST(Densities, AgreesWithAdjacencyOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + trial % 8;
    ExactGraph g = random_exact_graph(k, rng);
    auto dq = densities(g);
    for (int i = 0; i < k; ++i) {
      EXPECT_EQ(dq.density[i], oracle_density(g, i));
      EXPECT_GE(dq.density[i], 0);
      EXPECT_LE(dq.density[i], 1);
      EXPECT_LE(dq.cover[i], 1);
    }
  }
}

TEST(Densities, ColorPermutationEquivariance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + trial % 7;
    ExactGraph g = random_exact_graph(k, rng);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto before = exact_densities(g);
    const auto after = exact_densities(permute_colors<Rational>(g, perm));
    for (int i = 0; i < k; ++i) EXPECT_EQ(after[perm[i]], before[i]);
  }
}

TEST(Densities, FormIsHomogeneousOfDegreeTwo) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + trial % 8;
    ExactGraph g = random_exact_graph(k, rng);
    const Rational lambda = q(static_cast<long>(rng() % 17) + 1, static_cast<long>(rng() % 5) + 2);
    std::vector<Rational> scaled(g.weights().begin(), g.weights().end());
    for (auto& w : scaled) w *= lambda;
    for (int i = 0; i < k; ++i)
      EXPECT_EQ(density_form<Rational>(k, scaled, i), lambda * lambda * density_form<Rational>(k, g.weights(), i));
  }
}

TEST(Threshold, PaperValues) {
  EXPECT_EQ(rainbow_threshold(1), q(1));
  EXPECT_EQ(rainbow_threshold(2), q(1));
  EXPECT_EQ(rainbow_threshold(3), q(1, 4));
  EXPECT_EQ(rainbow_threshold(4), q(1, 4));
  EXPECT_EQ(rainbow_threshold(5), q(1, 9));
  EXPECT_EQ(rainbow_threshold(6), q(1, 9));
  EXPECT_EQ(rainbow_threshold(7), q(1, 13));
  EXPECT_EQ(rainbow_threshold(8), q(1, 15));
  // both branches agree at k = 5
  EXPECT_EQ(q(1, 9), q(1, 2 * 5 - 1));
  EXPECT_THROW(rainbow_threshold(0), std::domain_error);
}

TEST(Extremal, PairsForFiveColors) {
  ExactGraph g = extremal(5, Family::Pairs);
  EXPECT_EQ(g.pair_weight(0, 1), q(1, 3));
  EXPECT_EQ(g.pair_weight(2, 3), q(1, 3));
  EXPECT_EQ(g.pair_weight(0, 4), q(1, 3));
  EXPECT_EQ(min_density(g), q(1, 9));
}

TEST(Extremal, StarForSevenColors) {
  ExactGraph g = extremal(7, Family::Star);
  for (int i = 0; i < 7; ++i) EXPECT_EQ(g.single_weight(i), q(1, 13));
  EXPECT_EQ(g.hub_weight(), q(6, 13));
  EXPECT_EQ(min_density(g), q(1, 13));
}

TEST(Extremal, MixedForThreeColors) {
  ExactGraph g = extremal(3, ConstructionFamily{Family::Mixed, q(1, 4)});
  EXPECT_EQ(g.pair_weight(0, 1), q(1, 2));
  EXPECT_EQ(g.pair_weight(0, 2), q(1, 4));
  EXPECT_EQ(g.single_weight(2), q(1, 4));
  // color 1 sees b12^2 + b13^2 = 1/4 + 1/16; color 3 sees (a3 + b13)^2.
  std::vector<Rational> expected{oracle_density(g, 0), oracle_density(g, 1), oracle_density(g, 2)};
  EXPECT_EQ(expected, (std::vector<Rational>{q(5, 16), q(1, 4), q(1, 4)}));
  EXPECT_EQ(exact_densities(g), expected);
  EXPECT_EQ(min_density(g), q(1, 4));
}

TEST(Extremal, MixedDefaultsToHalfBlock) {
  ExactGraph g = extremal(5, Family::Mixed);
  EXPECT_EQ(g.single_weight(4), q(1, 6));
  EXPECT_EQ(g.pair_weight(0, 4), q(1, 6));
}

TEST(Extremal, UnsupportedCombinationsThrow) {
  EXPECT_THROW(extremal(3, Family::Star), std::domain_error);
  EXPECT_THROW(extremal(7, Family::Pairs), std::domain_error);
  EXPECT_THROW(extremal(4, Family::Mixed), std::domain_error);
  EXPECT_THROW(extremal(3, ConstructionFamily{Family::Mixed, q(3, 4)}), std::domain_error);
  EXPECT_THROW(extremal(0, Family::Pairs), std::domain_error);
}

TEST(Extremal, EveryConstructionAttainsTheThresholdExactly) {
  for (int k = 1; k <= 12; ++k) {
    for (Family f : families_for(k)) {
      if (f == Family::Mixed) {
        const Rational block = pairing_block(k);
        for (int s = 0; s <= 10; ++s) {
          ExactGraph g = extremal(k, ConstructionFamily{f, Rational(block * q(s, 10))});
          ASSERT_FALSE(validate(g).has_value());
          EXPECT_EQ(min_density(g), rainbow_threshold(k)) << "k=" << k << " s=" << s;
        }
      } else {
        ExactGraph g = extremal(k, f);
        ASSERT_FALSE(validate(g).has_value());
        EXPECT_EQ(min_density(g), rainbow_threshold(k)) << "k=" << k << " " << family_name(f);
      }
    }
  }
}

TEST(Lattice, RationalizedSamplesSumExactly) {
  Rng rng = make_rng(3);
  for (int k = 1; k <= 10; ++k) {
    FloatGraph g = sample_dirichlet(k, rng);
    ExactGraph r = rationalize(g, 1 << 20);
    EXPECT_FALSE(validate(r).has_value());
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(r[i].get_d(), g[i], 1.0 / (1 << 20));
  }
}

// Uniform simplex sampling snapped to a 2^24 lattice; the density form is
// evaluated on the integer numerators, so the comparison with the threshold
// is exact: D^2 d_i > D^2 / q  <=>  q * form_i > D^2  with threshold 1/q.
TEST(ThresholdProperty, NoSampledGraphBeatsTheThreshold) {
  constexpr std::int64_t D = std::int64_t{1} << 24;
  for (int k = 3; k <= 12; ++k) {
    Rng rng = make_rng(2024, static_cast<std::uint64_t>(k));
    const Rational f = rainbow_threshold(k);
    ASSERT_EQ(f.get_num(), 1);
    const std::int64_t inv = f.get_den().get_si();
    for (int s = 0; s < 100000; ++s) {
      const auto num = lattice_numerators(sample_dirichlet(k, rng), D);
      std::int64_t lowest = std::numeric_limits<std::int64_t>::max();
      for (int i = 0; i < k; ++i) lowest = std::min(lowest, density_form<std::int64_t>(k, num, i));
      ASSERT_LE(lowest * inv, D * D) << "k=" << k << " sample " << s;
    }
  }
}
