#include "rainbow/optimizer/maximize.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace rainbow;
using namespace rainbow::opt;

namespace {

// d_i = a_i^2 + sum_j b_ij^2 + 2 a_i sum_j b_ij + 2 a_i x, written out directly.
double direct_density(const FloatGraph& g, int i) {
  const double a = g.single_weight(i), x = g.hub_weight();
  double sq = 0, sum = 0;
  for (int j = 0; j < g.k(); ++j)
    if (j != i) {
      sq += g.pair_weight(i, j) * g.pair_weight(i, j);
      sum += g.pair_weight(i, j);
    }
  return a * a + sq + 2 * a * sum + 2 * a * x;
}

double direct_min(const FloatGraph& g) {
  double m = direct_density(g, 0);
  for (int i = 1; i < g.k(); ++i) m = std::min(m, direct_density(g, i));
  return m;
}

FloatGraph shifted(const FloatGraph& g, std::size_t from, std::size_t to, double s) {
  std::vector<double> w(g.weights().begin(), g.weights().end());
  w[from] -= s;
  w[to] += s;
  return FloatGraph(g.k(), std::move(w));
}

OptimizerConfig quick(int restarts, std::uint64_t seed = 7) {
  OptimizerConfig c;
  c.restarts = restarts;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(LineSearch, PairToSingleAtEqualPairsStaysPut) {
  FloatGraph g(3);
  g.set_pair(0, 1, 0.5).set_pair(0, 2, 0.5);
  const auto r = line_search_transfer(g, Coordinate::pair(0, 1), Coordinate::single(0));
  EXPECT_EQ(r.step, 0.0);
  EXPECT_DOUBLE_EQ(r.value, direct_min(g));
}

TEST(LineSearch, IdenticalEndpointsGiveZeroStep) {
  FloatGraph g(3);
  g.set_single(0, 0.2).set_single(1, 0.3).set_hub(0.5);
  const auto r = line_search_transfer(g, Coordinate::single(1), Coordinate::single(1));
  EXPECT_EQ(r.step, 0.0);
  EXPECT_DOUBLE_EQ(r.value, direct_min(g));
}

TEST(LineSearch, FullTransferIntoSharedPair) {
  FloatGraph g(2);
  g.set_single(0, 1.0);
  const auto r = line_search_transfer(g, Coordinate::single(0), Coordinate::pair(0, 1));
  EXPECT_DOUBLE_EQ(r.step, 1.0);
  EXPECT_DOUBLE_EQ(r.value, 1.0);
}

TEST(LineSearch, EmptySourceRejected) {
  FloatGraph g(2);
  g.set_single(0, 1.0);
  EXPECT_THROW(line_search_transfer(g, Coordinate::hub(), Coordinate::single(1)), std::invalid_argument);
}

TEST(LineSearch, BeatsSampledStepsOnRandomTransfers) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 1000) {
    const int k = std::uniform_int_distribution<int>(2, 8)(rng);
    Rng r = make_rng(rng(), 0);
    const FloatGraph g = sample_dirichlet(k, r);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    const std::size_t from = pick(rng), to = pick(rng);
    if (!(g[from] > 0)) continue;
    ++checked;
    const auto res = line_search_transfer(g, coordinate_at(k, from), coordinate_at(k, to));
    ASSERT_GE(res.step, 0.0);
    ASSERT_LE(res.step, g[from]);
    EXPECT_NEAR(res.value, direct_min(shifted(g, from, to, res.step)), 1e-12);
    for (int s = 0; s <= 100; ++s) {
      const double step = g[from] * s / 100.0;
      ASSERT_GE(res.value, direct_min(shifted(g, from, to, step)) - 1e-12)
          << "k=" << k << " from=" << from << " to=" << to << " step=" << step;
    }
  }
}

TEST(Envelope, TieGoesToSmallestStep) {
  Quadratics q{{0.5}, {0.0}, {0.0}};
  EXPECT_EQ(maximize_envelope(q, 1.0).step, 0.0);
}

TEST(Envelope, FindsCrossingOfLines) {
  // min(s, 1 - s) peaks at 1/2
  Quadratics q{{0.0, 1.0}, {1.0, -1.0}, {0.0, 0.0}};
  const auto r = maximize_envelope(q, 1.0);
  EXPECT_NEAR(r.step, 0.5, 1e-15);
  EXPECT_NEAR(r.value, 0.5, 1e-15);
}

TEST(Envelope, FindsConcaveVertex) {
  Quadratics q{{0.0}, {2.0}, {-1.0}};
  const auto r = maximize_envelope(q, 3.0);
  EXPECT_NEAR(r.step, 1.0, 1e-15);
  EXPECT_NEAR(r.value, 1.0, 1e-15);
}

TEST(Gradients, MatchCentralDifferences) {
  Rng r = make_rng(5, 0);
  for (int k = 2; k <= 6; ++k) {
    const FloatGraph g = sample_dirichlet(k, r);
    const auto grad = density_gradients(g);
    const double h = 1e-6;
    for (std::size_t c = 0; c < g.size(); ++c) {
      std::vector<double> up(g.weights().begin(), g.weights().end()), dn = up;
      up[c] += h;
      dn[c] -= h;
      for (int i = 0; i < k; ++i) {
        const double fd =
            (direct_density(FloatGraph(k, up), i) - direct_density(FloatGraph(k, dn), i)) / (2 * h);
        EXPECT_NEAR(grad[static_cast<std::size_t>(i) * g.size() + c], fd, 1e-7);
      }
    }
  }
}

TEST(SimplexProjection, LandsOnSimplexAndFixesFeasiblePoints) {
  std::vector<double> v{0.3, -0.2, 1.4, 0.1};
  const auto p = project_to_simplex(v);
  double sum = 0;
  for (double x : p) {
    EXPECT_GE(x, 0.0);
    sum += x;
  }
  EXPECT_NEAR(sum, 1.0, 1e-15);
  std::vector<double> feasible{0.25, 0.25, 0.5};
  const auto same = project_to_simplex(feasible);
  for (std::size_t i = 0; i < feasible.size(); ++i) EXPECT_NEAR(same[i], feasible[i], 1e-15);
}

TEST(OptimizerConfig, RejectsBadSettings) {
  auto bad = [](auto mutate) {
    OptimizerConfig c;
    mutate(c);
    return c;
  };
  EXPECT_THROW(bad([](auto& c) { c.restarts = 0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](auto& c) { c.value_tolerance = 0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](auto& c) { c.step_tolerance = -1; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](auto& c) { c.temperature = 0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](auto& c) { c.temperature_decay = 1.0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](auto& c) { c.workers = 0; }).validate(), std::invalid_argument);
  EXPECT_THROW(maximize_min_density(3, bad([](auto& c) { c.restarts = -2; })), std::invalid_argument);
}

TEST(Optimizer, SingleColorReachesOne) {
  const auto res = maximize_min_density(1, quick(3));
  EXPECT_NEAR(res.best_value, 1.0, 1e-12);
}

TEST(Optimizer, ThreeColorsReachThreshold) {
  const auto res = maximize_min_density(3, quick(20));
  EXPECT_GE(res.best_value, 0.25 - 1e-4);
  EXPECT_LE(res.best_value, 0.25 + 1e-9);
}

TEST(Optimizer, TraceIsMonotoneAndIteratesFeasible) {
  for (int k : {3, 4, 5}) {
    OptimizerConfig cfg = quick(6, 11);
    const auto res = maximize_min_density(k, cfg);
    for (int r = 0; r < cfg.restarts; ++r) {
      const FloatGraph start = restart_start(k, r, cfg);
      double sum = 0;
      for (double w : start.weights()) {
        EXPECT_GE(w, 0.0);
        sum += w;
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
    for (std::size_t t = 1; t < res.trace.size(); ++t) {
      if (res.trace[t].restart != res.trace[t - 1].restart) continue;
      EXPECT_GT(res.trace[t].min_density, res.trace[t - 1].min_density);
      EXPECT_EQ(res.trace[t].iteration, res.trace[t - 1].iteration + 1);
    }
    double sum = 0;
    for (double w : res.best.weights()) {
      EXPECT_GE(w, 0.0);
      sum += w;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_NEAR(res.best_value, direct_min(res.best), 1e-15);
  }
}

TEST(Optimizer, EveryIterateStaysOnSimplex) {
  // re-run one restart step by step through the public per-restart entry
  OptimizerConfig cfg = quick(1, 3);
  for (int cap = 1; cap <= 12; ++cap) {
    cfg.max_iterations = cap;
    const auto out = run_restart(4, 1, cfg);
    double sum = 0;
    for (double w : out.graph.weights()) {
      ASSERT_GE(w, 0.0);
      sum += w;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(Optimizer, DeterministicForFixedSeed) {
  const auto a = maximize_min_density(4, quick(8, 99));
  const auto b = maximize_min_density(4, quick(8, 99));
  ASSERT_EQ(a.best.size(), b.best.size());
  for (std::size_t c = 0; c < a.best.size(); ++c) EXPECT_EQ(a.best[c], b.best[c]);
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.restart_values, b.restart_values);
}

TEST(Optimizer, WorkerCountDoesNotChangeBest) {
  OptimizerConfig one = quick(10, 5), many = one;
  many.workers = 4;
  const auto a = maximize_min_density(5, one);
  const auto b = maximize_min_density(5, many);
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.best_restart, b.best_restart);
  EXPECT_EQ(a.restart_values, b.restart_values);
}

TEST(Optimizer, NeverExceedsThreshold) {
  for (int k = 2; k <= 6; ++k) {
    const auto res = maximize_min_density(k, quick(8, 17));
    EXPECT_LE(res.best_value, rainbow_threshold(k).get_d() + 1e-9) << "k=" << k;
  }
}

TEST(Optimizer, TraceCsvHasHeaderAndRows) {
  const auto res = maximize_min_density(3, quick(2));
  std::ostringstream os;
  write_trace_csv(os, res.trace);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "restart,iteration,min_density,move_kind");
  std::size_t rows = 0;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, res.trace.size());
}
