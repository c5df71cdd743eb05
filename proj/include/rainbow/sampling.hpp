#pragma once

// Random points on the clustered-graph simplex.

#include "rainbow/clustered_graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace rainbow {

using Rng = std::mt19937_64;

/// Independent stream for (seed, stream index).
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), 0x5eedu};
  return Rng(seq);
}

/// Dirichlet(alpha, ..., alpha) over all coordinates.
inline FloatGraph sample_dirichlet(int k, Rng& rng, double alpha = 1.0) {
  std::gamma_distribution<double> gamma(alpha, 1.0);
  std::vector<double> w(coordinate_count(k));
  double sum = 0.0;
  do {
    sum = 0.0;
    for (double& v : w) {
      v = gamma(rng);
      sum += v;
    }
  } while (!(sum > 0.0));
  for (double& v : w) v /= sum;
  return FloatGraph(k, std::move(w));
}

/// (1 - lambda) * center + lambda * noise, coordinatewise.
inline FloatGraph mix(const FloatGraph& center, const FloatGraph& noise, double lambda) {
  std::vector<double> w(center.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = (1.0 - lambda) * center[i] + lambda * noise[i];
  return FloatGraph(center.k(), std::move(w));
}

/// Sample concentrated near `center`: mixing weight log-uniform in
/// [10^-min_exp, 10^-max_exp] toward a Dirichlet point whose support may
/// be restricted to a random subset of coordinates.
inline FloatGraph sample_near(const FloatGraph& center, Rng& rng, double min_exp = 4.0, double max_exp = 1.0) {
  std::uniform_real_distribution<double> expo(max_exp, min_exp);
  const double lambda = std::pow(10.0, -expo(rng));
  FloatGraph noise = sample_dirichlet(center.k(), rng);
  if (std::bernoulli_distribution(0.5)(rng)) {
    // Sparse noise: keep a few random coordinates only.
    std::vector<double> w(noise.weights().begin(), noise.weights().end());
    std::bernoulli_distribution keep(std::min(1.0, 3.0 / static_cast<double>(w.size())));
    double sum = 0.0;
    for (double& v : w) {
      if (!keep(rng)) v = 0.0;
      sum += v;
    }
    if (sum > 0.0) {
      for (double& v : w) v /= sum;
      noise = FloatGraph(center.k(), std::move(w));
    }
  }
  return mix(center, noise, lambda);
}

}  // namespace rainbow
