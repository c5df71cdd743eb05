#pragma once

// Random search for a clustered graph whose every color density exceeds the
// threshold. None should exist, so a hit means a bug somewhere.

#include "rainbow/extremal.hpp"
#include "rainbow/sampling.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rainbow::audit {

struct FalsifyOptions {
  std::size_t uniform_samples = 100000;
  std::size_t centered_samples = 10000;  // mixtures around the extremal constructions
  double tolerance = 1e-12;
};

struct FalsifyResult {
  std::optional<FloatGraph> violation;
  double best_min_density = 0.0;  // largest sampled min density
  std::size_t samples = 0;
};

/// Each call draws from its own stream (seed, k); results are reproducible.
inline FalsifyResult falsify_theorem(int k, std::uint64_t seed, const FalsifyOptions& opt = {}) {
  const double f = rainbow_threshold(k).get_d();
  Rng rng = make_rng(seed, static_cast<std::uint64_t>(k));
  FalsifyResult out;

  auto consider = [&](const FloatGraph& g) {
    ++out.samples;
    double lowest = density_form<double>(k, g.weights(), 0);
    for (int i = 1; i < k; ++i) lowest = std::min(lowest, density_form<double>(k, g.weights(), i));
    if (lowest > out.best_min_density) out.best_min_density = lowest;
    if (lowest > f + opt.tolerance) {
      out.violation = g;
      return true;
    }
    return false;
  };

  for (std::size_t s = 0; s < opt.uniform_samples; ++s)
    if (consider(sample_dirichlet(k, rng))) return out;

  const std::vector<Family> families = families_for(k);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t s = 0; s < opt.centered_samples; ++s) {
    const Family fam = families[s % families.size()];
    ConstructionFamily cf{fam, std::nullopt};
    if (fam == Family::Mixed) {
      // t on a 1/1000 lattice of the admissible range
      const auto step = static_cast<long>(unit(rng) * 1000.0);
      cf.t = Rational(pairing_block(k) * make_rational(step, 1000));
    }
    if (consider(sample_near(to_float(extremal(k, cf)), rng))) return out;
  }
  return out;
}

}  // namespace rainbow::audit
