#pragma once

// Adds random edges to the sparsest color of an extremal blow-up until a
// rainbow witness with 3 edges appears.

#include "rainbow/extremal.hpp"
#include "rainbow/realization/blow_up.hpp"
#include "rainbow/realization/rainbow_search.hpp"
#include "rainbow/sampling.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace rainbow::real {

struct SaturationReport {
  int k = 0;
  int n = 0;
  std::uint64_t seed = 0;
  WitnessKind kind = WitnessKind::Path;
  long long added = 0;
  std::vector<long long> initial_counts;
  std::vector<long long> final_counts;
  std::vector<double> final_densities;  // 2 count / n^2
  std::optional<RainbowWitness> witness;
};

inline SaturationReport saturation_experiment(int k, int n, std::uint64_t seed, WitnessKind kind = WitnessKind::Path,
                                              int workers = 1) {
  if (k < 3) throw std::invalid_argument("saturation needs k >= 3: no rainbow 3-edge witness exists with fewer colors");
  if (n < 20) throw std::invalid_argument("saturation needs n >= 20");
  if (k > max_colors) throw std::invalid_argument("saturation supports at most 64 colors");
  ColoredGraphSystem s = blow_up(extremal(k, default_family(k)), n);
  SearchOptions opt;
  opt.kind = kind;
  opt.workers = workers;

  SaturationReport rep;
  rep.k = k;
  rep.n = n;
  rep.seed = seed;
  rep.kind = kind;
  rep.initial_counts = s.edge_counts();
  rep.witness = find_rainbow(s, opt);

  Rng rng = make_rng(seed, 0);
  std::uniform_int_distribution<int> vertex(1, n);
  const long long full = static_cast<long long>(n) * (n - 1) / 2;
  while (!rep.witness) {
    const auto& counts = s.edge_counts();
    const int c = static_cast<int>(std::min_element(counts.begin(), counts.end()) - counts.begin()) + 1;
    if (counts[c - 1] == full) break;  // every color complete
    int u, v;
    do {
      u = vertex(rng);
      v = vertex(rng);
    } while (u == v || s.has_edge(c, u, v));
    s.add_edge(c, u, v);
    ++rep.added;
    rep.witness = find_rainbow_through(s, c, u, v, opt);
  }
  rep.final_counts = s.edge_counts();
  for (long long cnt : rep.final_counts) rep.final_densities.push_back(2.0 * static_cast<double>(cnt) / (static_cast<double>(n) * n));
  return rep;
}

}  // namespace rainbow::real
