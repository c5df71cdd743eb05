#pragma once

// Test-only oracles and generators. Nothing here calls into the density or
// increment code paths under test.

#include "rainbow/clustered_graph.hpp"
#include "rainbow/sampling.hpp"

#include <random>
#include <vector>

namespace rainbow::testing {

/// Color-i density straight from the cluster adjacency rules: sum of w_u w_v
/// over ordered cluster pairs (u, v) joined in color i, loops included.
inline Rational oracle_density(const ExactGraph& g, int color) {
  const int k = g.k();
  std::vector<Coordinate> clusters;
  for (std::size_t idx = 0; idx < g.size(); ++idx) clusters.push_back(coordinate_at(k, idx));
  auto joined = [&](const Coordinate& u, const Coordinate& v) {
    auto single_of_color = [&](const Coordinate& c) { return c.kind == CoordKind::Single && c.i == color; };
    if (u == v) return u.touches(color) && u.kind != CoordKind::Hub;
    auto one_way = [&](const Coordinate& s, const Coordinate& o) {
      if (!single_of_color(s)) return false;
      if (o.kind == CoordKind::Hub) return true;
      return o.kind == CoordKind::Pair && o.touches(color);
    };
    return one_way(u, v) || one_way(v, u);
  };
  Rational total(0);
  for (const auto& u : clusters)
    for (const auto& v : clusters)
      if (joined(u, v)) total += g[u] * g[v];
  return total;
}

/// Random exact graph: integer weights in [0, max_weight] (each zeroed with
/// probability `sparsity`), normalized exactly.
inline ExactGraph random_exact_graph(int k, std::mt19937_64& rng, int max_weight = 30, double sparsity = 0.3) {
  std::uniform_int_distribution<int> draw(0, max_weight);
  std::bernoulli_distribution zero(sparsity);
  const std::size_t n = coordinate_count(k);
  std::vector<long> raw(n);
  long sum = 0;
  for (auto& v : raw) {
    v = zero(rng) ? 0 : draw(rng);
    sum += v;
  }
  if (sum == 0) {
    raw[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] = 1;
    sum = 1;
  }
  std::vector<Rational> w;
  for (long v : raw) w.push_back(make_rational(v, sum));
  return ExactGraph(k, std::move(w));
}

/// Same, but with every single weight strictly positive.
inline ExactGraph random_exact_graph_positive_singles(int k, std::mt19937_64& rng) {
  ExactGraph g = random_exact_graph(k, rng);
  std::vector<Rational> w(g.weights().begin(), g.weights().end());
  for (int i = 0; i < k; ++i) w[single_index(k, i)] += make_rational(1, 7);
  Rational sum(0);
  for (const auto& v : w) sum += v;
  for (auto& v : w) v /= sum;
  return ExactGraph(k, std::move(w));
}

}  // namespace rainbow::testing
