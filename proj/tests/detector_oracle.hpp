#pragma once

// Exhaustive rainbow-witness oracle for tiny systems. Shares nothing with the
// detector beyond the edge storage.

#include "rainbow/realization/colored_system.hpp"

#include <optional>
#include <random>
#include <vector>

namespace rainbow::testing {

using real::ColoredGraphSystem;
using real::RainbowWitness;
using real::WitnessKind;

// Enumerates every vertex sequence in lexicographic order and every color
// tuple in lexicographic order; returns the first rainbow witness.
inline std::optional<RainbowWitness> brute_force(const ColoredGraphSystem& s, int len, WitnessKind kind, bool nb = false) {
  const int n = s.n(), k = s.k();
  std::vector<int> seq(static_cast<std::size_t>(len) + 1, 1), col(static_cast<std::size_t>(len), 1);
  auto next = [](std::vector<int>& v, int hi) {
    for (std::size_t t = v.size(); t-- > 0;) {
      if (v[t] < hi) {
        ++v[t];
        return true;
      }
      v[t] = 1;
    }
    return false;
  };
  if (n == 0) return std::nullopt;
  do {
    bool shape = true;
    for (int t = 0; t < len && shape; ++t) shape = seq[t] != seq[t + 1];
    if (kind == WitnessKind::Path)
      for (int a = 0; a <= len && shape; ++a)
        for (int b = a + 1; b <= len && shape; ++b) shape = seq[a] != seq[b];
    if (kind == WitnessKind::Walk && nb)
      for (int t = 2; t <= len && shape; ++t) shape = seq[t] != seq[t - 2];
    if (!shape) continue;
    std::fill(col.begin(), col.end(), 1);
    do {
      bool ok = true;
      for (int t = 0; t < len && ok; ++t) {
        ok = s.has_edge(col[t], seq[t], seq[t + 1]);
        for (int r = 0; r < t && ok; ++r) ok = col[r] != col[t];
      }
      if (ok) return RainbowWitness{kind, seq, col};
    } while (next(col, k));
  } while (next(seq, n));
  return std::nullopt;
}

inline ColoredGraphSystem random_system(std::mt19937_64& rng, int n, int k, double p) {
  ColoredGraphSystem s(n, k);
  std::bernoulli_distribution coin(p);
  for (int c = 1; c <= k; ++c)
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (coin(rng)) s.add_edge(c, u, v);
  return s;
}

}  // namespace rainbow::testing
