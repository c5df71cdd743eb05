#pragma once

// Blow-up of a clustered graph into an n-vertex colored system. Clusters
// receive consecutive vertex blocks in coordinate order.

#include "rainbow/clustered_graph.hpp"
#include "rainbow/realization/colored_system.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rainbow::real {

struct Apportionment {
  std::vector<int> sizes;  // per coordinate
  std::vector<int> first;  // first 1-based vertex of each cluster
};

namespace detail {

inline void require_room(std::size_t positive, int n) {
  if (n < 0 || static_cast<std::size_t>(n) < positive)
    throw std::invalid_argument("cannot apportion " + std::to_string(n) + " vertices over " + std::to_string(positive) +
                                " positive clusters");
}

inline Apportionment with_offsets(std::vector<int> sizes) {
  Apportionment a{std::move(sizes), {}};
  int next = 1;
  for (int s : a.sizes) {
    a.first.push_back(next);
    next += s;
  }
  return a;
}

}  // namespace detail

/// Exact largest-remainder rounding of w * n; ties go to the earlier cluster.
inline Apportionment apportion(const ExactGraph& g, int n) {
  std::size_t positive = 0;
  Rational total(0);
  for (const auto& w : g.weights()) {
    if (sgn(w) < 0) throw std::invalid_argument("negative cluster weight");
    if (sgn(w) > 0) ++positive;
    total += w;
  }
  detail::require_room(positive, n);
  std::vector<int> sizes(g.size());
  std::vector<std::pair<Rational, std::size_t>> rem;
  long assigned = 0;
  for (std::size_t c = 0; c < g.size(); ++c) {
    const Rational quota = g[c] * n / total;
    const mpz_class fl = quota.get_num() / quota.get_den();  // floor for nonnegative quotas
    sizes[c] = static_cast<int>(fl.get_si());
    assigned += sizes[c];
    rem.emplace_back(Rational(quota - Rational(fl)), c);
  }
  std::stable_sort(rem.begin(), rem.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
  for (std::size_t t = 0; assigned < n && t < rem.size(); ++t, ++assigned) ++sizes[rem[t].second];
  return detail::with_offsets(std::move(sizes));
}

inline Apportionment apportion(const FloatGraph& g, int n) {
  std::size_t positive = 0;
  for (double w : g.weights()) {
    if (w < 0) throw std::invalid_argument("negative cluster weight");
    if (w > 0) ++positive;
  }
  detail::require_room(positive, n);
  std::vector<int> sizes;
  for (auto s : largest_remainder(g.weights(), n)) sizes.push_back(static_cast<int>(s));
  return detail::with_offsets(std::move(sizes));
}

/// Edges of the blow-up for given cluster sizes.
inline ColoredGraphSystem blow_up(int k, const Apportionment& a, int n) {
  if (k > max_colors) throw std::invalid_argument("blow-up supports at most 64 colors");
  ColoredGraphSystem s(n, k);
  auto clique = [&](int color, std::size_t cluster) {
    const int lo = a.first[cluster], hi = lo + a.sizes[cluster];
    for (int u = lo; u < hi; ++u)
      for (int v = u + 1; v < hi; ++v) s.add_edge(color + 1, u, v);
  };
  auto biclique = [&](int color, std::size_t p, std::size_t q) {
    for (int u = a.first[p]; u < a.first[p] + a.sizes[p]; ++u)
      for (int v = a.first[q]; v < a.first[q] + a.sizes[q]; ++v) s.add_edge(color + 1, u, v);
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      clique(i, pair_index(k, i, j));
      clique(j, pair_index(k, i, j));
    }
  for (int i = 0; i < k; ++i) {
    const std::size_t ai = single_index(k, i);
    clique(i, ai);
    biclique(i, ai, hub_index(k));
    for (int j = 0; j < k; ++j)
      if (j != i) biclique(i, ai, pair_index(k, i, j));
  }
  return s;
}

template <class T>
ColoredGraphSystem blow_up(const ClusteredGraph<T>& g, int n) {
  return blow_up(g.k(), apportion(g, n), n);
}

}  // namespace rainbow::real
