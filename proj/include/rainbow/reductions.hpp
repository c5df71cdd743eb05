#pragma once

// Structural reductions that map a clustered graph to one with fewer colors.

#include "rainbow/clustered_graph.hpp"

#include <stdexcept>
#include <vector>

namespace rainbow {

/// Surviving colors after deleting `gone` from 0..k-1, in increasing order.
inline std::vector<int> surviving_colors(int k, std::initializer_list<int> gone) {
  std::vector<int> out;
  for (int c = 0; c < k; ++c)
    if (std::find(gone.begin(), gone.end(), c) == gone.end()) out.push_back(c);
  return out;
}

/// Deletes colors i and j together with their private mass
/// r = a_i + a_j + b_ij. Pair clusters {p, i} and {p, j} fold into the single
/// cluster of p; everything is rescaled by 1 / (1 - r). Surviving colors keep
/// their relative order.
template <class T>
ClusteredGraph<T> contract(const ClusteredGraph<T>& g, int i, int j) {
  require_valid(g);
  const int k = g.k();
  if (k < 3) throw std::domain_error("contraction needs at least 3 colors");
  if (i == j) throw std::invalid_argument("contraction needs two distinct colors");
  if (i < 0 || j < 0 || i >= k || j >= k) throw std::out_of_range("color index out of range");

  const T removed = g.single_weight(i) + g.single_weight(j) + g.pair_weight(i, j);
  const T scale = T(1) - removed;
  if (!(scale > 0)) throw std::domain_error("degenerate contraction: colors carry the whole mass");

  const std::vector<int> keep = surviving_colors(k, {i, j});
  ClusteredGraph<T> out(k - 2);
  for (std::size_t p = 0; p < keep.size(); ++p) {
    const int src = keep[p];
    out.set_single(static_cast<int>(p),
                   T((g.single_weight(src) + g.pair_weight(src, i) + g.pair_weight(src, j)) / scale));
    for (std::size_t q = p + 1; q < keep.size(); ++q)
      out.set_pair(static_cast<int>(p), static_cast<int>(q), T(g.pair_weight(src, keep[q]) / scale));
  }
  out.set_hub(T(g.hub_weight() / scale));
  return out;
}

/// Deletes the single cluster of color i and strips color i from the pair
/// clusters, which become single clusters of their other color; rescales by
/// 1 / (1 - a_i).
template <class T>
ClusteredGraph<T> drop_color(const ClusteredGraph<T>& g, int i) {
  require_valid(g);
  const int k = g.k();
  if (k < 2) throw std::domain_error("dropping a color needs at least 2 colors");
  if (i < 0 || i >= k) throw std::out_of_range("color index out of range");
  const T scale = T(1) - g.single_weight(i);
  if (!(scale > 0)) throw std::domain_error("degenerate drop: the single cluster carries the whole mass");

  const std::vector<int> keep = surviving_colors(k, {i});
  ClusteredGraph<T> out(k - 1);
  for (std::size_t p = 0; p < keep.size(); ++p) {
    const int src = keep[p];
    out.set_single(static_cast<int>(p), T((g.single_weight(src) + g.pair_weight(src, i)) / scale));
    for (std::size_t q = p + 1; q < keep.size(); ++q)
      out.set_pair(static_cast<int>(p), static_cast<int>(q), T(g.pair_weight(src, keep[q]) / scale));
  }
  out.set_hub(T(g.hub_weight() / scale));
  return out;
}

}  // namespace rainbow
