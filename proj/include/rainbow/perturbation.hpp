#pragma once

// Zero-sum weight perturbations and their first-order effect on densities.

#include "rainbow/clustered_graph.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace rainbow {

/// Signed direction over the clustered-graph coordinates. Entries sum to 0.
template <class T>
class WeightDelta {
 public:
  explicit WeightDelta(int k) : k_(k), entries_(coordinate_count(k), T(0)) {}
  WeightDelta(int k, std::vector<T> entries) : k_(k), entries_(std::move(entries)) {
    if (entries_.size() != coordinate_count(k)) throw std::invalid_argument("delta has the wrong length");
  }

  int k() const { return k_; }
  std::span<const T> entries() const { return entries_; }
  const T& operator[](const Coordinate& c) const { return entries_[index_of(k_, c)]; }

  /// Moves `amount` of weight away from / onto a coordinate.
  WeightDelta& remove(const Coordinate& c, const T& amount) {
    entries_[index_of(k_, c)] -= amount;
    return *this;
  }
  WeightDelta& add(const Coordinate& c, const T& amount) {
    entries_[index_of(k_, c)] += amount;
    return *this;
  }

  T sum() const {
    T s(0);
    for (const T& v : entries_) s += v;
    return s;
  }

  bool balanced() const {
    if constexpr (ScalarTraits<T>::exact) {
      return sum() == 0;
    } else {
      return std::abs(sum()) <= ScalarTraits<T>::sum_tolerance;
    }
  }

 private:
  int k_;
  std::vector<T> entries_;
};

/// Checks the preconditions shared by increment() and apply(): matching k,
/// zero sum, and no weight removed from an empty cluster.
template <class T>
void require_admissible(const ClusteredGraph<T>& g, const WeightDelta<T>& delta) {
  if (g.k() != delta.k()) throw std::invalid_argument("delta and graph have different numbers of colors");
  if (!delta.balanced()) throw std::invalid_argument("delta entries must sum to zero");
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    if (delta.entries()[idx] < 0 && !(g[idx] > 0))
      throw std::invalid_argument("delta removes weight from empty cluster " + describe(coordinate_at(g.k(), idx)));
  }
}

/// Per color, the coefficient of eps in d(g + eps*delta) - d(g).
template <class T>
std::vector<T> increment(const ClusteredGraph<T>& g, const WeightDelta<T>& delta) {
  require_valid(g);
  require_admissible(g, delta);
  std::vector<T> out;
  out.reserve(g.k());
  for (int i = 0; i < g.k(); ++i) out.push_back(T(2 * density_bilinear<T>(g.k(), g.weights(), delta.entries(), i)));
  return out;
}

/// Per color, the coefficient of eps^2 in d(g + eps*delta) - d(g).
template <class T>
std::vector<T> curvature(const WeightDelta<T>& delta) {
  std::vector<T> out;
  out.reserve(delta.k());
  for (int i = 0; i < delta.k(); ++i) out.push_back(density_form<T>(delta.k(), delta.entries(), i));
  return out;
}

/// g + eps*delta; rejects results that leave the nonnegative orthant.
template <class T>
ClusteredGraph<T> apply(const ClusteredGraph<T>& g, const WeightDelta<T>& delta, const T& eps) {
  require_admissible(g, delta);
  std::vector<T> w(g.weights().begin(), g.weights().end());
  for (std::size_t idx = 0; idx < w.size(); ++idx) {
    w[idx] += eps * delta.entries()[idx];
    if (w[idx] < 0) throw std::domain_error("step leaves the simplex at " + describe(coordinate_at(g.k(), idx)));
  }
  return ClusteredGraph<T>(g.k(), std::move(w));
}

/// Unit transfer from one cluster to another.
template <class T>
WeightDelta<T> transfer_delta(int k, const Coordinate& from, const Coordinate& to) {
  WeightDelta<T> d(k);
  d.remove(from, T(1)).add(to, T(1));
  return d;
}

/// Empties a pair cluster {i, j} into its two single clusters: removes
/// a_i + a_j + 2 b_ij from the pair and adds a_i + b_ij, a_j + b_ij to the
/// singles. First-order gain in color i is 2 (a_i + b_ij)(c_i - a_i - a_j - 2 b_ij).
template <class T>
WeightDelta<T> pair_split_delta(const ClusteredGraph<T>& g, int i, int j) {
  const T& ai = g.single_weight(i);
  const T& aj = g.single_weight(j);
  const T& bij = g.pair_weight(i, j);
  WeightDelta<T> d(g.k());
  d.remove(Coordinate::pair(i, j), T(ai + aj + 2 * bij));
  d.add(Coordinate::single(i), T(ai + bij));
  d.add(Coordinate::single(j), T(aj + bij));
  return d;
}

/// Removes a unit from each single cluster in `colors` and spreads the
/// removed mass over every cluster in proportion to its weight. First-order
/// gain in color i is 2 (m d_i - [i in colors] c_i) with m = |colors|.
template <class T>
WeightDelta<T> proportional_delta(const ClusteredGraph<T>& g, std::span<const int> colors) {
  WeightDelta<T> d(g.k());
  const T m(static_cast<long>(colors.size()));
  for (std::size_t idx = 0; idx < g.size(); ++idx) d.add(coordinate_at(g.k(), idx), T(m * g[idx]));
  for (int c : colors) d.remove(Coordinate::single(c), T(1));
  return d;
}

}  // namespace rainbow
