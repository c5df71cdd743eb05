#pragma once

// Weighted cluster model for k colors.
//
// Coordinates are laid out as: every color pair {i, j} with i < j in
// lexicographic order, then one single-color cluster per color, then the
// hub cluster. A pair cluster is a clique in both of its colors; a single
// cluster of color i is a clique in color i joined in color i to the hub and
// to every pair cluster containing i; the hub is an independent set.
//
// Colors are 0-based throughout the library; file formats and the CLI shift
// them to 1-based.

#include "rainbow/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace rainbow {

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr double sum_tolerance = 1e-12;
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
};

enum class CoordKind { Pair, Single, Hub };

struct Coordinate {
  CoordKind kind = CoordKind::Hub;
  int i = -1;
  int j = -1;

  static Coordinate pair(int p, int q) {
    if (p == q) throw std::invalid_argument("pair coordinate needs two distinct colors");
    return {CoordKind::Pair, std::min(p, q), std::max(p, q)};
  }
  static Coordinate single(int p) { return {CoordKind::Single, p, -1}; }
  static Coordinate hub() { return {CoordKind::Hub, -1, -1}; }

  /// True when the cluster carries edges of `color`.
  bool touches(int color) const {
    switch (kind) {
      case CoordKind::Pair: return i == color || j == color;
      case CoordKind::Single: return i == color;
      case CoordKind::Hub: return false;
    }
    return false;
  }

  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

inline std::string describe(const Coordinate& c) {
  switch (c.kind) {
    case CoordKind::Pair: return "pair(" + std::to_string(c.i + 1) + "," + std::to_string(c.j + 1) + ")";
    case CoordKind::Single: return "single(" + std::to_string(c.i + 1) + ")";
    case CoordKind::Hub: return "hub";
  }
  return "?";
}

constexpr std::size_t pair_count(int k) { return static_cast<std::size_t>(k) * (k - 1) / 2; }
constexpr std::size_t coordinate_count(int k) { return pair_count(k) + static_cast<std::size_t>(k) + 1; }

constexpr std::size_t pair_index(int k, int i, int j) {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(i) * (2 * k - i - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}
constexpr std::size_t single_index(int k, int i) { return pair_count(k) + static_cast<std::size_t>(i); }
constexpr std::size_t hub_index(int k) { return pair_count(k) + static_cast<std::size_t>(k); }

inline std::size_t index_of(int k, const Coordinate& c) {
  switch (c.kind) {
    case CoordKind::Pair: return pair_index(k, c.i, c.j);
    case CoordKind::Single: return single_index(k, c.i);
    case CoordKind::Hub: return hub_index(k);
  }
  return hub_index(k);
}

inline Coordinate coordinate_at(int k, std::size_t index) {
  const std::size_t pairs = pair_count(k);
  if (index < pairs) {
    int i = 0;
    std::size_t row = static_cast<std::size_t>(k - 1);
    while (index >= row) {
      index -= row;
      ++i;
      --row;
    }
    return Coordinate::pair(i, i + 1 + static_cast<int>(index));
  }
  if (index < pairs + static_cast<std::size_t>(k)) return Coordinate::single(static_cast<int>(index - pairs));
  if (index == hub_index(k)) return Coordinate::hub();
  throw std::out_of_range("coordinate index out of range");
}

/// Clustered graph for k colors: one weight per coordinate. Pair weights
/// are keyed by the unordered color pair; there is no diagonal pair entry.
template <class T>
class ClusteredGraph {
 public:
  using value_type = T;

  explicit ClusteredGraph(int k) : k_(k) {
    if (k < 1) throw std::domain_error("number of colors must be at least 1");
    weights_.assign(coordinate_count(k), T(0));
  }

  ClusteredGraph(int k, std::vector<T> weights) : k_(k), weights_(std::move(weights)) {
    if (k < 1) throw std::domain_error("number of colors must be at least 1");
    if (weights_.size() != coordinate_count(k)) throw std::invalid_argument("weight vector has the wrong length");
  }

  int k() const { return k_; }
  std::size_t size() const { return weights_.size(); }
  std::span<const T> weights() const { return weights_; }

  const T& pair_weight(int i, int j) const { return weights_[pair_index(k_, check(i), check(j))]; }
  const T& single_weight(int i) const { return weights_[single_index(k_, check(i))]; }
  const T& hub_weight() const { return weights_[hub_index(k_)]; }
  const T& operator[](const Coordinate& c) const { return weights_[index_of(k_, c)]; }
  const T& operator[](std::size_t index) const { return weights_.at(index); }

  ClusteredGraph& set_pair(int i, int j, T w) {
    if (i == j) throw std::invalid_argument("pair weight needs two distinct colors");
    weights_[pair_index(k_, check(i), check(j))] = std::move(w);
    return *this;
  }
  ClusteredGraph& set_single(int i, T w) {
    weights_[single_index(k_, check(i))] = std::move(w);
    return *this;
  }
  ClusteredGraph& set_hub(T w) {
    weights_[hub_index(k_)] = std::move(w);
    return *this;
  }
  ClusteredGraph& set(const Coordinate& c, T w) {
    weights_[index_of(k_, c)] = std::move(w);
    return *this;
  }

  /// Sum of pair weights incident to color i.
  T pair_total(int i) const {
    T s(0);
    for (int j = 0; j < k_; ++j)
      if (j != i) s += pair_weight(i, j);
    return s;
  }

  /// Total weight of clusters carrying color i, counting the hub.
  T cover(int i) const { return T(single_weight(i) + pair_total(i) + hub_weight()); }

  T total() const { return std::accumulate(weights_.begin(), weights_.end(), T(0)); }

  friend bool operator==(const ClusteredGraph&, const ClusteredGraph&) = default;

 private:
  int check(int color) const {
    if (color < 0 || color >= k_) throw std::out_of_range("color index out of range");
    return color;
  }

  int k_;
  std::vector<T> weights_;
};

using ExactGraph = ClusteredGraph<Rational>;
using FloatGraph = ClusteredGraph<double>;

/// nullopt when the graph is on the simplex; otherwise the first violated
/// constraint.
template <class T>
std::optional<std::string> validate(const ClusteredGraph<T>& g) {
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const T& w = g[idx];
    if constexpr (!ScalarTraits<T>::exact) {
      if (!std::isfinite(w)) return "weight of " + describe(coordinate_at(g.k(), idx)) + " is not finite";
    }
    if (w < 0) {
      std::ostringstream os;
      os << "weight of " << describe(coordinate_at(g.k(), idx)) << " is negative (" << to_double(w) << ")";
      return os.str();
    }
  }
  const T sum = g.total();
  if constexpr (ScalarTraits<T>::exact) {
    if (sum != 1) return "sum = " + to_string(sum) + " != 1";
  } else {
    if (std::abs(sum - 1.0) > ScalarTraits<T>::sum_tolerance) {
      std::ostringstream os;
      os.precision(17);
      os << "sum = " << sum << " != 1";
      return os.str();
    }
  }
  return std::nullopt;
}

template <class T>
void require_valid(const ClusteredGraph<T>& g) {
  if (auto violation = validate(g)) throw std::invalid_argument("invalid clustered graph: " + *violation);
}

/// Density polynomial of `color` evaluated at raw coordinates, without any
/// simplex check. Homogeneous of degree two; works over any ring.
template <class T>
T density_form(int k, std::span<const T> w, int color) {
  const T& single = w[single_index(k, color)];
  T pair_sum(0);
  T pair_squares(0);
  for (int j = 0; j < k; ++j) {
    if (j == color) continue;
    const T& p = w[pair_index(k, color, j)];
    pair_sum += p;
    pair_squares += p * p;
  }
  return T(single * single + pair_squares + T(2) * single * pair_sum + T(2) * single * w[hub_index(k)]);
}

/// Symmetric bilinear form B with density_form(u) = B(u, u). The linear
/// change of a density along v is 2 B(u, v).
template <class T>
T density_bilinear(int k, std::span<const T> u, std::span<const T> v, int color) {
  const T& su = u[single_index(k, color)];
  const T& sv = v[single_index(k, color)];
  T pu(0), pv(0), cross(0);
  for (int j = 0; j < k; ++j) {
    if (j == color) continue;
    const std::size_t idx = pair_index(k, color, j);
    pu += u[idx];
    pv += v[idx];
    cross += u[idx] * v[idx];
  }
  const std::size_t hub = hub_index(k);
  return T(su * sv + cross + su * pv + sv * pu + su * v[hub] + sv * u[hub]);
}

template <class T>
struct DerivedQuantities {
  std::vector<T> density;     // per color
  std::vector<T> pair_total;  // sum of pair weights touching the color
  std::vector<T> cover;       // single + pair_total + hub
  T min_cover;
  std::optional<T> min_positive_pair;  // unset when every pair weight is zero

  T min_density() const { return *std::min_element(density.begin(), density.end()); }
  int argmin_density() const {
    return static_cast<int>(std::min_element(density.begin(), density.end()) - density.begin());
  }
};

template <class T>
DerivedQuantities<T> densities(const ClusteredGraph<T>& g) {
  require_valid(g);
  const int k = g.k();
  DerivedQuantities<T> out;
  out.density.reserve(k);
  out.pair_total.reserve(k);
  out.cover.reserve(k);
  for (int i = 0; i < k; ++i) {
    out.density.push_back(density_form<T>(k, g.weights(), i));
    out.pair_total.push_back(g.pair_total(i));
    out.cover.push_back(T(g.single_weight(i) + out.pair_total.back() + g.hub_weight()));
  }
  out.min_cover = *std::min_element(out.cover.begin(), out.cover.end());
  for (std::size_t idx = 0; idx < pair_count(k); ++idx) {
    const T& w = g[idx];
    if (w > 0 && (!out.min_positive_pair || w < *out.min_positive_pair)) out.min_positive_pair = w;
  }
  return out;
}

template <class T>
T min_density(const ClusteredGraph<T>& g) {
  T best = density_form<T>(g.k(), g.weights(), 0);
  for (int i = 1; i < g.k(); ++i) {
    T d = density_form<T>(g.k(), g.weights(), i);
    if (d < best) best = d;
  }
  return best;
}

/// Relabels colors: color i of `g` becomes color perm[i].
template <class T>
ClusteredGraph<T> permute_colors(const ClusteredGraph<T>& g, std::span<const int> perm) {
  const int k = g.k();
  if (static_cast<int>(perm.size()) != k) throw std::invalid_argument("permutation has the wrong length");
  std::vector<bool> seen(k, false);
  for (int p : perm) {
    if (p < 0 || p >= k || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  ClusteredGraph<T> out(k);
  for (int i = 0; i < k; ++i) {
    out.set_single(perm[i], g.single_weight(i));
    for (int j = i + 1; j < k; ++j) out.set_pair(perm[i], perm[j], g.pair_weight(i, j));
  }
  out.set_hub(g.hub_weight());
  return out;
}

/// Rescales a float graph so its weights sum to one. Never applied
/// implicitly by the library.
inline FloatGraph renormalize(const FloatGraph& g) {
  const double sum = g.total();
  if (!(sum > 0)) throw std::invalid_argument("cannot renormalize a graph with zero total weight");
  std::vector<double> w(g.weights().begin(), g.weights().end());
  for (double& v : w) v = std::max(v, 0.0) / sum;
  return FloatGraph(g.k(), std::move(w));
}

inline FloatGraph to_float(const ExactGraph& g) {
  std::vector<double> w;
  w.reserve(g.size());
  for (const auto& q : g.weights()) w.push_back(q.get_d());
  return FloatGraph(g.k(), std::move(w));
}

/// Largest-remainder rounding of nonnegative shares to integers summing to
/// `total`; ties go to the earlier index.
inline std::vector<std::int64_t> largest_remainder(std::span<const double> shares, std::int64_t total) {
  const double sum = std::accumulate(shares.begin(), shares.end(), 0.0);
  if (!(sum > 0)) throw std::invalid_argument("shares must have positive total");
  std::vector<std::int64_t> out(shares.size());
  std::vector<std::pair<double, std::size_t>> rem;
  rem.reserve(shares.size());
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < shares.size(); ++i) {
    const double quota = std::max(shares[i], 0.0) / sum * static_cast<double>(total);
    out[i] = static_cast<std::int64_t>(std::floor(quota));
    assigned += out[i];
    rem.emplace_back(quota - static_cast<double>(out[i]), i);
  }
  std::stable_sort(rem.begin(), rem.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
  for (std::size_t t = 0; assigned < total && t < rem.size(); ++t, ++assigned) ++out[rem[t].second];
  return out;
}

/// Snaps a float graph to the lattice of multiples of 1/denominator with an
/// exact sum, returning integer numerators in coordinate order.
inline std::vector<std::int64_t> lattice_numerators(const FloatGraph& g, std::int64_t denominator) {
  return largest_remainder(g.weights(), denominator);
}

inline ExactGraph rationalize(const FloatGraph& g, std::int64_t denominator) {
  const auto num = lattice_numerators(g, denominator);
  std::vector<Rational> w;
  w.reserve(num.size());
  for (auto v : num) w.push_back(make_rational(static_cast<long>(v), static_cast<long>(denominator)));
  return ExactGraph(g.k(), std::move(w));
}

}  // namespace rainbow
