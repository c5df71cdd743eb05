#pragma once

// Exact maximization of min_i d_i along a segment. Each density is a
// quadratic in the step s, d_i(s) = d_i + s inc_i + s^2 curv_i, so the lower
// envelope is piecewise quadratic: its maximum sits at an endpoint, at a
// crossing of two quadratics, or at the vertex of a concave piece.

#include "rainbow/clustered_graph.hpp"
#include "rainbow/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace rainbow::opt {

struct LineSearchResult {
  double step = 0.0;
  double value = 0.0;  // min density at the step
};

/// Per-color quadratic along a direction: value, linear and square coefficients.
struct Quadratics {
  std::vector<double> base, slope, curv;

  double at(int i, double s) const { return base[i] + s * (slope[i] + s * curv[i]); }

  double min_at(double s) const {
    double m = at(0, s);
    for (std::size_t i = 1; i < base.size(); ++i) m = std::min(m, at(static_cast<int>(i), s));
    return m;
  }

  /// Largest value of color i on [0, smax].
  double max_on(int i, double smax) const {
    double m = std::max(base[i], at(i, smax));
    if (curv[i] < 0) {
      const double v = -slope[i] / (2 * curv[i]);
      if (v > 0 && v < smax) m = std::max(m, at(i, v));
    }
    return m;
  }
};

inline void add_root_candidates(double a, double b, double c, double smax, std::vector<double>& out) {
  // a s^2 + b s + c = 0 on (0, smax)
  auto keep = [&](double s) {
    if (s > 0 && s < smax && std::isfinite(s)) out.push_back(s);
  };
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (scale == 0) return;
  if (std::abs(a) <= 1e-14 * scale) {
    if (b != 0) keep(-c / b);
    return;
  }
  const double disc = b * b - 4 * a * c;
  if (disc < 0) return;
  const double root = std::sqrt(disc);
  // numerically stable pair of roots
  const double qv = -0.5 * (b + std::copysign(root, b));
  if (qv != 0) {
    keep(qv / a);
    keep(c / qv);
  } else {
    keep(0.0);
  }
}

/// Maximizes min_i q_i(s) over s in [0, smax]; ties go to the smallest step.
inline LineSearchResult maximize_envelope(const Quadratics& q, double smax) {
  const int k = static_cast<int>(q.base.size());
  if (!(smax > 0)) return {0.0, q.min_at(0.0)};
  std::vector<double> cand{0.0, smax};
  for (int i = 0; i < k; ++i) {
    if (q.curv[i] < 0) {
      const double v = -q.slope[i] / (2 * q.curv[i]);
      if (v > 0 && v < smax) cand.push_back(v);
    }
    for (int j = i + 1; j < k; ++j)
      add_root_candidates(q.curv[i] - q.curv[j], q.slope[i] - q.slope[j], q.base[i] - q.base[j], smax, cand);
  }
  std::sort(cand.begin(), cand.end());
  LineSearchResult best{0.0, q.min_at(0.0)};
  for (double s : cand) {
    const double v = q.min_at(s);
    if (v > best.value) best = {s, v};
  }
  return best;
}

/// Largest step keeping w + s delta nonnegative.
inline double max_feasible_step(std::span<const double> w, std::span<const double> delta) {
  double smax = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < w.size(); ++c)
    if (delta[c] < 0) smax = std::min(smax, std::max(w[c], 0.0) / -delta[c]);
  return smax;
}

/// Quadratics of every color along an arbitrary direction.
inline Quadratics along(const FloatGraph& g, std::span<const double> delta) {
  const int k = g.k();
  Quadratics q;
  for (int i = 0; i < k; ++i) {
    q.base.push_back(density_form<double>(k, g.weights(), i));
    q.slope.push_back(2 * density_bilinear<double>(k, g.weights(), delta, i));
    q.curv.push_back(density_form<double>(k, delta, i));
  }
  return q;
}

/// d d_i / d w_c for every coordinate c, row-major k x n.
inline std::vector<double> density_gradients(const FloatGraph& g) {
  const int k = g.k();
  const std::size_t n = g.size();
  std::vector<double> grad(static_cast<std::size_t>(k) * n, 0.0);
  const double x = g.hub_weight();
  for (int i = 0; i < k; ++i) {
    double* row = grad.data() + static_cast<std::size_t>(i) * n;
    const double a = g.single_weight(i);
    row[single_index(k, i)] = 2 * (a + g.pair_total(i) + x);
    for (int j = 0; j < k; ++j)
      if (j != i) row[pair_index(k, i, j)] = 2 * (g.pair_weight(i, j) + a);
    row[hub_index(k)] = 2 * a;
  }
  return grad;
}

namespace detail {

// Second-order coefficient of color i along e_to - e_from (from != to).
inline double transfer_curvature(int i, const Coordinate& from, const Coordinate& to) {
  auto own = [&](const Coordinate& c) { return c.touches(i) ? 1.0 : 0.0; };
  auto cross = [&](const Coordinate& u, const Coordinate& v) {
    // B_i(e_u, e_v) is 1 for the single of i against the hub or a pair touching i
    const bool u_single = u.kind == CoordKind::Single && u.i == i;
    const bool v_single = v.kind == CoordKind::Single && v.i == i;
    auto partner = [&](const Coordinate& c) { return c.kind == CoordKind::Hub || (c.kind == CoordKind::Pair && c.touches(i)); };
    return (u_single && partner(v)) || (v_single && partner(u)) ? 1.0 : 0.0;
  };
  return own(from) + own(to) - 2 * cross(from, to);
}

}  // namespace detail

/// Quadratics along the unit transfer from -> to, from precomputed densities
/// and gradients.
inline Quadratics transfer_quadratics(int k, std::span<const double> dens, std::span<const double> grad, std::size_t n,
                                      std::size_t from, std::size_t to) {
  const Coordinate cf = coordinate_at(k, from), ct = coordinate_at(k, to);
  Quadratics q;
  q.base.assign(dens.begin(), dens.end());
  q.slope.resize(k);
  q.curv.resize(k);
  for (int i = 0; i < k; ++i) {
    const std::size_t row = static_cast<std::size_t>(i) * n;
    q.slope[i] = grad[row + to] - grad[row + from];
    q.curv[i] = detail::transfer_curvature(i, cf, ct);
  }
  return q;
}

/// Moves weight from one coordinate to another, choosing the amount that
/// maximizes the minimum density.
inline LineSearchResult line_search_transfer(const FloatGraph& g, const Coordinate& from, const Coordinate& to) {
  const int k = g.k();
  const std::size_t f = index_of(k, from), t = index_of(k, to);
  if (!(g[f] > 0)) throw std::invalid_argument("transfer source " + describe(from) + " has zero weight");
  std::vector<double> dens;
  for (int i = 0; i < k; ++i) dens.push_back(density_form<double>(k, g.weights(), i));
  const double now = *std::min_element(dens.begin(), dens.end());
  if (f == t) return {0.0, now};
  const auto grad = density_gradients(g);
  return maximize_envelope(transfer_quadratics(k, dens, grad, g.size(), f, t), g[f]);
}

}  // namespace rainbow::opt
