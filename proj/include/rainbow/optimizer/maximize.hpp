#pragma once

// Multi-start local ascent for max over the simplex of min_i d_i. The
// objective is a minimum of indefinite quadratics, so results are "best
// found", never certified optima.

#include "rainbow/extremal.hpp"
#include "rainbow/optimizer/line_search.hpp"
#include "rainbow/perturbation.hpp"
#include "rainbow/sampling.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <vector>

namespace rainbow::opt {

enum class MoveKind { Start, Transfer, PairShift, Proportional, Softmin };

inline std::string_view move_name(MoveKind m) {
  switch (m) {
    case MoveKind::Start: return "start";
    case MoveKind::Transfer: return "transfer";
    case MoveKind::PairShift: return "pair-shift";
    case MoveKind::Proportional: return "proportional";
    case MoveKind::Softmin: return "softmin";
  }
  return "?";
}

struct OptimizerConfig {
  int restarts = 50;
  int max_iterations = 2000;
  double step_tolerance = 1e-12;
  double value_tolerance = 1e-10;
  std::uint64_t seed = 1;
  double temperature = 0.1;
  double temperature_decay = 0.9;  // applied every `decay_interval` iterations
  int decay_interval = 100;
  bool pairwise_transfer = true;
  bool proportional = true;
  bool pair_shift = true;
  bool softmin = true;
  bool extremal_starts = true;  // every other restart starts near a construction
  int workers = 1;

  void validate() const {
    if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    if (max_iterations < 0) throw std::invalid_argument("max_iterations must be >= 0");
    if (!(step_tolerance > 0) || !(value_tolerance > 0)) throw std::invalid_argument("tolerances must be positive");
    if (!(temperature > 0)) throw std::invalid_argument("temperature must be positive");
    if (!(temperature_decay > 0 && temperature_decay < 1)) throw std::invalid_argument("decay must lie in (0, 1)");
    if (decay_interval < 1) throw std::invalid_argument("decay interval must be >= 1");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  }
};

struct TracePoint {
  int restart;
  int iteration;
  double min_density;
  MoveKind move;
};

struct RestartOutcome {
  FloatGraph graph{1};
  double value = 0.0;
  int iterations = 0;
  std::vector<TracePoint> trace;
};

struct OptimizerResult {
  FloatGraph best{1};
  double best_value = 0.0;
  int best_restart = 0;
  std::vector<double> restart_values;
  std::vector<TracePoint> trace;
  double wall_seconds = 0.0;
};

/// Euclidean projection onto the probability simplex (sort-based).
inline std::vector<double> project_to_simplex(std::span<const double> v) {
  std::vector<double> u(v.begin(), v.end());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0.0, theta = 0.0;
  for (std::size_t r = 0; r < u.size(); ++r) {
    cum += u[r];
    const double t = (cum - 1.0) / static_cast<double>(r + 1);
    if (u[r] - t > 0) theta = t;
  }
  std::vector<double> out(v.size());
  for (std::size_t c = 0; c < v.size(); ++c) out[c] = std::max(v[c] - theta, 0.0);
  return out;
}

namespace detail {

inline std::vector<double> color_densities(const FloatGraph& g) {
  std::vector<double> d;
  for (int i = 0; i < g.k(); ++i) d.push_back(density_form<double>(g.k(), g.weights(), i));
  return d;
}

inline double lowest(const std::vector<double>& d) { return *std::min_element(d.begin(), d.end()); }

struct Candidate {
  double value;
  std::vector<double> weights;
  MoveKind move;
};

// w + s delta, cleaned of rounding below zero and rescaled onto the simplex.
inline FloatGraph step_to(const FloatGraph& g, std::span<const double> delta, double s) {
  std::vector<double> w(g.weights().begin(), g.weights().end());
  for (std::size_t c = 0; c < w.size(); ++c) w[c] = std::max(w[c] + s * delta[c], 0.0);
  return renormalize(FloatGraph(g.k(), std::move(w)));
}

inline void consider_direction(const FloatGraph& g, std::span<const double> delta, MoveKind kind, double smax_cap,
                               Candidate& best) {
  double smax = std::min(max_feasible_step(g.weights(), delta), smax_cap);
  if (!(smax > 0) || !std::isfinite(smax)) return;
  const auto res = maximize_envelope(along(g, delta), smax);
  if (res.step > 0 && res.value > best.value) {
    FloatGraph moved = step_to(g, delta, res.step);
    const double v = lowest(color_densities(moved));
    if (v > best.value) best = {v, std::vector<double>(moved.weights().begin(), moved.weights().end()), kind};
  }
}

inline RestartOutcome ascend(FloatGraph g, int restart, const OptimizerConfig& cfg) {
  const int k = g.k();
  const std::size_t n = g.size();
  RestartOutcome out;
  auto dens = color_densities(g);
  double value = lowest(dens);
  out.trace.push_back({restart, 0, value, MoveKind::Start});
  double tau = cfg.temperature;

  for (int it = 1; it <= cfg.max_iterations; ++it) {
    if (it % cfg.decay_interval == 0) tau *= cfg.temperature_decay;
    Candidate best{value, {}, MoveKind::Start};

    if (cfg.pairwise_transfer) {
      const auto grad = density_gradients(g);
      for (std::size_t from = 0; from < n; ++from) {
        if (!(g[from] > cfg.step_tolerance)) continue;
        for (std::size_t to = 0; to < n; ++to) {
          if (to == from) continue;
          Quadratics q = transfer_quadratics(k, dens, grad, n, from, to);
          // skip when some color can never rise above the incumbent on the segment
          bool hopeless = false;
          for (int i = 0; i < k && !hopeless; ++i) hopeless = q.max_on(i, g[from]) <= best.value + cfg.value_tolerance;
          if (hopeless) continue;
          const auto res = maximize_envelope(q, g[from]);
          if (res.step > cfg.step_tolerance && res.value > best.value + cfg.value_tolerance) {
            std::vector<double> delta(n, 0.0);
            delta[from] = -1.0;
            delta[to] = 1.0;
            FloatGraph moved = step_to(g, delta, res.step);
            const double v = lowest(color_densities(moved));
            if (v > best.value)
              best = {v, std::vector<double>(moved.weights().begin(), moved.weights().end()), MoveKind::Transfer};
          }
        }
      }
    }

    if (cfg.pair_shift) {
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          if (!(g.pair_weight(i, j) > 0)) continue;
          const auto d = pair_split_delta(g, i, j);
          consider_direction(g, d.entries(), MoveKind::PairShift, 1.0, best);
        }
    }

    if (cfg.proportional) {
      std::vector<int> support;
      for (int i = 0; i < k; ++i)
        if (g.single_weight(i) > 0) support.push_back(i);
      if (!support.empty()) {
        consider_direction(g, proportional_delta(g, std::span<const int>(support)).entries(), MoveKind::Proportional,
                           1.0, best);
        if (support.size() > 1)
          for (std::size_t drop = 0; drop < support.size(); ++drop) {
            std::vector<int> sub;
            for (std::size_t s = 0; s < support.size(); ++s)
              if (s != drop) sub.push_back(support[s]);
            consider_direction(g, proportional_delta(g, std::span<const int>(sub)).entries(), MoveKind::Proportional,
                               1.0, best);
          }
      }
    }

    if (cfg.softmin) {
      // gradient of -tau log sum exp(-d_i / tau), weights favour the low colors
      std::vector<double> pi(k);
      double z = 0.0;
      for (int i = 0; i < k; ++i) z += pi[i] = std::exp(-(dens[i] - value) / tau);
      const auto grad = density_gradients(g);
      std::vector<double> ascent(n, 0.0);
      double scale = 0.0;
      for (std::size_t c = 0; c < n; ++c) {
        for (int i = 0; i < k; ++i) ascent[c] += pi[i] / z * grad[static_cast<std::size_t>(i) * n + c];
        scale = std::max(scale, std::abs(ascent[c]));
      }
      if (scale > 0) {
        for (double eta : {1.0, 0.1, 0.01}) {
          std::vector<double> target(n);
          for (std::size_t c = 0; c < n; ++c) target[c] = g[c] + eta * ascent[c] / scale;
          const auto proj = project_to_simplex(target);
          std::vector<double> delta(n);
          for (std::size_t c = 0; c < n; ++c) delta[c] = proj[c] - g[c];
          consider_direction(g, delta, MoveKind::Softmin, 1.0, best);
        }
      }
    }

    if (best.weights.empty() || !(best.value > value + cfg.value_tolerance)) break;
    g = FloatGraph(k, std::move(best.weights));
    dens = color_densities(g);
    value = lowest(dens);
    out.iterations = it;
    out.trace.push_back({restart, it, value, best.move});
  }
  out.graph = std::move(g);
  out.value = value;
  return out;
}

}  // namespace detail

/// Start point of restart r: even restarts (and all restarts without
/// extremal starts) draw from Dirichlet(1); odd ones perturb a construction.
inline FloatGraph restart_start(int k, int restart, const OptimizerConfig& cfg) {
  Rng rng = make_rng(cfg.seed, static_cast<std::uint64_t>(restart));
  if (!cfg.extremal_starts || restart % 2 == 0) return sample_dirichlet(k, rng);
  const auto families = families_for(k);
  const Family fam = families[static_cast<std::size_t>(restart / 2) % families.size()];
  return sample_near(to_float(extremal(k, fam)), rng, 3.0, 1.0);
}

inline RestartOutcome run_restart(int k, int restart, const OptimizerConfig& cfg) {
  return detail::ascend(restart_start(k, restart, cfg), restart, cfg);
}

inline OptimizerResult maximize_min_density(int k, const OptimizerConfig& cfg = {}) {
  if (k < 1) throw std::domain_error("k must be positive");
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < cfg.restarts; r = next++) outcomes[static_cast<std::size_t>(r)] = run_restart(k, r, cfg);
  };
  const int threads = std::min(cfg.workers, cfg.restarts);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  OptimizerResult res;
  for (int r = 0; r < cfg.restarts; ++r) {
    auto& o = outcomes[static_cast<std::size_t>(r)];
    res.restart_values.push_back(o.value);
    if (r == 0 || o.value > res.best_value) {
      res.best_value = o.value;
      res.best = o.graph;
      res.best_restart = r;
    }
    res.trace.insert(res.trace.end(), o.trace.begin(), o.trace.end());
  }
  res.best_value = detail::lowest(detail::color_densities(res.best));
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

inline void write_trace_csv(std::ostream& os, const std::vector<TracePoint>& trace) {
  os << "restart,iteration,min_density,move_kind\n";
  os.precision(17);
  for (const auto& p : trace) os << p.restart << ',' << p.iteration << ',' << p.min_density << ',' << move_name(p.move) << '\n';
}

}  // namespace rainbow::opt
