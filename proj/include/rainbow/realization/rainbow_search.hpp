#pragma once

// Exhaustive search for rainbow paths and walks with l edges. Vertex
// sequences are extended in ascending order, so the first complete sequence
// is the lexicographically least witness. Each partial sequence carries the
// set of color sets its edge slots can use injectively; a memoized walk
// completion test prunes branches that cannot be finished.

#include "rainbow/realization/colored_system.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

namespace rainbow::real {

constexpr int max_default_length = 6;

struct SearchOptions {
  int length = 3;
  WitnessKind kind = WitnessKind::Path;
  bool non_backtracking = false;  // walks only: forbid v_{t-1} = v_{t+1}
  bool allow_long = false;        // lifts the length cap
  int workers = 1;
};

/// Lexicographically least injective color choice for the slots, if any.
inline std::optional<std::vector<int>> rainbow_assignment(const std::vector<ColorMask>& slots) {
  std::vector<int> pick(slots.size());
  std::function<bool(std::size_t, ColorMask)> go = [&](std::size_t t, ColorMask used) {
    if (t == slots.size()) return true;
    for (ColorMask free = slots[t] & ~used; free; free &= free - 1) {
      const int c = std::countr_zero(free);
      pick[t] = c + 1;
      if (go(t + 1, used | (ColorMask{1} << c))) return true;
    }
    return false;
  };
  if (!go(0, 0)) return std::nullopt;
  return pick;
}

namespace detail {

using Frontier = std::vector<ColorMask>;

inline Frontier extend(const Frontier& f, ColorMask edge) {
  Frontier out;
  for (ColorMask used : f)
    for (ColorMask free = edge & ~used; free; free &= free - 1) out.push_back(used | (free & -free));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class Searcher {
 public:
  Searcher(const ColoredGraphSystem& s, const SearchOptions& o)
      : s_(s), o_(o), memo_(static_cast<std::size_t>(s.n() + 1) * static_cast<std::size_t>(o.length + 1)) {}

  using Complete = std::function<bool(std::vector<int>&, const Frontier&)>;

  /// Extends `seq` to `target` edges, calling `done` on each completion until it returns true.
  bool dfs(std::vector<int>& seq, const Frontier& f, int target, const Complete& done) {
    const int t = static_cast<int>(seq.size()) - 1;
    if (t == target) return done(seq, f);
    const int v = seq.back();
    for (int w : s_.neighbors(v)) {
      if (o_.kind == WitnessKind::Path && std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
      if (o_.kind == WitnessKind::Walk && o_.non_backtracking && t >= 1 && w == seq[t - 1]) continue;
      Frontier next = extend(f, s_.colors_of(v, w));
      if (next.empty() || !any_completable(w, target - t - 1, next)) continue;
      seq.push_back(w);
      if (dfs(seq, next, target, done)) return true;
      seq.pop_back();
    }
    return false;
  }

  bool any_completable(int v, int r, const Frontier& f) {
    for (ColorMask used : f)
      if (completable(v, r, used)) return true;
    return false;
  }

  // Whether some walk of r more edges from v avoids the colors in `used`.
  bool completable(int v, int r, ColorMask used) {
    if (r == 0) return true;
    if (r > s_.k() - std::popcount(used)) return false;
    auto& slot = memo_[static_cast<std::size_t>(v) * static_cast<std::size_t>(o_.length + 1) + static_cast<std::size_t>(r)];
    if (auto it = slot.find(used); it != slot.end()) return it->second;
    bool ok = false;
    for (int w : s_.neighbors(v)) {
      for (ColorMask free = s_.colors_of(v, w) & ~used; free && !ok; free &= free - 1)
        ok = completable(w, r - 1, used | (free & -free));
      if (ok) break;
    }
    slot[used] = ok;  // recursion only touches smaller r, so `slot` is still valid
    return ok;
  }

 private:
  const ColoredGraphSystem& s_;
  const SearchOptions& o_;
  std::vector<std::unordered_map<ColorMask, bool>> memo_;
};

inline void validate(const ColoredGraphSystem&, const SearchOptions& o) {
  if (o.length < 2) throw std::invalid_argument("witness length must be at least 2");
  if (o.length > max_default_length && !o.allow_long)
    throw std::invalid_argument("witness length above 6 refused without the long-search override");
  if (o.workers < 1) throw std::invalid_argument("workers must be >= 1");
}

inline RainbowWitness make_witness(const ColoredGraphSystem& s, const SearchOptions& o, std::vector<int> seq) {
  std::vector<ColorMask> slots;
  for (std::size_t t = 0; t + 1 < seq.size(); ++t) slots.push_back(s.colors_of(seq[t], seq[t + 1]));
  RainbowWitness w{o.kind, std::move(seq), *rainbow_assignment(slots)};
  if (w.kind == WitnessKind::Path && w.vertices.front() > w.vertices.back()) {
    std::reverse(w.vertices.begin(), w.vertices.end());
    std::reverse(w.colors.begin(), w.colors.end());
  }
  return w;
}

}  // namespace detail

/// First rainbow witness in lexicographic vertex order, or none.
inline std::optional<RainbowWitness> find_rainbow(const ColoredGraphSystem& s, const SearchOptions& o = {}) {
  detail::validate(s, o);
  if (o.length > s.k()) return std::nullopt;
  const int workers = std::max(1, std::min(o.workers, s.n()));
  std::vector<std::optional<std::vector<int>>> found(static_cast<std::size_t>(workers));
  std::atomic<int> best_start{s.n() + 1};

  auto run = [&](int worker) {
    detail::Searcher search(s, o);
    for (int v = worker + 1; v <= s.n(); v += workers) {
      if (v > best_start.load()) return;
      std::vector<int> seq{v};
      const detail::Frontier start{0};
      if (!search.any_completable(v, o.length, start)) continue;
      if (search.dfs(seq, start, o.length, [](std::vector<int>&, const detail::Frontier&) { return true; })) {
        found[static_cast<std::size_t>(worker)] = seq;
        for (int cur = best_start.load(); v < cur && !best_start.compare_exchange_weak(cur, v);) {
        }
        return;
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::optional<std::vector<int>> best;
  for (auto& f : found)
    if (f && (!best || *f < *best)) best = f;
  if (!best) return std::nullopt;
  return detail::make_witness(s, o, std::move(*best));
}

/// A witness whose slots can use edge {u, v} in color c, or none. When the
/// system had no witness before that edge was added, this finds one exactly
/// when a full search would.
inline std::optional<RainbowWitness> find_rainbow_through(const ColoredGraphSystem& s, int c, int u, int v,
                                                          const SearchOptions& o = {}) {
  detail::validate(s, o);
  if (o.length > s.k()) return std::nullopt;
  if (!s.has_edge(c, u, v)) throw std::invalid_argument("edge is not present in the given color");
  detail::Searcher search(s, o);
  const ColorMask bit = ColorMask{1} << (c - 1);
  std::optional<std::vector<int>> result;
  const int pair[2][2] = {{u, v}, {v, u}};
  for (int p = 0; p < o.length && !result; ++p)
    for (const auto& ends : pair) {
      const int a = ends[0], b = ends[1];
      const int right = o.length - p - 1;
      // left arm: p edges walked outward from a, later reversed
      std::vector<int> arm{a};
      auto on_arm = [&](std::vector<int>& left, const detail::Frontier& f) {
        if (o.kind == WitnessKind::Path && std::find(left.begin(), left.end(), b) != left.end()) return false;
        std::vector<int> seq(left.rbegin(), left.rend());
        if (o.kind == WitnessKind::Walk && o.non_backtracking && p >= 1 && seq[static_cast<std::size_t>(p) - 1] == b)
          return false;
        seq.push_back(b);
        if (!search.any_completable(b, right, f)) return false;
        if (search.dfs(seq, f, o.length, [](std::vector<int>&, const detail::Frontier&) { return true; })) {
          result = seq;
          return true;
        }
        return false;
      };
      const detail::Frontier start{bit};
      if (search.dfs(arm, start, p, on_arm)) break;
    }
  if (!result) return std::nullopt;
  return detail::make_witness(s, o, std::move(*result));
}

}  // namespace rainbow::real
