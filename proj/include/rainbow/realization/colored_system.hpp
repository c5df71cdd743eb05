#pragma once

// k graphs on a common vertex set [1, n]. Each unordered pair stores the
// mask of colors containing it, so k is capped at 64.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rainbow::real {

using ColorMask = std::uint64_t;
constexpr int max_colors = 64;

class EdgeListError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ColoredEdge {
  int color;  // 1-based
  int u, v;   // 1-based, u < v
  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

class ColoredGraphSystem {
 public:
  ColoredGraphSystem(int n, int k) : n_(n), k_(k), adj_(static_cast<std::size_t>(n) + 1), counts_(k, 0) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (k < 1 || k > max_colors) throw std::invalid_argument("color count must lie in [1, 64]");
  }

  int n() const { return n_; }
  int k() const { return k_; }

  /// Adds edge {u, v} to color c (all 1-based). Returns false when already present.
  bool add_edge(int c, int u, int v) {
    check(c, u, v);
    if (u > v) std::swap(u, v);
    ColorMask& m = masks_[key(u, v)];
    const ColorMask bit = ColorMask{1} << (c - 1);
    if (m & bit) return false;
    if (m == 0) {
      insert_sorted(adj_[u], v);
      insert_sorted(adj_[v], u);
    }
    m |= bit;
    ++counts_[c - 1];
    return true;
  }

  bool has_edge(int c, int u, int v) const { return (colors_of(u, v) >> (c - 1)) & 1U; }

  /// Mask of 0-based colors on {u, v}; zero when absent.
  ColorMask colors_of(int u, int v) const {
    if (u == v) return 0;
    if (u > v) std::swap(u, v);
    auto it = masks_.find(key(u, v));
    return it == masks_.end() ? 0 : it->second;
  }

  /// Vertices sharing at least one color with v, ascending.
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

  const std::vector<long long>& edge_counts() const { return counts_; }

  /// Edges sorted by color, then lexicographically.
  std::vector<ColoredEdge> edges() const {
    std::vector<ColoredEdge> out;
    for (int u = 1; u <= n_; ++u)
      for (int v : adj_[u])
        if (v > u) {
          const ColorMask m = colors_of(u, v);
          for (int c = 0; c < k_; ++c)
            if ((m >> c) & 1U) out.push_back({c + 1, u, v});
        }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.color < b.color; });
    return out;
  }

 private:
  static std::uint64_t key(int u, int v) { return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v); }
  static void insert_sorted(std::vector<int>& list, int v) { list.insert(std::lower_bound(list.begin(), list.end(), v), v); }
  void check(int c, int u, int v) const {
    if (c < 1 || c > k_) throw std::out_of_range("color " + std::to_string(c) + " outside [1, " + std::to_string(k_) + "]");
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw std::out_of_range("edge endpoint outside [1, " + std::to_string(n_) + "]");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }

  int n_, k_;
  std::vector<std::vector<int>> adj_;
  std::unordered_map<std::uint64_t, ColorMask> masks_;
  std::vector<long long> counts_;
};

inline std::vector<long long> edge_counts(const ColoredGraphSystem& s) { return s.edge_counts(); }

enum class WitnessKind { Path, Walk };

struct RainbowWitness {
  WitnessKind kind = WitnessKind::Path;
  std::vector<int> vertices;  // 1-based, length l + 1
  std::vector<int> colors;    // 1-based, length l
  friend bool operator==(const RainbowWitness&, const RainbowWitness&) = default;
};

/// Empty when the witness satisfies every invariant against `s`, else the
/// first violated one.
inline std::string witness_violation(const ColoredGraphSystem& s, const RainbowWitness& w, bool non_backtracking = false) {
  const std::size_t l = w.colors.size();
  if (l == 0 || w.vertices.size() != l + 1) return "vertex and color sequence lengths disagree";
  for (std::size_t t = 0; t < l; ++t) {
    const int c = w.colors[t];
    if (c < 1 || c > s.k()) return "color out of range";
    if (!s.has_edge(c, w.vertices[t], w.vertices[t + 1])) return "slot " + std::to_string(t + 1) + " is not an edge of its color";
    for (std::size_t r = 0; r < t; ++r)
      if (w.colors[r] == c) return "repeated color";
  }
  if (w.kind == WitnessKind::Path) {
    auto sorted = w.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "path repeats a vertex";
  } else if (non_backtracking) {
    for (std::size_t t = 2; t <= l; ++t)
      if (w.vertices[t] == w.vertices[t - 2]) return "walk backtracks";
  }
  return {};
}

inline std::string format_witness(const RainbowWitness& w) {
  std::ostringstream os;
  os << (w.kind == WitnessKind::Path ? "PATH" : "WALK");
  for (int v : w.vertices) os << ' ' << v;
  os << " /";
  for (int c : w.colors) os << ' ' << c;
  return os.str();
}

inline void write_edge_list(std::ostream& os, const ColoredGraphSystem& s) {
  os << s.n() << ' ' << s.k() << '\n';
  for (const auto& e : s.edges()) os << e.color << ' ' << e.u << ' ' << e.v << '\n';
}

inline ColoredGraphSystem read_edge_list(std::istream& is) {
  std::string line;
  int lineno = 0;
  auto next = [&]() {
    while (std::getline(is, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) { throw EdgeListError("line " + std::to_string(lineno) + ": " + what); };
  if (!next()) throw EdgeListError("empty edge list: expected header \"n k\"");
  long long n = -1, k = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> k) || (hs >> extra)) fail("header must be \"n k\"");
    if (n < 0) fail("vertex count must be nonnegative");
    if (k < 1 || k > max_colors) fail("color count must lie in [1, 64]");
  }
  ColoredGraphSystem s(static_cast<int>(n), static_cast<int>(k));
  while (next()) {
    std::istringstream ls(line);
    long long c, u, v;
    std::string extra;
    if (!(ls >> c >> u >> v) || (ls >> extra)) fail("edge line must be \"c u v\"");
    if (c < 1 || c > k) fail("color " + std::to_string(c) + " outside [1, " + std::to_string(k) + "]");
    if (!(1 <= u && u < v && v <= n)) fail("endpoints must satisfy 1 <= u < v <= " + std::to_string(n));
    if (!s.add_edge(static_cast<int>(c), static_cast<int>(u), static_cast<int>(v)))
      fail("duplicate edge " + std::to_string(c) + " " + std::to_string(u) + " " + std::to_string(v));
  }
  return s;
}

}  // namespace rainbow::real
