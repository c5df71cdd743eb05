#pragma once

// Catalog of the scalar inequalities used by the case analysis. Each
// real-variable entry is stated as a "gap" function, gap = rhs - lhs of the
// strict inequality lhs > rhs that a counterexample would have to satisfy;
// the entry verifies when gap > 0 on the checked interval, i.e. no point of
// that interval solves the inequality.
//
// Grid verification: with N intervals of width h and |gap'| <= L, every
// point lies within h/2 of a grid node, so gap > L h / 2 at all nodes
// implies gap > 0 everywhere. An entry whose gap vanishes to order m at the
// lower endpoint is checked through q(t) = gap(t) / (t - lo)^m on the nodes
// t > lo, with the bound L on |q'| and margin L h.

#include "rainbow/extremal.hpp"
#include "rainbow/rational.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rainbow::audit {

enum class CertificateKind { NoSolution, ImpliedLowerBound, ImpliedUpperBound, ClosedFormValue };

inline std::string_view kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::NoSolution: return "no-solution";
    case CertificateKind::ImpliedLowerBound: return "implied-lower-bound";
    case CertificateKind::ImpliedUpperBound: return "implied-upper-bound";
    case CertificateKind::ClosedFormValue: return "closed-form-value";
  }
  return "?";
}

struct CertificateReport {
  std::string id;
  std::string statement;
  std::string domain;
  CertificateKind kind = CertificateKind::NoSolution;
  bool verified = false;
  // Boundary of the feasible set for bound entries, smallest gap for
  // no-solution entries, computed value for closed forms.
  double extremal_value = std::nan("");
  std::string threshold;  // claimed constant, verbatim; empty if none
  std::size_t grid = 0;
  double lipschitz = std::nan("");
  double margin = std::nan("");
  double min_scaled_gap = std::nan("");  // smallest gap (or quotient) seen on the grid
  std::string note;
};

inline constexpr std::size_t min_certificate_grid = 1000;

namespace detail {

using Real = long double;
using Fn = std::function<Real(Real)>;

inline Real sq(Real v) { return v * v; }
inline Real rt(Real v) { return std::sqrt(v); }  // NaN below zero

// 1 - sqrt(f(k) / f(k-2)) for k = 7, 8.
inline Real hub_room_7() { return 1.0L - 3.0L / rt(13.0L); }
inline Real hub_room_8() { return 1.0L - rt(3.0L / 5.0L); }

// Radicands of the lower bounds on a positive pair weight and on the pair
// total of a color without single weight (five colors).
inline Real cover_radicand(Real x) { return 1 - 6 * x + 27 * x * x + 6 * x * rt(1 - 6 * x + 18 * x * x); }
inline Real empty_single_radicand(Real x) {
  return -54 * x * x + 30 * x - 5 + (6 - 12 * x) * rt(18 * x * x - 6 * x + 1);
}
inline Real pair_threshold(Real x) { return (rt(1 - 6 * x + 18 * x * x) - 1 + 3 * x) / 3; }

struct ScanResult {
  bool ok = true;
  bool saw_nan = false;
  Real min_value = std::numeric_limits<Real>::infinity();
  Real margin = 0;
};

inline ScanResult scan_positive(const Fn& gap, Real lo, Real hi, std::size_t n, Real lipschitz, int order) {
  ScanResult r;
  const Real h = (hi - lo) / static_cast<Real>(n);
  r.margin = order == 0 ? lipschitz * h / 2 : lipschitz * h;
  if (order > 0) {
    // the endpoint itself: gap = 0 there, so the strict inequality fails
    const Real g0 = gap(lo);
    if (std::isnan(g0)) r.saw_nan = true;
    if (!(g0 >= -1e-15L)) r.ok = false;
  }
  for (std::size_t i = order == 0 ? 0 : 1; i <= n; ++i) {
    const Real t = i == n ? hi : lo + h * static_cast<Real>(i);
    Real v = gap(t);
    if (order > 0) v /= std::pow(t - lo, static_cast<Real>(order));
    if (std::isnan(v)) {
      r.saw_nan = true;
      r.ok = false;
      continue;
    }
    if (v < r.min_value) r.min_value = v;
    if (!(v > r.margin)) r.ok = false;
  }
  return r;
}

/// First point moving from `from` toward `to` where gap <= 0, refined by
/// bisection; NaN if the gap stays positive (or undefined) all the way.
inline Real find_boundary(const Fn& gap, Real from, Real to, std::size_t n) {
  const Real h = (to - from) / static_cast<Real>(n);
  Real prev = from;
  for (std::size_t i = 1; i <= n; ++i) {
    const Real t = i == n ? to : from + h * static_cast<Real>(i);
    const Real v = gap(t);
    if (!std::isnan(v) && v <= 0) {
      Real good = prev, bad = t;
      for (int it = 0; it < 200 && good != bad; ++it) {
        const Real mid = (good + bad) / 2;
        const Real g = gap(mid);
        if (!std::isnan(g) && g <= 0) bad = mid;
        else good = mid;
      }
      return bad;
    }
    prev = t;
  }
  return std::numeric_limits<Real>::quiet_NaN();
}

inline std::string fmt(Real v) {
  std::ostringstream os;
  os.precision(6);
  os << static_cast<double>(v);
  return os.str();
}

struct GridEntry {
  std::string id;
  std::string statement;
  std::string variable;
  CertificateKind kind;
  Real domain_lo, domain_hi;  // where every radicand is nonnegative or the variable lives
  std::string domain_text;
  Real check_lo, check_hi;
  std::string threshold;  // verbatim claimed constant
  Real lipschitz;         // documented bound on |gap'| (or |q'| with tangency)
  int tangency;           // order of the zero of gap at check_lo
  Fn gap;
  std::string note;
};

inline CertificateReport run_grid(const GridEntry& e, std::size_t n) {
  CertificateReport r;
  r.id = e.id;
  r.statement = e.statement;
  r.kind = e.kind;
  r.threshold = e.threshold;
  r.grid = n;
  r.lipschitz = static_cast<double>(e.lipschitz);
  r.domain = e.domain_text + "; checked " + e.variable + " in [" + fmt(e.check_lo) + ", " + fmt(e.check_hi) + "]";
  const ScanResult s = scan_positive(e.gap, e.check_lo, e.check_hi, n, e.lipschitz, e.tangency);
  r.verified = s.ok && !s.saw_nan;
  r.margin = static_cast<double>(s.margin);
  r.min_scaled_gap = static_cast<double>(s.min_value);
  switch (e.kind) {
    case CertificateKind::ImpliedLowerBound:
      r.extremal_value = static_cast<double>(find_boundary(e.gap, e.check_hi, e.domain_hi, n));
      break;
    case CertificateKind::ImpliedUpperBound:
      r.extremal_value = static_cast<double>(find_boundary(e.gap, e.check_lo, e.domain_lo, n));
      break;
    default:
      r.extremal_value = e.tangency == 0 ? static_cast<double>(s.min_value) : 0.0;
      break;
  }
  r.note = e.note;
  if (e.tangency > 0)
    r.note += (r.note.empty() ? "" : "; ") + std::string("gap vanishes to order ") + std::to_string(e.tangency) +
              " at " + e.variable + " = " + fmt(e.check_lo) + "; grid checks gap / (" + e.variable + " - " +
              fmt(e.check_lo) + ")^" + std::to_string(e.tangency);
  if (s.saw_nan) r.note += (r.note.empty() ? "" : "; ") + std::string("undefined value on the checked interval");
  return r;
}

inline const std::vector<GridEntry>& grid_entries() {
  static const std::vector<GridEntry> entries = [] {
    std::vector<GridEntry> v;
    const Real third = 1.0L / 3;
    v.push_back({"k3-cover-sum-no-solution", "2 + x > 3/4 + 3 sqrt(1/4 + x^2)", "x", CertificateKind::NoSolution,
                 0, 1, "x in [0, 1]", 0, 1, "", 20, 0,
                 [](Real x) { return 0.75L + 3 * rt(0.25L + x * x) - 2 - x; },
                 "minimum at x = 1/sqrt(32)"});
    v.push_back({"k5-no-hub-one-empty-single", "2 > 4/9 + 4 sqrt(1/9 + 2 b^2) + 1/3 - 2 b", "b",
                 CertificateKind::NoSolution, 0, 0.5L, "b in [0, 1/2]", 0, 0.5L, "", 20, 0,
                 [](Real b) { return 4.0L / 9 + 4 * rt(1.0L / 9 + 2 * b * b) + 1.0L / 3 - 2 * b - 2; }, ""});
    v.push_back({"k5-no-hub-two-empty-singles",
                 "2 > 2 sqrt(1/9 + 2 b (1/3 - b)) + 3 sqrt(1/9 + 2 b^2) + 1/3 - 2 b", "b",
                 CertificateKind::ImpliedLowerBound, 0, 0.45L, "b in [0, 0.45]", 0, 0.39L, "0.39", 400, 3,
                 [](Real b) {
                   return 2 * rt(1.0L / 9 + 2 * b * (1.0L / 3 - b)) + 3 * rt(1.0L / 9 + 2 * b * b) + 1.0L / 3 - 2 * b - 2;
                 },
                 "|q'| <= 182 on (0, 0.39]"});
    v.push_back({"k5-all-singles-one-pair-no-solution",
                 "2 + 3x > 5/9 + 4/9 + (1/3) sqrt(1 - 6x + 27x^2 + 6x sqrt(18x^2 - 6x + 1)) + 3 sqrt(1/9 + x^2)", "x",
                 CertificateKind::NoSolution, 0, third, "x in [0, 1/3]", 0, third, "", 20, 0,
                 [](Real x) { return 1 + rt(cover_radicand(x)) / 3 + 3 * rt(1.0L / 9 + x * x) - 2 - 3 * x; }, ""});
    v.push_back({"k5-all-singles-hub-lower", "2 + 3x > 5/9 + 5/9 + 4 sqrt(1/9 + x^2)", "x",
                 CertificateKind::ImpliedLowerBound, 0, third, "x in [0, 1/3]", 0, 0.31L, "0.31", 20, 0,
                 [](Real x) { return 10.0L / 9 + 4 * rt(1.0L / 9 + x * x) - 2 - 3 * x; }, ""});
    v.push_back({"k5-all-singles-hub-upper",
                 "2 + 3x > (2/3) sqrt(1 - 6x + 27x^2 + 6x sqrt(1 - 6x + 18x^2)) + 4 sqrt(1/9 + x^2)", "x",
                 CertificateKind::ImpliedUpperBound, 0, third, "x in [0, 1/3]", 0.27L, third, "0.27", 20, 0,
                 [](Real x) { return 2 * rt(cover_radicand(x)) / 3 + 4 * rt(1.0L / 9 + x * x) - 2 - 3 * x; }, ""});
    v.push_back({"k5-empty-single-hub-upper",
                 "2 + 2x > (1/3) sqrt(-54x^2 + 30x - 5 + (6 - 12x) sqrt(18x^2 - 6x + 1)) + 5 sqrt(1/9 + x^2)", "x",
                 CertificateKind::ImpliedUpperBound, 0, 0.35L, "x in [0, 0.35]", 0.27L, 0.35L, "0.27", 20, 0,
                 [](Real x) { return rt(empty_single_radicand(x)) / 3 + 5 * rt(1.0L / 9 + x * x) - 2 - 2 * x; },
                 "no solution in [0.27, 0.35]; together with x < 1/3 this leaves x < 0.27"});
    v.push_back({"k5-one-empty-single-hub-lower",
                 "2 + 2x > 4/9 + (1/3) sqrt(-54x^2 + 30x - 5 + (6 - 12x) sqrt(18x^2 - 6x + 1)) + sqrt(1/9 - x/3) + x + "
                 "3 sqrt(1/9 + x^2)",
                 "x", CertificateKind::ImpliedLowerBound, 0, third, "x in [0, 1/3]", 0, 0.28L, "0.28", 20, 0,
                 [](Real x) {
                   return 4.0L / 9 + rt(empty_single_radicand(x)) / 3 + rt(1.0L / 9 - x / 3) + x +
                          3 * rt(1.0L / 9 + x * x) - 2 - 2 * x;
                 },
                 ""});
    v.push_back({"k5-two-empty-singles-hub-lower",
                 "2 + x > (2/3) sqrt(-54x^2 + 30x - 5 + (6 - 12x) sqrt(18x^2 - 6x + 1)) + 2 sqrt(1/9 - x/3) + 2x + "
                 "2 sqrt(1/9 + x^2)",
                 "x", CertificateKind::ImpliedLowerBound, 0, third, "x in [0, 1/3]", 0, 0.33L, "0.33", 200, 2,
                 [](Real x) {
                   return 2 * rt(empty_single_radicand(x)) / 3 + 2 * rt(1.0L / 9 - x / 3) + 2 * x +
                          2 * rt(1.0L / 9 + x * x) - 2 - x;
                 },
                 "|q'| <= 105 on (0, 0.33]"});
    v.push_back({"k7-no-hub-no-solution", "2 > 8 sqrt(1/13 + 2 b^2) - 2 b", "b", CertificateKind::NoSolution, 0,
                 0.5L, "b in [0, 1/2]", 0, 0.5L, "", 20, 0,
                 [](Real b) { return 8 * rt(1.0L / 13 + 2 * b * b) - 2 * b - 2; },
                 "the k >= 7 family (k+1) sqrt(1/(2k-1) + 2b^2) - 2b is increasing in k"});
    v.push_back({"k7-hub-lower", "2 + 5x > 6 sqrt(1/13 - (1 - 3/sqrt(13)) x) + 6x + 2 sqrt(1/13 + x^2)", "x",
                 CertificateKind::ImpliedLowerBound, 0, (1.0L / 13) / hub_room_7(), "x in [0, (1/13) / (1 - 3/sqrt(13))]",
                 0, 0.38L, "0.38", 20, 0,
                 [](Real x) { return 6 * rt(1.0L / 13 - hub_room_7() * x) + 6 * x + 2 * rt(1.0L / 13 + x * x) - 2 - 5 * x; },
                 ""});
    const Real k8_hi = (1.0L / 15) / hub_room_8();
    const std::string k8_domain = "x in [0, (1/15) / (1 - sqrt(3/5))]";
    v.push_back({"k8-all-singles-hub-lower",
                 "2 + 6x > 8/15 + 7/15 + 5 sqrt(1/15 - (1 - sqrt(3/5)) x) + 5x + 2 sqrt(1/15 + x^2)", "x",
                 CertificateKind::ImpliedLowerBound, 0, k8_hi, k8_domain, 0, 0.24L, "0.24", 20, 0,
                 [](Real x) {
                   return 1 + 5 * rt(1.0L / 15 - hub_room_8() * x) + 5 * x + 2 * rt(1.0L / 15 + x * x) - 2 - 6 * x;
                 },
                 ""});
    v.push_back({"k8-one-empty-single-hub-lower",
                 "2 + 6x > sqrt(1/15) + x + 7/15 + 5 sqrt(1/15 - (1 - sqrt(3/5)) x) + 5x + 2 sqrt(1/15 + x^2)", "x",
                 CertificateKind::ImpliedLowerBound, 0, k8_hi, k8_domain, 0, 0.23L, "0.23", 20, 0,
                 [](Real x) {
                   return rt(1.0L / 15) + x + 7.0L / 15 + 5 * rt(1.0L / 15 - hub_room_8() * x) + 5 * x +
                          2 * rt(1.0L / 15 + x * x) - 2 - 6 * x;
                 },
                 ""});
    v.push_back({"k8-two-empty-singles-hub-lower",
                 "2 + 6x > 2 sqrt(1/15) + 2x + 5 sqrt(1/15 - (1 - sqrt(3/5)) x) + 5x + 2 sqrt(1/15 + x^2)", "x",
                 CertificateKind::ImpliedLowerBound, 0, k8_hi, k8_domain, 0, 0.24L, "0.24", 20, 0,
                 [](Real x) {
                   return 2 * rt(1.0L / 15) + 2 * x + 5 * rt(1.0L / 15 - hub_room_8() * x) + 5 * x +
                          2 * rt(1.0L / 15 + x * x) - 2 - 6 * x;
                 },
                 ""});
    return v;
  }();
  return entries;
}

inline CertificateReport closed_form(std::string id, std::string statement, std::string domain, CertificateKind kind,
                                     bool verified, double value, std::string threshold, std::size_t grid,
                                     std::string note) {
  CertificateReport r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  r.domain = std::move(domain);
  r.kind = kind;
  r.verified = verified;
  r.extremal_value = value;
  r.threshold = std::move(threshold);
  r.grid = grid;
  r.note = std::move(note);
  return r;
}

// Convex quadratic p <= 0 at both ends of [lo, hi] means p <= 0 throughout.
template <class P>
bool convex_nonpositive(P p, const Rational& lo, const Rational& hi) {
  return p(lo) <= 0 && p(hi) <= 0;
}

/// Hub bound 1 - sqrt(f(k)/f(k-2)) < c  <=>  (1 - c)^2 < f(k)/f(k-2), for c < 1.
inline CertificateReport hub_upper(int k, const std::string& id, const std::string& claimed, std::size_t grid) {
  const Rational c = parse_rational(claimed);
  const Rational ratio = rainbow_threshold(k) / rainbow_threshold(k - 2);
  const Rational room = 1 - c;
  const bool ok = c < 1 && room * room < ratio;
  const double value = 1.0 - std::sqrt(ratio.get_d());
  return closed_form(id, "x < 1 - sqrt(f(" + std::to_string(k) + ") / f(" + std::to_string(k - 2) + ")) = " +
                             std::to_string(value),
                     "k = " + std::to_string(k), CertificateKind::ImpliedUpperBound, ok, value, claimed, grid,
                     "exact: (1 - " + claimed + ")^2 = " + to_string(Rational(room * room)) + " < " + to_string(ratio));
}

/// sqrt(p) + sqrt(q) as v / sqrt(m) with v rational, when p m and q m are
/// perfect squares.
inline std::optional<Rational> sqrt_sum_over_root(const Rational& p, const Rational& q, const Rational& m) {
  auto sp = exact_sqrt(Rational(p * m));
  auto sq_ = exact_sqrt(Rational(q * m));
  if (!sp || !sq_) return std::nullopt;
  return Rational(*sp + *sq_);
}

inline CertificateReport gap_lemma_exact(int k, std::size_t grid) {
  const Rational f = rainbow_threshold(k);
  const Rational ratio = f / rainbow_threshold(k - 2);
  const Rational m = 1 / f;  // f = 1/m for every k
  const auto v = sqrt_sum_over_root(ratio, f, m);
  const std::string stmt = "sqrt(f(k)/f(k-2)) + sqrt(f(k)) = " + (v ? to_string(*v) : std::string("?")) + " / sqrt(" +
                           to_string(m) + ")";
  bool ok = v.has_value() && (*v) * (*v) > m;
  double value = v ? v->get_d() / std::sqrt(m.get_d()) : std::nan("");
  return closed_form("gap-lemma-k" + std::to_string(k), stmt + " > 1", "k = " + std::to_string(k),
                     CertificateKind::ClosedFormValue, ok, value, v ? to_string(*v) + "/sqrt(" + to_string(m) + ")" : "",
                     grid, "exact: (" + (v ? to_string(*v) : std::string("?")) + ")^2 > " + to_string(m));
}

}  // namespace detail

inline std::vector<std::string> certificate_ids() {
  std::vector<std::string> ids;
  for (const auto& e : detail::grid_entries()) ids.push_back(e.id);
  for (const char* id :
       {"k3-private-pair-lower", "k3-private-pair-split", "k5-hub-upper-closed-form", "k5-pair-threshold-closed-form",
        "k5-cover-bound-closed-form", "k5-empty-single-bound-closed-form", "k7-no-hub-monotone-in-k", "k7-hub-upper",
        "k8-hub-upper", "large-k-no-solution", "gap-lemma-small-k", "gap-lemma-k7", "gap-lemma-k8",
        "gap-lemma-large-k", "pairless-maximizer"})
    ids.emplace_back(id);
  return ids;
}

/// Checks one catalog entry on a uniform grid of `grid` intervals.
inline CertificateReport check_certificate(std::string_view id, std::size_t grid) {
  using namespace detail;
  if (grid < min_certificate_grid) throw std::invalid_argument("grid must be at least 1000");
  for (const auto& e : grid_entries())
    if (e.id == id) return run_grid(e, grid);

  const Real third = 1.0L / 3;
  auto max_residual = [grid](Real lo, Real hi, const std::function<Real(Real)>& res) {
    Real worst = 0;
    for (std::size_t i = 0; i <= grid; ++i) {
      const Real t = lo + (hi - lo) * static_cast<Real>(i) / static_cast<Real>(grid);
      const Real r = std::abs(res(t));
      if (std::isnan(r)) return std::numeric_limits<Real>::infinity();
      worst = std::max(worst, r);
    }
    return worst;
  };
  constexpr Real residual_tol = 1e-14L;

  if (id == "k3-private-pair-lower") {
    auto p = [](const Rational& b) { return Rational(4 * b * b + (1 - b) * (1 - b) - 1); };
    const Rational lo(0), hi = make_rational(2, 5);
    return closed_form(std::string(id), "4 b^2 + (1 - b)^2 > 1", "b in [0, 1]; checked b in [0, 2/5]",
                       CertificateKind::ImpliedLowerBound, convex_nonpositive(p, lo, hi), 0.4, "2/5", grid,
                       "exact: convex quadratic with roots 0 and 2/5");
  }
  if (id == "k3-private-pair-split") {
    auto p = [](const Rational& b) { return Rational((1 - b) * (1 - b) + 2 * b * b - make_rational(3, 4)); };
    return closed_form(std::string(id), "(1 - b)^2 + 2 b^2 > 3/4", "b in [0, 1]; checked b in [1/6, 1/2]",
                       CertificateKind::NoSolution,
                       convex_nonpositive(p, make_rational(1, 6), make_rational(1, 2)), 0.0, "1/6, 1/2", grid,
                       "exact: convex quadratic with roots 1/6 and 1/2, so b < 1/6 or b > 1/2");
  }
  if (id == "k5-hub-upper-closed-form") {
    const Rational ratio = rainbow_threshold(5) / rainbow_threshold(3);
    const auto root = exact_sqrt(ratio);
    const bool ok = root && 1 - *root == make_rational(1, 3);
    return closed_form(std::string(id), "1 - sqrt(f(5) / f(3)) = 1/3", "k = 5", CertificateKind::ClosedFormValue, ok,
                       root ? Rational(1 - *root).get_d() : std::nan(""), "1/3", grid, "exact");
  }
  if (id == "k5-pair-threshold-closed-form") {
    const Real worst = max_residual(0, third, [](Real x) {
      const Real beta = pair_threshold(x);
      return rt(1.0L / 9 + 2 * beta * x + x * x) - beta - 1.0L / 3;
    });
    return closed_form(std::string(id),
                       "beta = (sqrt(1 - 6x + 18x^2) - 1 + 3x) / 3 solves sqrt(1/9 + 2 beta x + x^2) = beta + 1/3",
                       "x in [0, 1/3]", CertificateKind::ClosedFormValue, worst <= residual_tol,
                       static_cast<double>(worst), "", grid, "value is the largest residual on the grid");
  }
  if (id == "k5-cover-bound-closed-form") {
    const Real worst = max_residual(0, third, [](Real x) {
      const Real beta = pair_threshold(x);
      return rt(cover_radicand(x)) / 3 - rt(1.0L / 9 + 2 * beta * x + x * x);
    });
    return closed_form(std::string(id),
                       "(1/3) sqrt(1 - 6x + 27x^2 + 6x sqrt(1 - 6x + 18x^2)) = sqrt(1/9 + 2 beta x + x^2)",
                       "x in [0, 1/3]", CertificateKind::ClosedFormValue, worst <= residual_tol,
                       static_cast<double>(worst), "", grid, "value is the largest residual on the grid");
  }
  if (id == "k5-empty-single-bound-closed-form") {
    const Real worst = max_residual(0, 0.35L, [](Real x) {
      const Real beta = pair_threshold(x);
      return 1.0L / 9 + 2 * beta * (1.0L / 3 - beta) - empty_single_radicand(x) / 9;
    });
    Real smallest = std::numeric_limits<Real>::infinity();
    for (std::size_t i = 0; i <= grid; ++i)
      smallest = std::min(smallest, empty_single_radicand(0.35L * static_cast<Real>(i) / static_cast<Real>(grid)));
    // |d radicand / dx| <= 20 on [0, 0.35]
    const bool nonneg = smallest > 20 * 0.35L / static_cast<Real>(grid) / 2;
    return closed_form(std::string(id),
                       "1/9 + 2 beta (1/3 - beta) = (1/9) (-54x^2 + 30x - 5 + (6 - 12x) sqrt(18x^2 - 6x + 1))",
                       "x in [0, 0.35]", CertificateKind::ClosedFormValue, worst <= residual_tol && nonneg,
                       static_cast<double>(worst), "", grid,
                       "value is the largest residual; the radicand stays >= " + fmt(smallest) + " on [0, 0.35]");
  }
  if (id == "k7-no-hub-monotone-in-k") {
    // (k+1) sqrt(1/(2k-1) + 2b^2) - 2b increasing in k for k >= 7, checked on a b grid
    bool ok = true;
    Real worst_step = std::numeric_limits<Real>::infinity();
    const std::size_t bs = std::min<std::size_t>(grid, 2000);
    for (std::size_t i = 0; i <= bs; ++i) {
      const Real b = 0.5L * static_cast<Real>(i) / static_cast<Real>(bs);
      auto h = [b](int k) { return (k + 1) * rt(1.0L / (2 * k - 1) + 2 * b * b); };
      Real prev = h(7);
      for (int k = 8; k <= 1000; ++k) {
        const Real cur = h(k);
        worst_step = std::min(worst_step, cur - prev);
        if (!(cur > prev)) ok = false;
        prev = cur;
      }
    }
    return closed_form(std::string(id), "(k+1) sqrt(1/(2k-1) + 2b^2) - 2b is increasing in k >= 7",
                       "k in [7, 1000], b in [0, 1/2]", CertificateKind::ClosedFormValue, ok,
                       static_cast<double>(worst_step), "", grid,
                       "for k beyond the table: squared, (k+1)^2/(2k-1) and 2b^2 (k+1)^2 are both increasing");
  }
  if (id == "k7-hub-upper") return hub_upper(7, std::string(id), "0.17", grid);
  if (id == "k8-hub-upper") return hub_upper(8, std::string(id), "0.23", grid);
  if (id == "large-k-no-solution") {
    // F(k) = (k-1) sqrt(1/(2k-1) - w^2) + 2 sqrt(1/(2k-1)) - 2, w = 1 - sqrt((2k-5)/(2k-1)),
    // w written as t / (1 + sqrt(1 - t)) with t = 4/(2k-1) to avoid cancellation.
    constexpr std::int64_t k_max = 1000000;
    bool ok = true;
    Real smallest = std::numeric_limits<Real>::infinity();
    std::int64_t arg = 0;
    for (std::int64_t k = 9; k <= k_max; ++k) {
      const Real m = static_cast<Real>(2 * k - 1);
      const Real t = 4 / m;
      const Real w = t / (1 + rt(1 - t));
      const Real F = static_cast<Real>(k - 1) * rt(1 / m - w * w) + 2 * rt(1 / m) - 2;
      if (!(F > 1e-12L)) ok = false;
      if (F < smallest) {
        smallest = F;
        arg = k;
      }
    }
    // Tail: w <= t gives F(k) >= G(k) - 2 with G(k) = (k-1) sqrt(2k-17) / (2k-1),
    // increasing in k since (k-1)/(2k-1) and 2k-17 both increase.
    const Real m = static_cast<Real>(2 * k_max - 1);
    const Real tail = static_cast<Real>(k_max - 1) * rt(static_cast<Real>(2 * k_max - 17)) / m;
    ok = ok && tail > 2;
    return closed_form(std::string(id),
                       "2 > (k-1) sqrt(1/(2k-1) - (1 - sqrt((2k-5)/(2k-1)))^2) + 2 sqrt(1/(2k-1))",
                       "k >= 9; checked k in [9, 1000000]", CertificateKind::NoSolution, ok,
                       static_cast<double>(smallest), "", grid,
                       "smallest gap at k = " + std::to_string(arg) +
                           "; beyond the table the gap is at least (k-1) sqrt(2k-17)/(2k-1) - 2, increasing in k and "
                           "equal to " +
                           fmt(tail - 2) + " at k = 1000000");
  }
  if (id == "gap-lemma-small-k") {
    bool ok = true;
    for (int k = 3; k <= 6; ++k) {
      const Rational f = rainbow_threshold(k);
      const auto a = exact_sqrt(Rational(f / rainbow_threshold(k - 2)));
      const auto b = exact_sqrt(f);
      ok = ok && a && b && *a + *b == 1;
    }
    return closed_form(std::string(id), "sqrt(f(k)/f(k-2)) + sqrt(f(k)) = 1", "k in [3, 6]",
                       CertificateKind::ClosedFormValue, ok, 1.0, "1", grid, "exact");
  }
  if (id == "gap-lemma-k7") return gap_lemma_exact(7, grid);
  if (id == "gap-lemma-k8") return gap_lemma_exact(8, grid);
  if (id == "gap-lemma-large-k") {
    // (sqrt(2k-5) + 1) / sqrt(2k-1) > 1  <=>  2 sqrt(2k-5) > 3  <=>  4 (2k-5) > 9
    bool ok = true;
    for (std::int64_t k = 9; k <= 1000000; ++k) ok = ok && 4 * (2 * k - 5) > 9;
    return closed_form(std::string(id), "(sqrt(2k-5) + 1) / sqrt(2k-1) > 1", "k >= 9; checked k in [9, 1000000]",
                       CertificateKind::ClosedFormValue, ok, (std::sqrt(13.0) + 1) / std::sqrt(17.0), "1", grid,
                       "squaring twice reduces it to 4 (2k - 5) > 9, linear and increasing in k; value shown at k = 9");
  }
  if (id == "pairless-maximizer") {
    // h(x) = ((1-x)/k)^2 + 2x(1-x)/k, concave, stationary at (k-1)/(2k-1) with value 1/(2k-1) <= f(k)
    bool ok = true;
    for (int k = 1; k <= 10000; ++k) {
      const Rational kk(k);
      const Rational x0 = Rational(k - 1) / Rational(2 * k - 1);
      const Rational lead = 1 / (kk * kk) - 2 / kk;
      const Rational slope = -2 * (1 - x0) / (kk * kk) + 2 * (1 - 2 * x0) / kk;
      const Rational value = (1 - x0) * (1 - x0) / (kk * kk) + 2 * x0 * (1 - x0) / kk;
      ok = ok && lead < 0 && slope == 0 && value == Rational(1) / Rational(2 * k - 1) &&
           value <= rainbow_threshold(k);
    }
    return closed_form(std::string(id), "max over x of ((1-x)/k)^2 + 2x(1-x)/k is 1/(2k-1), at x = (k-1)/(2k-1)",
                       "k in [1, 10000]", CertificateKind::ClosedFormValue, ok, 1.0 / 13, "", grid,
                       "exact; value shown at k = 7");
  }
  throw std::invalid_argument("unknown certificate id '" + std::string(id) + "'");
}

inline std::vector<CertificateReport> check_all_certificates(std::size_t grid) {
  std::vector<CertificateReport> out;
  for (const auto& id : certificate_ids()) out.push_back(check_certificate(id, grid));
  return out;
}

}  // namespace rainbow::audit
