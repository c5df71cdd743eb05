#pragma once

// Pointwise evaluation of the structural inequalities that hold at a
// hypothetical minimal counterexample. At an arbitrary graph they may fail;
// the evaluator only reports. Comparisons involving square roots are decided
// exactly by squaring, with the displayed sides rounded to double.

#include "rainbow/clustered_graph.hpp"
#include "rainbow/extremal.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rainbow::audit {

enum class Verdict { Holds, Fails, NotApplicable };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

enum class ClaimId {
  CoverLower,          // c_i > sqrt(f(k) + 2 b_i x + x^2)
  PairMassUpper,       // a_i + a_j + b_ij < 1 - sqrt(f(k) / f(k-2))
  PairCoverMax,        // max(c_i, c_j) > sqrt(f(k) - (1 - sqrt(f(k)/f(k-2))) x) + x
  TwoPositivePairs,    // a_i x = 0  =>  two distinct j, l with b_ij, b_il > 0
  SomePositivePair,    // some b_ij > 0
  PrivateCoverLower,   // a_i x = 0  =>  a_i + b_i > sqrt(f(k) + 2 sum_{j<l} b_ij b_il)
  PairShift,           // b_ij > 0  =>  a_i + a_j + 2 b_ij >= min(c_i, c_j)
  SinglesSum,          // x > 0: sum a >= c;  x = 0: sum a >= c - 2b
  HubUpper,            // x < 1 - sqrt(f(k) / f(k-2))
};

inline constexpr std::array<ClaimId, 9> all_claims{
    ClaimId::CoverLower,      ClaimId::PairMassUpper,     ClaimId::PairCoverMax,
    ClaimId::TwoPositivePairs, ClaimId::SomePositivePair, ClaimId::PrivateCoverLower,
    ClaimId::PairShift,       ClaimId::SinglesSum,        ClaimId::HubUpper};

inline std::string_view claim_name(ClaimId id) {
  switch (id) {
    case ClaimId::CoverLower: return "cover-lower";
    case ClaimId::PairMassUpper: return "pair-mass-upper";
    case ClaimId::PairCoverMax: return "pair-cover-max";
    case ClaimId::TwoPositivePairs: return "two-positive-pairs";
    case ClaimId::SomePositivePair: return "some-positive-pair";
    case ClaimId::PrivateCoverLower: return "private-cover-lower";
    case ClaimId::PairShift: return "pair-shift";
    case ClaimId::SinglesSum: return "singles-sum";
    case ClaimId::HubUpper: return "hub-upper";
  }
  return "?";
}

inline ClaimId parse_claim(std::string_view name) {
  for (ClaimId id : all_claims)
    if (claim_name(id) == name) return id;
  throw std::invalid_argument("unknown claim id '" + std::string(name) + "'");
}

struct ClaimReport {
  ClaimId claim;
  std::vector<int> indices;  // colors the report is about (0-based)
  Verdict verdict = Verdict::NotApplicable;
  double lhs = std::nan("");
  double rhs = std::nan("");
  std::vector<int> witness;  // colors witnessing an existential claim
  std::string note;

  bool holds() const { return verdict == Verdict::Holds; }
};

namespace detail {

inline Verdict verdict_of(bool b) { return b ? Verdict::Holds : Verdict::Fails; }

/// lhs > sqrt(radicand), for radicand >= 0.
inline bool exceeds_sqrt(const Rational& lhs, const Rational& radicand) {
  return lhs >= 0 && lhs * lhs > radicand;
}

/// value < 1 - sqrt(ratio), for 0 <= ratio.
inline bool below_one_minus_sqrt(const Rational& value, const Rational& ratio) {
  const Rational room = 1 - value;
  return room > 0 && ratio < room * room;
}

inline Rational pair_products(const ExactGraph& g, int i) {
  Rational s(0);
  for (int j = 0; j < g.k(); ++j) {
    if (j == i) continue;
    for (int l = j + 1; l < g.k(); ++l) {
      if (l == i) continue;
      s += g.pair_weight(i, j) * g.pair_weight(i, l);
    }
  }
  return s;
}

inline ClaimReport report(ClaimId id, std::vector<int> indices) {
  ClaimReport r;
  r.claim = id;
  r.indices = std::move(indices);
  return r;
}

inline ClaimReport not_applicable(ClaimId id, std::vector<int> indices, std::string note) {
  ClaimReport r = report(id, std::move(indices));
  r.note = std::move(note);
  return r;
}

}  // namespace detail

/// Ratio f(k) / f(k-2) used by the two-color removal bounds; k >= 3.
inline Rational removal_ratio(int k) { return Rational(rainbow_threshold(k) / rainbow_threshold(k - 2)); }

/// Evaluates one claim at g, one report per applicable color or color pair.
inline std::vector<ClaimReport> evaluate_claim(const ExactGraph& g, ClaimId id) {
  using detail::verdict_of;
  require_valid(g);
  const int k = g.k();
  const auto dq = densities(g);
  const Rational f = rainbow_threshold(k);
  const Rational& x = g.hub_weight();
  const double fx = f.get_d();
  const double xd = x.get_d();
  std::vector<ClaimReport> out;

  auto needs_k3 = [&](ClaimId cid) -> bool {
    if (k >= 3) return false;
    out.push_back(detail::not_applicable(cid, {}, "needs k >= 3"));
    return true;
  };

  switch (id) {
    case ClaimId::CoverLower: {
      for (int i = 0; i < k; ++i) {
        const Rational radicand = f + 2 * dq.pair_total[i] * x + x * x;
        ClaimReport r = detail::report(id, std::vector<int>{i});
        r.lhs = dq.cover[i].get_d();
        r.rhs = std::sqrt(radicand.get_d());
        r.verdict = verdict_of(detail::exceeds_sqrt(dq.cover[i], radicand));
        out.push_back(std::move(r));
      }
      break;
    }
    case ClaimId::PairMassUpper: {
      if (needs_k3(id)) break;
      const Rational ratio = removal_ratio(k);
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          const Rational mass = g.single_weight(i) + g.single_weight(j) + g.pair_weight(i, j);
          ClaimReport r = detail::report(id, std::vector<int>{i, j});
          r.lhs = mass.get_d();
          r.rhs = 1.0 - std::sqrt(ratio.get_d());
          r.verdict = verdict_of(detail::below_one_minus_sqrt(mass, ratio));
          out.push_back(std::move(r));
        }
      break;
    }
    case ClaimId::PairCoverMax: {
      if (needs_k3(id)) break;
      const Rational ratio = removal_ratio(k);
      const double root_ratio = std::sqrt(ratio.get_d());
      // radicand f - x + x sqrt(ratio) >= 0  <=>  x - f <= x sqrt(ratio)
      const Rational excess = x - f;
      const bool radicand_ok = excess <= 0 || excess * excess <= x * x * ratio;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          if (!radicand_ok) {
            out.push_back(detail::not_applicable(id, {i, j}, "negative radicand"));
            continue;
          }
          const Rational top = dq.cover[i] > dq.cover[j] ? dq.cover[i] : dq.cover[j];
          ClaimReport r = detail::report(id, std::vector<int>{i, j});
          r.lhs = top.get_d();
          r.rhs = std::sqrt(std::max(0.0, fx - (1.0 - root_ratio) * xd)) + xd;
          // top - x > sqrt(f - x + x sqrt(ratio))  <=>  m >= 0 and L > x sqrt(ratio)
          // with m = top - x, L = m^2 - f + x.
          const Rational m = top - x;
          const Rational slack = m * m - f + x;
          bool holds = m >= 0 && slack > 0 && (x == 0 || slack * slack > x * x * ratio);
          r.verdict = verdict_of(holds);
          out.push_back(std::move(r));
        }
      break;
    }
    case ClaimId::TwoPositivePairs: {
      for (int i = 0; i < k; ++i) {
        if (g.single_weight(i) * x != 0) {
          out.push_back(detail::not_applicable(id, {i}, "requires a_i x = 0"));
          continue;
        }
        ClaimReport r = detail::report(id, std::vector<int>{i});
        std::vector<int> partners;
        for (int j = 0; j < k; ++j)
          if (j != i && g.pair_weight(i, j) > 0) partners.push_back(j);
        r.lhs = static_cast<double>(partners.size());
        r.rhs = 2.0;
        if (partners.size() >= 2) r.witness = {partners[0], partners[1]};
        r.verdict = verdict_of(partners.size() >= 2);
        if (partners.size() < 2) r.note = "no witness";
        out.push_back(std::move(r));
      }
      break;
    }
    case ClaimId::SomePositivePair: {
      ClaimReport r = detail::report(id, std::vector<int>{});
      int count = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (g.pair_weight(i, j) > 0) {
            if (count++ == 0) r.witness = {i, j};
          }
      r.lhs = count;
      r.rhs = 1.0;
      r.verdict = verdict_of(count > 0);
      if (count == 0) r.note = "no witness";
      out.push_back(std::move(r));
      break;
    }
    case ClaimId::PrivateCoverLower: {
      for (int i = 0; i < k; ++i) {
        if (g.single_weight(i) * x != 0) {
          out.push_back(detail::not_applicable(id, {i}, "requires a_i x = 0"));
          continue;
        }
        const Rational lhs = g.single_weight(i) + dq.pair_total[i];
        const Rational radicand = f + 2 * detail::pair_products(g, i);
        ClaimReport r = detail::report(id, std::vector<int>{i});
        r.lhs = lhs.get_d();
        r.rhs = std::sqrt(radicand.get_d());
        r.verdict = verdict_of(detail::exceeds_sqrt(lhs, radicand));
        out.push_back(std::move(r));
      }
      break;
    }
    case ClaimId::PairShift: {
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          if (!(g.pair_weight(i, j) > 0)) {
            out.push_back(detail::not_applicable(id, {i, j}, "requires b_ij > 0"));
            continue;
          }
          const Rational lhs = g.single_weight(i) + g.single_weight(j) + 2 * g.pair_weight(i, j);
          const Rational rhs = dq.cover[i] < dq.cover[j] ? dq.cover[i] : dq.cover[j];
          ClaimReport r = detail::report(id, std::vector<int>{i, j});
          r.lhs = lhs.get_d();
          r.rhs = rhs.get_d();
          r.verdict = verdict_of(lhs >= rhs);
          out.push_back(std::move(r));
        }
      break;
    }
    case ClaimId::SinglesSum: {
      Rational singles(0);
      for (int i = 0; i < k; ++i) singles += g.single_weight(i);
      ClaimReport r = detail::report(id, std::vector<int>{});
      r.lhs = singles.get_d();
      if (x > 0) {
        r.rhs = dq.min_cover.get_d();
        r.verdict = verdict_of(singles >= dq.min_cover);
      } else if (dq.min_positive_pair) {
        const Rational rhs = dq.min_cover - 2 * *dq.min_positive_pair;
        r.rhs = rhs.get_d();
        r.verdict = verdict_of(singles >= rhs);
      } else {
        r.verdict = Verdict::NotApplicable;
        r.note = "x = 0 and no positive pair weight";
      }
      out.push_back(std::move(r));
      break;
    }
    case ClaimId::HubUpper: {
      if (needs_k3(id)) break;
      const Rational ratio = removal_ratio(k);
      ClaimReport r = detail::report(id, std::vector<int>{});
      r.lhs = xd;
      r.rhs = 1.0 - std::sqrt(ratio.get_d());
      r.verdict = verdict_of(detail::below_one_minus_sqrt(x, ratio));
      out.push_back(std::move(r));
      break;
    }
  }
  return out;
}

struct ThresholdCheck {
  Rational min_density;
  Rational threshold;
  bool violation = false;  // min density strictly above the threshold
};

/// A graph whose every color density exceeds the threshold would refute
/// the bound; this must never happen.
inline ThresholdCheck check_threshold(const ExactGraph& g) {
  ThresholdCheck c{min_density(g), rainbow_threshold(g.k())};
  require_valid(g);
  c.violation = c.min_density > c.threshold;
  return c;
}

}  // namespace rainbow::audit
