#pragma once

// Exact algebraic identities behind the claims: two rewritings of the
// density and the closed forms of the first-order gains along the
// directions used by the proofs. The increment identities compare against
// the generic increment(), never against another closed form.

#include "rainbow/audit/claims.hpp"
#include "rainbow/perturbation.hpp"
#include "rainbow/reductions.hpp"

#include <array>
#include <numeric>
#include <string>
#include <string_view>

namespace rainbow::audit {

enum class IdentityId { DensityCover, DensityPrivate, PairSplitIncrement, ProportionalIncrement, ContractionBound };

inline constexpr std::array<IdentityId, 5> all_identities{IdentityId::DensityCover, IdentityId::DensityPrivate,
                                                          IdentityId::PairSplitIncrement,
                                                          IdentityId::ProportionalIncrement,
                                                          IdentityId::ContractionBound};

inline std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::DensityCover: return "density-cover";
    case IdentityId::DensityPrivate: return "density-private";
    case IdentityId::PairSplitIncrement: return "pair-split-increment";
    case IdentityId::ProportionalIncrement: return "proportional-increment";
    case IdentityId::ContractionBound: return "contraction-bound";
  }
  return "?";
}

inline IdentityId parse_identity(std::string_view name) {
  for (IdentityId id : all_identities)
    if (identity_name(id) == name) return id;
  throw std::invalid_argument("unknown identity id '" + std::string(name) + "'");
}

struct IdentityReport {
  IdentityId identity;
  Verdict verdict = Verdict::NotApplicable;
  std::string note;  // first failing index, or why not applicable

  bool holds() const { return verdict == Verdict::Holds; }
};

namespace detail {

/// sum over j < l, both != i, of b_ij b_il
inline Rational cross_pairs(const ExactGraph& g, int i) {
  Rational s(0);
  for (int j = 0; j < g.k(); ++j)
    for (int l = j + 1; l < g.k(); ++l)
      if (j != i && l != i) s += g.pair_weight(i, j) * g.pair_weight(i, l);
  return s;
}

inline std::string color_text(int i) { return "color " + std::to_string(i + 1); }

}  // namespace detail

inline IdentityReport check_identity(const ExactGraph& g, IdentityId id) {
  require_valid(g);
  const int k = g.k();
  const auto dq = densities(g);
  const Rational& x = g.hub_weight();
  IdentityReport r{id, Verdict::Holds, ""};
  auto fail = [&r](std::string why) {
    if (r.verdict == Verdict::Holds) {
      r.verdict = Verdict::Fails;
      r.note = std::move(why);
    }
  };

  switch (id) {
    case IdentityId::DensityCover:
      // d_i = c_i^2 - 2 b_i x - x^2 - 2 sum b_ij b_il
      for (int i = 0; i < k; ++i) {
        const Rational& c = dq.cover[i];
        const Rational rhs = c * c - 2 * dq.pair_total[i] * x - x * x - 2 * detail::cross_pairs(g, i);
        if (rhs != dq.density[i]) fail(detail::color_text(i));
      }
      break;
    case IdentityId::DensityPrivate:
      // d_i = (a_i + b_i)^2 - 2 sum b_ij b_il + 2 a_i x
      for (int i = 0; i < k; ++i) {
        const Rational own = g.single_weight(i) + dq.pair_total[i];
        const Rational rhs = own * own - 2 * detail::cross_pairs(g, i) + 2 * g.single_weight(i) * x;
        if (rhs != dq.density[i]) fail(detail::color_text(i));
      }
      break;
    case IdentityId::PairSplitIncrement: {
      bool any = false;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          if (!(g.pair_weight(i, j) > 0)) continue;
          any = true;
          const auto inc = increment(g, pair_split_delta(g, i, j));
          const Rational shift = g.single_weight(i) + g.single_weight(j) + 2 * g.pair_weight(i, j);
          for (int p = 0; p < k; ++p) {
            Rational expected(0);
            if (p == i || p == j) expected = 2 * (g.single_weight(p) + g.pair_weight(i, j)) * (dq.cover[p] - shift);
            if (inc[p] != expected)
              fail("pair {" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}, " + detail::color_text(p));
          }
        }
      if (!any) {
        r.verdict = Verdict::NotApplicable;
        r.note = "no positive pair weight";
      }
      break;
    }
    case IdentityId::ProportionalIncrement: {
      std::vector<int> support;
      for (int i = 0; i < k; ++i)
        if (g.single_weight(i) > 0) support.push_back(i);
      if (support.empty()) {
        r.verdict = Verdict::NotApplicable;
        r.note = "every single weight is zero";
        break;
      }
      const auto inc = increment(g, proportional_delta(g, support));
      const Rational m(static_cast<long>(support.size()));
      for (int i = 0; i < k; ++i) {
        const bool in = std::find(support.begin(), support.end(), i) != support.end();
        const Rational expected = 2 * (m * dq.density[i] - (in ? dq.cover[i] : Rational(0)));
        if (inc[i] != expected) fail(detail::color_text(i));
      }
      break;
    }
    case IdentityId::ContractionBound: {
      if (k < 3) {
        r.verdict = Verdict::NotApplicable;
        r.note = "needs k >= 3";
        break;
      }
      bool any = false;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          const Rational removed = g.single_weight(i) + g.single_weight(j) + g.pair_weight(i, j);
          if (removed == 1) continue;
          any = true;
          const auto after = densities(contract(g, i, j)).density;
          const auto keep = surviving_colors(k, {i, j});
          const Rational scale2 = (1 - removed) * (1 - removed);
          for (std::size_t p = 0; p < keep.size(); ++p)
            if (after[p] * scale2 < dq.density[keep[p]])
              fail("contracting {" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}, " +
                   detail::color_text(keep[p]));
        }
      if (!any) {
        r.verdict = Verdict::NotApplicable;
        r.note = "every contraction is degenerate";
      }
      break;
    }
  }
  return r;
}

}  // namespace rainbow::audit
