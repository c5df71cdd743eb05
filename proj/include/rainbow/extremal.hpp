#pragma once

#include "rainbow/clustered_graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rainbow {

/// Largest guaranteed minimum color density without a rainbow 3-edge path:
/// ceil(k/2)^-2 for k <= 6 and 1/(2k-1) from k = 7 on.
inline Rational rainbow_threshold(int k) {
  if (k < 1) throw std::domain_error("threshold is defined for k >= 1");
  if (k <= 6) {
    const long half = (k + 1) / 2;
    return make_rational(1, half * half);
  }
  return make_rational(1, 2L * k - 1);
}

/// 1 / ceil(k/2): the weight of each pair cluster in the pairing construction.
inline Rational pairing_block(int k) { return make_rational(1, (k + 1) / 2); }

enum class Family { Pairs, Star, Mixed };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Pairs: return "pairs";
    case Family::Star: return "star";
    case Family::Mixed: return "mixed";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  if (name == "pairs") return Family::Pairs;
  if (name == "star") return Family::Star;
  if (name == "mixed") return Family::Mixed;
  throw std::invalid_argument("unknown construction family '" + std::string(name) + "'");
}

struct ConstructionFamily {
  Family tag = Family::Pairs;
  std::optional<Rational> t;  // only meaningful for Mixed
};

inline bool family_defined(int k, Family f) {
  switch (f) {
    case Family::Pairs: return k >= 1 && k <= 6;
    case Family::Star: return k == 1 || k == 5 || k >= 7;
    case Family::Mixed: return k == 3 || k == 5;
  }
  return false;
}

inline std::vector<Family> families_for(int k) {
  std::vector<Family> out;
  for (Family f : {Family::Pairs, Family::Star, Family::Mixed})
    if (family_defined(k, f)) out.push_back(f);
  return out;
}

/// Pairs where defined, otherwise star.
inline Family default_family(int k) { return family_defined(k, Family::Pairs) ? Family::Pairs : Family::Star; }

/// Default split for the mixed family: half of the pairing block.
inline Rational default_mixed_parameter(int k) { return Rational(pairing_block(k) / 2); }

/// Tight constructions attaining the threshold.
///
/// pairs: disjoint color pairs of weight 1/ceil(k/2) each (color 1 is paired
/// twice when k is odd; a single cluster for k = 1).
/// star:  every single cluster 1/(2k-1), hub (k-1)/(2k-1).
/// mixed: the pairing construction for k in {3, 5} with the last pair
/// {1, k} split into a single cluster of color k (weight t) and a pair
/// cluster of the remaining 1/ceil(k/2) - t.
inline ExactGraph extremal(int k, const ConstructionFamily& family) {
  if (k < 1) throw std::domain_error("k must be at least 1");
  if (!family_defined(k, family.tag))
    throw std::domain_error("family '" + std::string(family_name(family.tag)) + "' is not defined for k = " +
                            std::to_string(k));
  ExactGraph g(k);
  switch (family.tag) {
    case Family::Pairs:
    case Family::Mixed: {
      if (k == 1) {
        g.set_single(0, Rational(1));
        break;
      }
      const Rational block = pairing_block(k);
      for (int i = 0; i + 1 < k; i += 2) g.set_pair(i, i + 1, block);
      if (k % 2 == 1) g.set_pair(0, k - 1, block);
      if (family.tag == Family::Mixed) {
        const Rational t = family.t.value_or(default_mixed_parameter(k));
        if (t < 0 || t > block)
          throw std::domain_error("mixed parameter must lie in [0, " + to_string(block) + "]");
        g.set_single(k - 1, t);
        g.set_pair(0, k - 1, Rational(block - t));
      }
      break;
    }
    case Family::Star: {
      const Rational share = make_rational(1, 2L * k - 1);
      for (int i = 0; i < k; ++i) g.set_single(i, share);
      g.set_hub(make_rational(k - 1, 2L * k - 1));
      break;
    }
  }
  return g;
}

inline ExactGraph extremal(int k, Family tag) { return extremal(k, ConstructionFamily{tag, std::nullopt}); }

}  // namespace rainbow
