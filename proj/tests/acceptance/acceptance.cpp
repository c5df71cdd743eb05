// One PASS/FAIL line per acceptance criterion. Each check is timed against
// its budget; the exit status is nonzero when any line fails.

#include "rainbow/audit/certificates.hpp"
#include "rainbow/audit/falsify.hpp"
#include "rainbow/audit/identities.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/optimizer/maximize.hpp"
#include "rainbow/realization/blow_up.hpp"
#include "rainbow/realization/rainbow_search.hpp"
#include "rainbow/reductions.hpp"

#include "detector_oracle.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace rainbow;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(const char* name, double budget_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && secs > budget_seconds) {
    std::ostringstream os;
    os << "over budget " << budget_seconds << " s";
    o.fail(os.str());
  }
  if (!o.ok) ++failures;
  std::printf("%s %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", name, secs, o.detail.empty() ? "" : ": ",
              o.detail.c_str());
  std::fflush(stdout);
}

std::string k_text(int k) { return "k=" + std::to_string(k); }

Outcome construction_exactness() {
  Outcome o;
  if (rainbow_threshold(3) != make_rational(1, 4)) o.fail("f(3) != 1/4");
  if (rainbow_threshold(5) != make_rational(1, 9)) o.fail("f(5) != 1/9");
  if (rainbow_threshold(7) != make_rational(1, 13)) o.fail("f(7) != 1/13");
  for (int k = 1; k <= 12; ++k) {
    const Rational f = rainbow_threshold(k);
    for (Family fam : families_for(k)) {
      std::vector<std::optional<Rational>> ts{std::nullopt};
      if (fam == Family::Mixed)
        for (int s = 0; s <= 10; ++s) ts.emplace_back(Rational(pairing_block(k) * make_rational(s, 10)));
      for (const auto& t : ts) {
        const ExactGraph g = extremal(k, ConstructionFamily{fam, t});
        if (auto why = validate(g)) o.fail(k_text(k) + " " + std::string(family_name(fam)) + ": " + *why);
        if (min_density(g) != f) o.fail(k_text(k) + " " + std::string(family_name(fam)) + ": min density != f(k)");
      }
    }
  }
  return o;
}

Outcome falsification() {
  Outcome o;
  for (int k = 3; k <= 10; ++k)
    for (std::uint64_t seed : {1, 2, 3}) {
      const auto r = audit::falsify_theorem(k, seed);
      if (r.samples != 110000 && !r.violation) o.fail(k_text(k) + ": wrong sample count");
      if (r.violation) o.fail(k_text(k) + " seed " + std::to_string(seed) + ": violation found");
    }
  return o;
}

Outcome optimizer_attainment() {
  Outcome o;
  std::ostringstream summary;
  for (int k = 3; k <= 8; ++k) {
    opt::OptimizerConfig cfg;
    cfg.restarts = 50;
    const auto r = opt::maximize_min_density(k, cfg);
    const double f = rainbow_threshold(k).get_d();
    if (r.best_value < f - 1e-4) o.fail(k_text(k) + ": best found below f(k) - 1e-4");
    for (double v : r.restart_values)
      if (v > f + 1e-9) o.fail(k_text(k) + ": a restart exceeded f(k) + 1e-9");
    summary << (k == 3 ? "" : ", ") << k_text(k) << " gap " << f - r.best_value;
  }
  if (o.ok) o.detail = summary.str();
  return o;
}

Outcome identity_suite() {
  using audit::IdentityId;
  using audit::Verdict;
  Outcome o;
  std::mt19937_64 rng(20240501);
  for (int k = 3; k <= 8; ++k) {
    std::map<IdentityId, int> held;
    for (int trial = 0; trial < 1000; ++trial) {
      const ExactGraph g =
          trial % 3 == 0 ? testing::random_exact_graph_positive_singles(k, rng) : testing::random_exact_graph(k, rng);
      for (IdentityId id : audit::all_identities) {
        const auto r = audit::check_identity(g, id);
        if (r.verdict == Verdict::Fails)
          o.fail(k_text(k) + " " + std::string(audit::identity_name(id)) + ": " + r.note);
        if (r.verdict == Verdict::Holds) ++held[id];
      }
    }
    for (IdentityId id : audit::all_identities)
      if (held[id] < 300) o.fail(k_text(k) + " " + std::string(audit::identity_name(id)) + ": too few applicable points");
  }
  return o;
}

Outcome certificate_catalog() {
  Outcome o;
  const std::map<std::string, std::string> required{
      {"k3-cover-sum-no-solution", ""},         {"k5-no-hub-two-empty-singles", "0.39"},
      {"k5-all-singles-hub-lower", "0.31"},     {"k5-all-singles-hub-upper", "0.27"},
      {"k5-one-empty-single-hub-lower", "0.28"}, {"k5-two-empty-singles-hub-lower", "0.33"},
      {"k7-hub-lower", "0.38"},                 {"k7-hub-upper", "0.17"},
      {"k8-all-singles-hub-lower", "0.24"},     {"k8-one-empty-single-hub-lower", "0.23"},
      {"k8-two-empty-singles-hub-lower", "0.24"}, {"gap-lemma-k7", "4/sqrt(13)"},
      {"gap-lemma-k8", "4/sqrt(15)"},           {"large-k-no-solution", ""}};
  std::set<std::string> seen;
  for (const auto& r : audit::check_all_certificates(10000)) {
    seen.insert(r.id);
    if (!r.verified) o.fail(r.id + " not verified: " + r.note);
    if (auto it = required.find(r.id); it != required.end() && !it->second.empty() && r.threshold != it->second)
      o.fail(r.id + " threshold " + r.threshold + " != " + it->second);
    if (r.id == "k3-cover-sum-no-solution" && std::abs(r.extremal_value - 0.164) > 1e-3)
      o.fail("cover-sum minimum not near 0.164");
    if (r.id == "large-k-no-solution" && r.domain.find("1000000") == std::string::npos)
      o.fail("large-k range does not reach 10^6");
  }
  for (const auto& [id, _] : required)
    if (!seen.count(id)) o.fail("missing certificate " + id);
  return o;
}

Outcome blow_up_detection() {
  Outcome o;
  real::SearchOptions path, walk;
  walk.kind = real::WitnessKind::Walk;
  int systems = 0;
  for (int k = 3; k <= 8; ++k)
    for (Family fam : families_for(k)) {
      std::vector<std::optional<Rational>> ts{std::nullopt};
      if (fam == Family::Mixed) ts = {Rational(0), Rational(pairing_block(k) / 2), pairing_block(k)};
      for (const auto& t : ts) {
        const ExactGraph g = extremal(k, ConstructionFamily{fam, t});
        for (int n : {50, 100, 200}) {
          const auto s = real::blow_up(g, n);
          ++systems;
          const std::string where = k_text(k) + " " + std::string(family_name(fam)) + " n=" + std::to_string(n);
          if (real::find_rainbow(s, path)) o.fail(where + ": rainbow path found");
          if (real::find_rainbow(s, walk)) o.fail(where + ": rainbow walk found");
          const auto counts = real::edge_counts(s);
          for (int i = 0; i < k; ++i) {
            const double expect = density_form<Rational>(k, g.weights(), i).get_d() * n * n / 2;
            if (std::abs(static_cast<double>(counts[i]) - expect) > 3.0 * n) o.fail(where + ": edge count off");
          }
        }
      }
    }
  if (o.ok) o.detail = std::to_string(systems) + " systems";
  return o;
}

Outcome detector_oracle() {
  Outcome o;
  std::mt19937_64 rng(4242);
  int with = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    const double p = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    const auto s = testing::random_system(rng, n, k, p);
    for (auto kind : {real::WitnessKind::Path, real::WitnessKind::Walk}) {
      real::SearchOptions opt;
      opt.kind = kind;
      const auto expect = testing::brute_force(s, 3, kind);
      const auto got = real::find_rainbow(s, opt);
      if (expect.has_value() != got.has_value()) o.fail("trial " + std::to_string(trial) + ": existence differs");
      if (got) {
        ++with;
        if (!real::witness_violation(s, *got).empty()) o.fail("trial " + std::to_string(trial) + ": invalid witness");
      }
    }
  }
  if (o.ok) o.detail = std::to_string(with) + " of 1000 searches found a witness";
  return o;
}

Outcome reduction_consistency() {
  Outcome o;
  for (auto [k, lower] : {std::pair{4, 3}, std::pair{6, 5}}) {
    const ExactGraph g = extremal(k, Family::Pairs);
    for (int i = 0; i < k; ++i)
      if (min_density(drop_color(g, i)) < rainbow_threshold(lower))
        o.fail(k_text(k) + ": dropping color " + std::to_string(i + 1) + " falls below f(" + std::to_string(lower) + ")");
  }
  return o;
}

}  // namespace

int main() {
  criterion("construction-exactness", 1.0, construction_exactness);
  criterion("falsification-suite", 120.0, falsification);
  criterion("optimizer-attainment", 300.0, optimizer_attainment);
  criterion("identity-suite", 60.0, identity_suite);
  criterion("certificate-catalog", 120.0, certificate_catalog);
  criterion("blow-up-detection", 600.0, blow_up_detection);
  criterion("detector-oracle-equivalence", 60.0, detector_oracle);
  criterion("reduction-consistency", 1.0, reduction_consistency);
  return failures == 0 ? 0 : 1;
}
