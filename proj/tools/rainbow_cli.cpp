// Command-line front end. Exit codes: 0 success or nothing found, 2 a
// witness / violation / failed identity was found, 1 usage or input error or
// an unverified certificate.

#include "rainbow/audit/certificates.hpp"
#include "rainbow/audit/claims.hpp"
#include "rainbow/audit/falsify.hpp"
#include "rainbow/audit/identities.hpp"
#include "rainbow/audit/report_io.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/graph_json.hpp"
#include "rainbow/optimizer/maximize.hpp"
#include "rainbow/realization/blow_up.hpp"
#include "rainbow/realization/rainbow_search.hpp"
#include "rainbow/realization/saturation.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace rainbow;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_found = 2;

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string dual(const Rational& q) { return to_string(q) + " (" + decimal(q.get_d()) + ")"; }

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

// Exact files must sum to one exactly; decimal files within float tolerance.
FloatGraph checked_float(const ExactGraph& g) {
  FloatGraph f = to_float(g);
  require_valid(f);
  return f;
}

struct Construct {
  int k = 0;
  std::string family;
  std::string t;
  std::string out;

  int run() const {
    const Family tag = family.empty() ? default_family(k) : parse_family(family);
    ConstructionFamily cf{tag, std::nullopt};
    if (!t.empty()) {
      if (tag != Family::Mixed) throw std::invalid_argument("--t applies only to the mixed family");
      cf.t = parse_rational(t);
    }
    const ExactGraph g = extremal(k, cf);
    write_graph(g, out);
    std::cout << "wrote " << family_name(tag) << " construction for k=" << k << " to " << out << '\n';
    std::cout << "min density " << dual(min_density(g)) << ", f(" << k << ") = " << dual(rainbow_threshold(k)) << '\n';
    return exit_ok;
  }
};

struct Density {
  std::string in;
  bool exact = false;

  int run() const {
    const ExactGraph g = read_graph(in);
    std::cout << "k " << g.k() << '\n';
    if (exact) {
      const auto d = densities(g);
      for (int i = 0; i < g.k(); ++i) std::cout << "d" << i + 1 << ' ' << dual(d.density[i]) << '\n';
      std::cout << "min " << dual(d.min_density()) << " at color " << d.argmin_density() + 1 << '\n';
    } else {
      const auto d = densities(checked_float(g));
      for (int i = 0; i < g.k(); ++i) std::cout << "d" << i + 1 << ' ' << decimal(d.density[i]) << '\n';
      std::cout << "min " << decimal(d.min_density()) << " at color " << d.argmin_density() + 1 << '\n';
    }
    std::cout << "f " << dual(rainbow_threshold(g.k())) << '\n';
    return exit_ok;
  }
};

struct Threshold {
  int k = 0;

  int run() const {
    const Rational f = rainbow_threshold(k);
    std::cout << to_string(f) << '\n' << decimal(f.get_d()) << '\n';
    return exit_ok;
  }
};

struct Audit {
  std::string in;
  std::string claims = "all";
  bool identities = false;

  int run() const {
    const ExactGraph g = read_graph(in);
    require_valid(g);
    std::vector<audit::ClaimId> ids;
    if (claims == "all") {
      ids.assign(audit::all_claims.begin(), audit::all_claims.end());
    } else {
      std::stringstream list(claims);
      for (std::string name; std::getline(list, name, ',');)
        if (!name.empty()) ids.push_back(audit::parse_claim(name));
    }
    int code = exit_ok;
    for (auto id : ids)
      for (const auto& r : audit::evaluate_claim(g, id)) std::cout << audit::to_json(r).dump() << '\n';
    if (identities)
      for (auto id : audit::all_identities) {
        const auto r = audit::check_identity(g, id);
        std::cout << audit::to_json(r).dump() << '\n';
        if (r.verdict == audit::Verdict::Fails) code = exit_found;
      }
    const auto t = audit::check_threshold(g);
    std::cout << nlohmann::json{{"type", "threshold"},
                                {"min_density", to_string(t.min_density)},
                                {"min_density_decimal", t.min_density.get_d()},
                                {"threshold", to_string(t.threshold)},
                                {"threshold_decimal", t.threshold.get_d()},
                                {"violation", t.violation}}
                     .dump()
              << '\n';
    if (t.violation) code = exit_found;
    return code;
  }
};

struct Certificates {
  std::string id;
  bool all = false;
  std::size_t grid = 10000;
  bool csv = false;

  int run() const {
    if (!id.empty() && all) throw std::invalid_argument("--id and --all are exclusive");
    std::vector<audit::CertificateReport> reports;
    if (!id.empty())
      reports.push_back(audit::check_certificate(id, grid));
    else
      reports = audit::check_all_certificates(grid);
    if (csv) audit::write_certificate_csv_header(std::cout);
    bool ok = true;
    for (const auto& r : reports) {
      if (csv)
        audit::write_certificate_csv_row(std::cout, r);
      else
        std::cout << audit::to_json(r).dump() << '\n';
      ok = ok && r.verified;
    }
    return ok ? exit_ok : exit_error;
  }
};

struct Optimize {
  int k = 0;
  opt::OptimizerConfig cfg;
  std::string trace;
  std::string out;

  int run() const {
    const auto res = opt::maximize_min_density(k, cfg);
    const Rational f = rainbow_threshold(k);
    const double fd = f.get_d();
    std::cout << "best found min density " << decimal(res.best_value) << " (restart " << res.best_restart << " of "
              << cfg.restarts << ", seed " << cfg.seed << ")\n";
    std::cout << "f(" << k << ") " << dual(f) << ", gap " << decimal(fd - res.best_value) << '\n';
    std::cout << "densities";
    for (int i = 0; i < k; ++i) std::cout << ' ' << decimal(density_form<double>(k, res.best.weights(), i));
    std::cout << '\n';
    if (!trace.empty()) {
      auto os = open_out(trace);
      opt::write_trace_csv(os, res.trace);
    }
    if (!out.empty()) write_graph(res.best, out);
    if (res.best_value > fd + 1e-9) {
      std::cout << "ABOVE THRESHOLD: best found exceeds f(k) by more than 1e-9\n";
      return exit_found;
    }
    return exit_ok;
  }
};

struct Sample {
  int k = 0;
  std::size_t samples = 100000;
  std::size_t centered = 0;
  bool centered_set = false;
  std::uint64_t seed = 1;

  int run() const {
    audit::FalsifyOptions o;
    o.uniform_samples = samples;
    o.centered_samples = centered_set ? centered : samples / 10;
    const auto r = audit::falsify_theorem(k, seed, o);
    const Rational f = rainbow_threshold(k);
    std::cout << "samples " << r.samples << '\n';
    std::cout << "best sampled min density " << decimal(r.best_min_density) << '\n';
    std::cout << "f(" << k << ") " << dual(f) << '\n';
    if (r.violation) {
      std::cout << "VIOLATION\n" << graph_to_json(*r.violation).dump() << '\n';
      return exit_found;
    }
    std::cout << "no violation\n";
    return exit_ok;
  }
};

struct Realize {
  std::string in;
  int n = 0;
  std::string out;

  int run() const {
    const ExactGraph g = read_graph(in);
    checked_float(g);
    const auto s = real::blow_up(g, n);
    auto os = open_out(out);
    real::write_edge_list(os, s);
    const auto counts = real::edge_counts(s);
    for (int i = 0; i < g.k(); ++i) {
      const Rational expect = Rational(density_form<Rational>(g.k(), g.weights(), i) * n * n / 2);
      std::cout << "color " << i + 1 << " edges " << counts[i] << ", d*n^2/2 = " << dual(expect) << '\n';
    }
    std::cout << "wrote " << out << '\n';
    return exit_ok;
  }
};

struct Detect {
  std::string in;
  real::SearchOptions o;
  bool walk = false;

  int run() {
    std::ifstream is(in);
    if (!is) throw std::invalid_argument("cannot open " + in);
    const auto s = real::read_edge_list(is);
    o.kind = walk ? real::WitnessKind::Walk : real::WitnessKind::Path;
    if (o.non_backtracking && !walk) throw std::invalid_argument("--nonbacktracking requires --walk");
    if (const auto w = real::find_rainbow(s, o)) {
      std::cout << real::format_witness(*w) << '\n';
      return exit_found;
    }
    std::cout << "none\n";
    return exit_ok;
  }
};

struct Experiment {
  int k = 0;
  int n = 0;
  std::uint64_t seed = 1;
  std::string kind = "path";
  int workers = 1;

  int run() const {
    if (kind != "path" && kind != "walk") throw std::invalid_argument("--kind must be path or walk");
    const auto r = real::saturation_experiment(k, n, seed, kind == "walk" ? real::WitnessKind::Walk : real::WitnessKind::Path,
                                               workers);
    std::cout << "k " << k << " n " << n << " seed " << seed << " kind " << kind << '\n';
    std::cout << "edges added " << r.added << '\n';
    std::cout << "witness " << (r.witness ? real::format_witness(*r.witness) : std::string("none")) << '\n';
    for (int i = 0; i < k; ++i)
      std::cout << "color " << i + 1 << " edges " << r.initial_counts[i] << " -> " << r.final_counts[i] << ", density "
                << decimal(r.final_densities[i]) << '\n';
    std::cout << "f(" << k << ") " << dual(rainbow_threshold(k)) << '\n';
    return exit_ok;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow path toolkit: clustered-graph densities, audits, optimizer and realizations"};
  app.require_subcommand(1);

  Construct construct;
  auto* c = app.add_subcommand("construct", "write an extremal construction as JSON");
  c->add_option("--k", construct.k, "number of colors")->required()->check(CLI::PositiveNumber);
  c->add_option("--family", construct.family, "pairs | star | mixed (default: pairs when defined, else star)");
  c->add_option("--t", construct.t, "mixed-family parameter, rational or decimal");
  c->add_option("-o,--output", construct.out, "output JSON file")->required();

  Density density;
  auto* d = app.add_subcommand("density", "print color densities of a graph");
  d->add_option("-i,--input", density.in, "graph JSON")->required();
  d->add_flag("--exact", density.exact, "exact rational arithmetic");

  Threshold threshold;
  auto* f = app.add_subcommand("f", "print the threshold f(k)");
  f->add_option("--k", threshold.k, "number of colors")->required()->check(CLI::PositiveNumber);

  Audit audit_cmd;
  auto* a = app.add_subcommand("audit", "evaluate structural claims on a graph (JSON lines)");
  a->add_option("-i,--input", audit_cmd.in, "graph JSON")->required();
  a->add_option("--claims", audit_cmd.claims, "comma-separated claim names or 'all'");
  a->add_flag("--identities", audit_cmd.identities, "also check the algebraic identities");

  Certificates certs;
  auto* ce = app.add_subcommand("certificates", "verify the numeric certificates (JSON lines)");
  ce->add_option("--id", certs.id, "single certificate id");
  ce->add_flag("--all", certs.all, "every certificate (default)");
  ce->add_option("--grid", certs.grid, "grid nodes per interval (>= 1000)");
  ce->add_flag("--csv", certs.csv, "CSV instead of JSON lines");

  Optimize optimize;
  auto* o = app.add_subcommand("optimize", "multi-start search for the best min density");
  o->add_option("--k", optimize.k, "number of colors")->required()->check(CLI::PositiveNumber);
  o->add_option("--restarts", optimize.cfg.restarts, "number of restarts");
  o->add_option("--seed", optimize.cfg.seed, "random seed");
  o->add_option("--tol", optimize.cfg.value_tolerance, "improvement tolerance");
  o->add_option("--max-iterations", optimize.cfg.max_iterations, "iteration cap per restart");
  o->add_option("--workers", optimize.cfg.workers, "worker threads");
  o->add_option("--trace", optimize.trace, "trace CSV output");
  o->add_option("-o,--output", optimize.out, "best graph JSON output");

  Sample sample;
  auto* s = app.add_subcommand("sample", "random search for a graph beating the threshold");
  s->add_option("--k", sample.k, "number of colors")->required()->check(CLI::PositiveNumber);
  s->add_option("--samples", sample.samples, "uniform simplex samples")->required();
  auto* centered = s->add_option("--centered", sample.centered, "samples near the constructions (default samples/10)");
  s->add_option("--seed", sample.seed, "random seed")->required();

  Realize realize;
  auto* r = app.add_subcommand("realize", "blow a graph up to an n-vertex edge list");
  r->add_option("-i,--input", realize.in, "graph JSON")->required();
  r->add_option("--n", realize.n, "vertex count")->required()->check(CLI::PositiveNumber);
  r->add_option("-o,--output", realize.out, "edge-list output")->required();

  Detect detect;
  auto* de = app.add_subcommand("detect", "search an edge list for a rainbow path or walk");
  de->add_option("-i,--input", detect.in, "edge-list file")->required();
  de->add_option("--len", detect.o.length, "number of edges (2..6)");
  de->add_flag("--walk", detect.walk, "search walks instead of paths");
  de->add_flag("--nonbacktracking", detect.o.non_backtracking, "walks may not return along the previous edge");
  de->add_flag("--allow-long", detect.o.allow_long, "permit lengths above 6");
  de->add_option("--workers", detect.o.workers, "worker threads");

  Experiment experiment;
  auto* e = app.add_subcommand("experiment", "add edges to an extremal blow-up until a witness appears");
  e->add_option("--k", experiment.k, "number of colors")->required();
  e->add_option("--n", experiment.n, "vertex count")->required();
  e->add_option("--seed", experiment.seed, "random seed")->required();
  e->add_option("--kind", experiment.kind, "path | walk");
  e->add_option("--workers", experiment.workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return exit_error;
  }

  try {
    if (*c) return construct.run();
    if (*d) return density.run();
    if (*f) return threshold.run();
    if (*a) return audit_cmd.run();
    if (*ce) return certs.run();
    if (*o) return optimize.run();
    if (*s) {
      sample.centered_set = centered->count() > 0;
      return sample.run();
    }
    if (*r) return realize.run();
    if (*de) return detect.run();
    if (*e) return experiment.run();
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
