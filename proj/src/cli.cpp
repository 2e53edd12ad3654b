#include "darboux/cli.hpp"

#include <chrono>
#include <map>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "darboux/corpus.hpp"
#include "darboux/numcheck.hpp"
#include "darboux/parser.hpp"
#include "darboux/report.hpp"
#include "darboux/search.hpp"
#include "darboux/structure.hpp"

namespace darboux {

namespace {

struct RunConfig {
  std::string command;
  std::string system_path;
  std::vector<std::string> polys;
  std::optional<long> gamma_degree;
  std::optional<long> max_gamma_degree;
  double h = 1e-3;
  double T = 1.0;
  std::size_t samples = 16;
  std::size_t branch_cap = 10'000;
  std::string output = "text";
  std::uint64_t seed = 1;
  bool timing = false;
};

constexpr double kDriftTolerance = 1e-6;

Json certificate_json(const DarbouxCertificate& c) {
  return Json{{"poly", format_poly(c.polynomial)}, {"cofactor", format_poly(c.cofactor)}};
}

Json theorem_evidence(const TheoremReport& rep) {
  Json ev = Json::array();
  for (const auto& c : rep.evidence) ev.push_back(certificate_json(c));
  for (const auto& d : rep.diagnostics) ev.push_back(d);
  return ev;
}

void require_polys(const RunConfig& cfg, std::size_t lo, std::size_t hi) {
  const std::size_t n = cfg.polys.size();
  if (n < lo || n > hi) {
    std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + (hi > 100 ? "n" : std::to_string(hi));
    throw InputError(cfg.command + " expects " + want + " --poly argument(s), got " + std::to_string(n));
  }
}

Report run_examples() {
  Report rep{"examples", nullptr, {}, {}, {}, std::nullopt};
  std::size_t failed = 0;
  for (const auto& g : run_golden_corpus()) {
    Json ev{{"system", g.system}, {"claim", g.claim}};
    if (!g.detail.empty()) ev["detail"] = g.detail;
    rep.results.push_back({"golden", g.poly, std::nullopt, g.passed ? "pass" : "fail", ev});
    failed += g.passed ? 0 : 1;
  }
  rep.extra.emplace_back("summary", Json{{"checks", rep.results.size()}, {"failed", failed}});
  return rep;
}

Report run_on_system(const RunConfig& cfg) {
  const NaturalHamiltonian sys = NaturalHamiltonian::from_definition(load_system_file(cfg.system_path));
  const ParseContext ctx{sys.varset(), sys.field()};
  std::vector<Poly> polys;
  for (const auto& text : cfg.polys) polys.push_back(parse_poly(text, ctx));
  for (const auto& p : polys) {
    if (p.is_zero()) throw InputError("--poly must not be the zero polynomial");
  }

  Report rep{cfg.command, system_json(sys), {}, {}, {}, std::nullopt};
  for (const auto& w : sys.warnings()) rep.extra.emplace_back("warning", w);
  const std::string& cmd = cfg.command;

  if (cmd == "cofactor") {
    require_polys(cfg, 1, SIZE_MAX);
    for (const auto& f : polys) {
      if (auto cert = cofactor_of(sys, f)) {
        rep.results.push_back({"darboux", format_poly(f), format_poly(cert->cofactor),
                               cert->proper ? "proper" : "first-integral", nullptr});
      } else {
        rep.results.push_back({"not-darboux", format_poly(f), std::nullopt, std::nullopt,
                               Json{{"lie_derivative", format_poly(lie_derivative(sys, f))}}});
      }
    }
  } else if (cmd == "verify-integral") {
    require_polys(cfg, 1, SIZE_MAX);
    for (const auto& f : polys) {
      const bool ok = verify_first_integral(sys, f);
      ResultEntry e{"integral-check", format_poly(f), std::nullopt, ok ? "true" : "false", nullptr};
      if (!ok) e.evidence = Json{{"lie_derivative", format_poly(lie_derivative(sys, f))}};
      rep.results.push_back(std::move(e));
    }
  } else if (cmd == "search") {
    require_polys(cfg, 0, 0);
    if (cfg.gamma_degree.has_value() == cfg.max_gamma_degree.has_value()) {
      throw InputError("search expects exactly one of --gamma-degree or --max-gamma-degree");
    }
    const bool exact = cfg.gamma_degree.has_value();
    const SearchOptions opts{exact ? *cfg.gamma_degree : *cfg.max_gamma_degree, exact, cfg.branch_cap};
    const SearchReport sr = search_darboux(sys, opts);
    for (const auto& c : sr.certificates) rep.results.push_back(certificate_entry(c));
    rep.residual_conditions = sr.residual_strings();
    Json notes = sr.notes;
    rep.extra.emplace_back("search", Json{{"gamma_degree", opts.gamma_degree},
                                          {"homogeneous_only", opts.homogeneous_only},
                                          {"ansatz_size", sr.ansatz_size},
                                          {"cofactor_ansatz", sr.cofactor_ansatz(sys.varset())},
                                          {"branches_explored", sr.branches_explored},
                                          {"notes", notes}});
  } else if (cmd == "reversal") {
    require_polys(cfg, 1, 1);
    auto cert = cofactor_of(sys, polys[0]);
    if (!cert) throw InputError("not a Darboux polynomial: " + format_poly(polys[0]));
    const DarbouxCertificate g = reversal_integral(sys, *cert);
    const auto reversed = cofactor_of(sys, tau(polys[0]));
    Json ev = Json::array({certificate_json(*cert), certificate_json(*reversed)});
    rep.results.push_back({"reversal-integral", format_poly(g.polynomial), format_poly(g.cofactor),
                           "first-integral", ev});
  } else if (cmd == "independence") {
    require_polys(cfg, 1, 2);
    const Poly f = polys.size() == 2 ? polys[0] : sys.hamiltonian();
    const Poly g = polys.back();
    const bool indep = jacobian_independent(sys, f, g);
    Json ev{{"with", format_poly(f)}};
    if (indep) {
      for (const auto& m : jacobian_minors(f, g)) {
        if (m.is_zero()) continue;
        ev["nonzero_minor"] = format_poly(m);
        break;
      }
    }
    rep.results.push_back({"independence", format_poly(g), std::nullopt, indep ? "independent" : "dependent", ev});
  } else if (cmd == "irreducible") {
    require_polys(cfg, 0, 0);
    const IrreducibilityResult ir = is_irreducible_natural_H(sys);
    Json ev = Json::array();
    if (ir.criterion_applies) ev.push_back("at least two mu_i are nonzero: no factorization of degree one in p");
    if (ir.brute_force_ran) ev.push_back(std::string("exhaustive factor search: ") + (ir.factors ? "factorization found" : "none"));
    if (ir.factors) {
      ev.push_back("2H = (" + format_poly(ir.factors->first(sys)) + ")*(" + format_poly(ir.factors->second(sys)) + ")");
    }
    rep.results.push_back({"irreducibility", format_poly(sys.hamiltonian()), std::nullopt,
                           ir.irreducible ? "irreducible" : "reducible", ev});
  } else if (cmd == "theorem1") {
    require_polys(cfg, 0, 0);
    if (!cfg.max_gamma_degree) throw InputError("theorem1 expects --max-gamma-degree");
    const TheoremReport tr = check_theorem1(sys, *cfg.max_gamma_degree, cfg.branch_cap);
    rep.results.push_back({"theorem1", format_poly(sys.hamiltonian()), std::nullopt, to_string(tr.verdict),
                           theorem_evidence(tr)});
    rep.residual_conditions = tr.residual_conditions;
  } else if (cmd == "theorem2") {
    require_polys(cfg, 1, 1);
    auto cert = cofactor_of(sys, polys[0]);
    if (!cert) throw InputError("not a Darboux polynomial: " + format_poly(polys[0]));
    const TheoremReport tr = check_theorem2_pipeline(sys, *cert);
    ResultEntry e{"theorem2", format_poly(polys[0]), format_poly(cert->cofactor), to_string(tr.verdict),
                  theorem_evidence(tr)};
    if (tr.integral) e.evidence.push_back(Json{{"integral", format_poly(tr.integral->polynomial)}});
    rep.results.push_back(std::move(e));
  } else if (cmd == "numcheck") {
    require_polys(cfg, 1, SIZE_MAX);
    if (cfg.samples == 0) throw InputError("--samples must be positive");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::vector<std::vector<double>> points(cfg.samples);
    for (auto& x : points) {
      for (std::size_t k = 0; k < sys.nvars(); ++k) x.push_back(coord(rng));
    }
    for (const auto& f : polys) {
      double worst = 0;
      for (const auto& x0 : points) worst = std::max(worst, drift(sys, f, x0, cfg.h, cfg.T));
      rep.results.push_back({"drift", format_poly(f), std::nullopt,
                             worst <= kDriftTolerance ? "conserved" : "not-conserved",
                             Json{{"max_drift", worst},
                                  {"tolerance", kDriftTolerance},
                                  {"samples", cfg.samples},
                                  {"h", cfg.h},
                                  {"T", cfg.T},
                                  {"seed", cfg.seed}}});
    }
  } else {
    throw InputError("unknown command " + cmd);
  }
  return rep;
}

void emit(const Report& rep, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output == "json") {
    out << to_json(rep).dump(2) << "\n";
  } else {
    out << to_text(rep);
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Darboux polynomials and first integrals of natural polynomial Hamiltonian systems", "darboux"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  struct Spec {
    const char* name;
    const char* help;
    bool system, poly, gamma, max_gamma, numeric, cap;
  };
  const std::vector<Spec> specs{
      {"cofactor", "cofactor of each --poly, or report that it is not Darboux", true, true, false, false, false, false},
      {"verify-integral", "check d_H(F) = 0 exactly", true, true, false, false, false, false},
      {"search", "bounded-degree search for Darboux polynomials", true, false, true, true, false, true},
      {"reversal", "first integral tau(F)*F from a Darboux polynomial F", true, true, false, false, false, false},
      {"independence", "Jacobian independence of (F, G), or of (H, G) with one --poly", true, true, false, false, false, false},
      {"irreducible", "whether H factors into two factors of degree one in p", true, false, false, false, false, false},
      {"theorem1", "odd-degree potential: no proper Darboux polynomials up to a bound", true, false, false, true, false, true},
      {"theorem2", "even-degree potential: integral from a proper Darboux polynomial", true, true, false, false, false, false},
      {"numcheck", "RK4 drift of each --poly along random trajectories", true, true, false, false, true, false},
      {"examples", "run the built-in golden corpus", false, false, false, false, false, false},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", cfg.timing, "report wall-clock time (makes output non-deterministic)");
    if (s.system) sub->add_option("--system", cfg.system_path, "system-definition file")->required();
    if (s.poly) sub->add_option("--poly", cfg.polys, "polynomial in q1..qm, p1..pm (repeatable)");
    if (s.gamma) sub->add_option("--gamma-degree", cfg.gamma_degree, "exact gamma-degree of the ansatz");
    if (s.max_gamma) sub->add_option("--max-gamma-degree", cfg.max_gamma_degree, "gamma-degree bound");
    if (s.cap) sub->add_option("--branch-cap", cfg.branch_cap, "abort after this many branches")->check(CLI::PositiveNumber);
    if (s.numeric) {
      sub->add_option("--h", cfg.h, "RK4 step")->check(CLI::PositiveNumber);
      sub->add_option("--T", cfg.T, "integration horizon")->check(CLI::PositiveNumber);
      sub->add_option("--samples", cfg.samples, "number of random initial points")->check(CLI::PositiveNumber);
      sub->add_option("--seed", cfg.seed, "seed for the initial points");
    }
    sub->callback([&cfg, name = std::string(s.name)] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "darboux: " << e.what() << "\n";
    return 1;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  try {
    Report rep = cfg.command == "examples" ? run_examples() : run_on_system(cfg);
    if (cfg.timing) rep.timing_ms = elapsed();
    emit(rep, cfg, out);
    if (cfg.command == "examples") {
      for (const auto& r : rep.results) {
        if (r.verdict != "pass") {
          err << "darboux: golden assertion failed: " << r.evidence.dump() << "\n";
          return 2;
        }
      }
    }
    return 0;
  } catch (const SearchAborted& e) {
    Report rep{cfg.command, nullptr, {}, {}, {}, std::nullopt};
    for (const auto& c : e.partial().certificates) rep.results.push_back(certificate_entry(c));
    rep.residual_conditions = e.partial().residual_strings();
    rep.extra.emplace_back("aborted", e.what());
    emit(rep, cfg, out);
    err << "darboux: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "darboux: parse error at " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    err << "darboux: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    err << "darboux: internal invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "darboux: internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace darboux
