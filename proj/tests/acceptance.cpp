// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  Timing limits are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "darboux/cli.hpp"
#include "darboux/corpus.hpp"
#include "darboux/darboux.hpp"
#include "darboux/numcheck.hpp"
#include "darboux/search.hpp"
#include "darboux/structure.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <class F>
double timed(F&& f) {
  auto t0 = Clock::now();
  f();
  return seconds_since(t0);
}

const char* kS4Integral = "p2*(p1*q2 - p2*q1) + 1/3*q2^2*(2*q1^3 + q1*q2^2)";
const char* kS5G = "3*sqrt(6)*p2^2 + 12*i*p2*q1*q2 + q2^2*(-6*i*p1 + sqrt(6)*(2*q1^2 + q2^2))";

Outcome golden_integrals() {
  Outcome o;
  const std::vector<std::pair<const char*, const char*>> cases = {
      {"s1", "p2"}, {"s2", "q1*p2 - q2*p1"}, {"s4", kS4Integral}};
  for (const auto& [name, poly] : cases) {
    bool verified = false;
    double t = timed([&] {
      auto sys = load_builtin(name);
      verified = verify_first_integral(sys, P(sys, poly));
    });
    o.require(verified, std::string(name) + ": not a first integral");
    o.require(t < 1.0, std::string(name) + ": slower than 1 s");
  }
  return o;
}

Outcome corrected_item() {
  Outcome o;
  double t = timed([&] {
    auto s = system("1, 1", "1*q1^2 + q2^4", QI(2));
    auto g1 = P(s, "i*p2 + sqrt(2)*q2^2");
    auto c = cofactor_of(s, g1);
    o.require(c && c->cofactor == P(s, "-2*sqrt(2)*i*q2"), "cofactor of i p2 + sqrt2 q2^2");
    auto ct = cofactor_of(s, tau(g1));
    o.require(ct && ct->cofactor == P(s, "2*sqrt(2)*i*q2"), "cofactor of tau(G1)");
    o.require(tau(g1) * g1 == P(s, "p2^2 + 2*q2^4"), "product expansion");
    o.require(verify_first_integral(s, P(s, "p2^2 + 2*q2^4")), "p2^2 + 2 q2^4 is not an integral");
    o.require(!verify_first_integral(s, P(s, "p2^2 + 2*q2^2")), "p2^2 + 2 q2^2 verifies");
  });
  o.require(t < 1.0, "slower than 1 s");
  return o;
}

Outcome item_five() {
  Outcome o;
  double t = timed([&] {
    auto s = load_builtin("s5");
    auto c = cofactor_of(s, P(s, kS5G));
    o.require(c && c->proper, "G is not a proper Darboux polynomial");
    if (!c) return;
    auto g = reversal_integral(s, *c);
    o.require(g.cofactor.is_zero() && verify_first_integral(s, g.polynomial), "tau(G)G is not an integral");
    o.require(g.polynomial == tau(c->polynomial) * c->polynomial, "reversal is not tau(G)G");
    o.require(jacobian_independent(s, s.hamiltonian(), g.polynomial), "tau(G)G depends on H");
  });
  o.require(t < 5.0, "slower than 5 s");
  return o;
}

Outcome theorem_one() {
  Outcome o;
  Rng rng(2024);
  std::vector<NaturalHamiltonian> systems = {load_builtin("cubic")};
  const auto one = FieldElement::one(Q());
  while (systems.size() < 21) {
    // dense cubic: every monomial of degree <= 3 with a coefficient in [-3, 3]
    Poly v(4, Q());
    for (unsigned a = 0; a <= 3; ++a) {
      for (unsigned b = 0; a + b <= 3; ++b) {
        Monomial mono;
        mono.set(0, a);
        mono.set(1, b);
        v += Poly::monomial(4, FieldElement(Q(), rng.integer(-3, 3)), mono);
      }
    }
    if (v.total_degree() != 3) continue;
    systems.push_back(NaturalHamiltonian::make({one, one}, v));
  }
  double t = timed([&] {
    for (const auto& s : systems) {
      auto rep = check_theorem1(s, 12);
      const std::string v = format_poly(s.potential());
      o.require(rep.verdict == Verdict::ConsistentWithTheorem, "V = " + v + ": " + to_string(rep.verdict));
      for (const auto& c : rep.evidence) o.require(!c.proper, "V = " + v + ": proper certificate " + format_poly(c.polynomial));
      if (s.potential_is_homogeneous()) {
        bool parity = false;
        for (const auto& d : rep.diagnostics) parity = parity || d.find("r-2 is empty") != std::string::npos;
        o.require(parity, "parity check did not pass for V = " + v);
      }
    }
  });
  o.require(t < 60.0, "slower than 60 s");
  if (o.ok) o.detail = std::to_string(systems.size()) + " systems";
  return o;
}

std::string cli_json(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"darboux"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Outcome search_determinism() {
  Outcome o;
  auto ext = load_builtin("s1-ext");
  auto rep = search_darboux(ext, {4, true});
  o.require(rep.certificates.size() == 3, "expected 3 certificates over Q(i,sqrt2)");
  auto want = [&](const char* f, const char* c) {
    for (const auto& cert : rep.certificates) {
      if (cert.polynomial == P(ext, f) && cert.cofactor == P(ext, c)) return true;
    }
    return false;
  };
  o.require(want("p2", "0") && want("p1 + sqrt(2)*i*q1^2", "2*sqrt(2)*i*q1") &&
                want("p1 - sqrt(2)*i*q1^2", "-2*sqrt(2)*i*q1"),
            "certificates differ from the hand elimination");
  auto rat = load_builtin("s1");
  auto rq = search_darboux(rat, {4, true});
  o.require(rq.certificates.size() == 1 && rq.certificates[0].polynomial == P(rat, "p2"), "expected only p2 over Q");
  o.require(rq.residual_strings() == std::vector<std::string>{"l1^2 + 8"}, "residual condition is not l1^2 + 8");
  const std::string path = std::string(DARBOUX_DATA_DIR) + "/systems/";
  for (const char* name : {"s1", "s1-ext"}) {
    const std::vector<std::string> args = {"search", "--system", path + name + ".dhs", "--gamma-degree", "4",
                                           "--output", "json"};
    const std::string a = cli_json(args), b = cli_json(args);
    o.require(!a.empty() && a == b, std::string("JSON differs across runs for ") + name);
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  const std::vector<std::pair<const char*, std::function<PropertyResult(int, std::uint64_t)>>> suites = {
      {"Leibniz", leibniz_rule},
      {"tau anticommutation", tau_anticommutation},
      {"cofactor additivity", cofactor_additivity},
      {"Euler identity", euler_identity},
      {"scaling identity", scaling_identity},
      {"cofactor in k[q] with gamma bound", certificate_invariants},
      {"gamma decomposition round trip", gamma_round_trip},
      {"parse/format round trip", format_round_trip},
  };
  int total = 0;
  for (const auto& [name, fn] : suites) {
    auto r = fn(500, 7000 + static_cast<std::uint64_t>(total));
    total += r.cases;
    o.require(r.ok() && r.cases >= 500, std::string(name) + ": " + r.failure);
  }
  if (o.ok) o.detail = std::to_string(total) + " cases";
  return o;
}

Outcome irreducibility() {
  Outcome o;
  double t = timed([&] {
    for (const char* name : {"s2", "s3", "s5"}) {
      o.require(is_irreducible_natural_H(load_builtin(name)).irreducible, std::string(name) + " reported reducible");
    }
    auto red = system("1, 0", "-1/2*q2^4");
    auto r = is_irreducible_natural_H(red);
    o.require(!r.irreducible && r.factors, "mu = (1,0), V = -q2^4/2 reported irreducible");
    if (r.factors) {
      o.require(r.factors->first(red) * r.factors->second(red) == P(red, "p1^2 - q2^4"), "factors do not give 2H");
    }
    Rng rng(77);
    for (int k = 0; k < 100; ++k) {
      const std::size_t m = k % 2 == 0 ? 2 : 3;
      std::vector<FieldElement> mu;
      for (std::size_t i = 0; i < m; ++i) mu.push_back(rng.coin(0.3) ? FieldElement::zero(Q()) : FieldElement(Q(), rng.integer(-3, 3)));
      if (std::all_of(mu.begin(), mu.end(), [](const auto& x) { return x.is_zero(); })) mu[0] = FieldElement::one(Q());
      Poly v(2 * m, Q());
      while (v.is_zero()) v = rng.poly(2 * m, Q(), 4, 4, rng.q_vars(m));
      auto sys = NaturalHamiltonian::make(mu, v);
      auto res = is_irreducible_natural_H(sys);
      auto brute = brute_force_factor_search(sys);
      o.require(res.irreducible == !brute.has_value(), "criterion and factor search disagree on V = " + format_poly(v));
    }
  });
  o.require(t < 30.0, "slower than 30 s");
  return o;
}

Outcome numeric() {
  Outcome o;
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0, control = 0;
  double t = timed([&] {
    struct Case {
      NaturalHamiltonian sys;
      Poly f;
    };
    auto s1 = load_builtin("s1"), s2 = load_builtin("s2"), s3 = load_builtin("s3"), s4 = load_builtin("s4");
    std::vector<Case> cases = {{s1, P(s1, "p2")},
                               {s2, P(s2, "q1*p2 - q2*p1")},
                               {s4, P(s4, kS4Integral)},
                               {s3, P(s3, "p2^2 + 2*q2^4")}};
    for (const auto& c : cases) {
      for (int k = 0; k < 16; ++k) {
        std::vector<double> x0(4);
        for (auto& x : x0) x = u(gen);
        worst = std::max(worst, drift(c.sys, c.f, x0, 1e-3, 1.0));
        if (&c == &cases[1]) control = std::max(control, drift(s2, P(s2, "p1"), x0, 1e-3, 1.0));
      }
    }
  });
  o.require(worst <= 1e-6, "integral drift " + std::to_string(worst));
  o.require(control > 1e-2, "control p1 drift only " + std::to_string(control));
  o.require(t < 30.0, "slower than 30 s");
  if (o.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "max integral drift %.2e, control %.2e", worst, control);
    o.detail = buf;
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"golden first integrals (V=q1^4, (q1^2+q2^2)^2, quartic with F of degree 3 in p)", golden_integrals},
      {"factor pair on V=q1^2+q2^4, product integral, q2^2 variant rejected", corrected_item},
      {"Q(i,sqrt6) factor G: cofactor, tau(G)G, independence", item_five},
      {"odd-degree suite up to gamma-degree 12", theorem_one},
      {"search determinism and field sensitivity on V=q1^4", search_determinism},
      {"property suites", property_suites},
      {"irreducibility of H", irreducibility},
      {"RK4 drift of verified integrals", numeric},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double t = seconds_since(t0);
    std::printf("%s criterion %zu: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first, t,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
