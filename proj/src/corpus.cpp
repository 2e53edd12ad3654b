#include "darboux/corpus.hpp"

#include <functional>

#include "darboux/parser.hpp"
#include "darboux/search.hpp"
#include "darboux/structure.hpp"

namespace darboux {

const std::vector<CorpusSystem>& builtin_systems() {
  static const std::vector<CorpusSystem> systems{
      {"s1", "V = q1^4; extra integral p2", "m = 2\nfield = Q\nmu = 1, 1\nV = q1^4\n"},
      {"s1-ext", "V = q1^4 over Q(i,sqrt2)", "m = 2\nfield = Q(i,sqrt2)\nmu = 1, 1\nV = q1^4\n"},
      {"s2", "rotationally symmetric quartic", "m = 2\nfield = Q\nmu = 1, 1\nV = (q1^2 + q2^2)^2\n"},
      {"s3", "V = q1^2 + q2^4 with complex Darboux factors", "m = 2\nfield = Q(i,sqrt2)\nmu = 1, 1\nV = q1^2 + q2^4\n"},
      {"s4", "quartic with a cubic-in-momenta integral",
       "m = 2\nfield = Q\nmu = 1, 1\nV = 4/3*q1^4 + q1^2*q2^2 + 1/12*q2^4\n"},
      {"s5", "quartic with a proper Darboux polynomial over Q(i,sqrt6)",
       "m = 2\nfield = Q(i,sqrt6)\nmu = 1, 1\nV = 4/3*q1^4 + q1^2*q2^2 + 1/6*q2^4\n"},
      {"cubic", "separable homogeneous cubic", "m = 2\nfield = Q\nmu = 1, 1\nV = q1^3 + q2^3\n"},
  };
  return systems;
}

NaturalHamiltonian load_builtin(const std::string& name) {
  for (const auto& s : builtin_systems()) {
    if (s.name == name) return NaturalHamiltonian::from_definition(parse_system_definition(s.definition));
  }
  throw InputError("unknown built-in system '" + name + "'");
}

namespace {

struct Golden {
  std::string system;
  std::string claim;
  std::string poly;
  // Returns an empty string on success, otherwise what went wrong.
  std::function<std::string(const NaturalHamiltonian&, const Poly&)> check;
};

std::string expect_cofactor(const NaturalHamiltonian& sys, const Poly& f, const std::string& expected) {
  auto cert = cofactor_of(sys, f);
  if (!cert) return "not a Darboux polynomial";
  const Poly want = parse_poly(expected, {sys.varset(), sys.field()});
  if (!(cert->cofactor == want)) return "cofactor " + format_poly(cert->cofactor) + ", expected " + expected;
  return "";
}

std::string expect_integral(const NaturalHamiltonian& sys, const Poly& f, bool expected) {
  if (verify_first_integral(sys, f) == expected) return "";
  return expected ? "d_H(F) = " + format_poly(lie_derivative(sys, f)) : "unexpectedly a first integral";
}

const char* kG = "3*sqrt(6)*p2^2 + 12*i*p2*q1*q2 + q2^2*(-6*i*p1 + sqrt(6)*(2*q1^2 + q2^2))";

std::vector<Golden> goldens() {
  return {
      {"s1", "first integral", "p2", [](auto& s, auto& f) { return expect_integral(s, f, true); }},
      {"s2", "first integral", "q1*p2 - q2*p1", [](auto& s, auto& f) { return expect_integral(s, f, true); }},
      {"s3", "Darboux with cofactor -2*i*sqrt(2)*q2", "i*p2 + sqrt(2)*q2^2",
       [](auto& s, auto& f) { return expect_cofactor(s, f, "-2*i*sqrt(2)*q2"); }},
      {"s3", "reversed factor has cofactor 2*i*sqrt(2)*q2", "i*p2 + sqrt(2)*q2^2",
       [](auto& s, auto& f) { return expect_cofactor(s, tau(f), "2*i*sqrt(2)*q2"); }},
      {"s3", "first integral", "p2^2 + 2*q2^4", [](auto& s, auto& f) { return expect_integral(s, f, true); }},
      {"s3", "not a first integral (q2^2 variant)", "p2^2 + 2*q2^2",
       [](auto& s, auto& f) { return expect_integral(s, f, false); }},
      {"s4", "first integral", "p2*(p1*q2 - p2*q1) + 1/3*q2^2*(2*q1^3 + q1*q2^2)",
       [](auto& s, auto& f) { return expect_integral(s, f, true); }},
      {"s5", "Darboux with cofactor 2/3*i*sqrt(6)*q1", kG,
       [](auto& s, auto& f) { return expect_cofactor(s, f, "2/3*i*sqrt(6)*q1"); }},
      {"s5", "tau(G)*G is a first integral independent of H", kG,
       [](auto& s, auto& f) -> std::string {
         auto cert = cofactor_of(s, f);
         if (!cert) return "not a Darboux polynomial";
         const auto g = reversal_integral(s, *cert);
         if (!verify_first_integral(s, g.polynomial)) return "tau(G)*G is not an integral";
         if (!jacobian_independent(s, s.hamiltonian(), g.polynomial)) return "tau(G)*G depends on H";
         return "";
       }},
      {"s3", "even-degree pipeline yields p2^2 + 2*q2^4", "i*p2 + sqrt(2)*q2^2",
       [](auto& s, auto& f) -> std::string {
         auto cert = cofactor_of(s, f);
         if (!cert) return "not a Darboux polynomial";
         const auto rep = check_theorem2_pipeline(s, *cert);
         if (rep.verdict != Verdict::ConsistentWithTheorem) return to_string(rep.verdict);
         const Poly want = parse_poly("p2^2 + 2*q2^4", {s.varset(), s.field()});
         if (!(rep.integral->polynomial == want)) return "integral " + format_poly(rep.integral->polynomial);
         return "";
       }},
      {"s1-ext", "gamma-degree 4 search finds exactly 3 certificates", "",
       [](auto& s, auto&) -> std::string {
         const auto rep = search_darboux(s, {4, true, 10'000});
         if (rep.certificates.size() != 3) return std::to_string(rep.certificates.size()) + " certificates";
         return "";
       }},
      {"s1", "gamma-degree 4 search finds p2 and the condition l1^2 + 8", "",
       [](auto& s, auto&) -> std::string {
         const auto rep = search_darboux(s, {4, true, 10'000});
         if (rep.certificates.size() != 1 || format_poly(rep.certificates[0].polynomial) != "p2") {
           return std::to_string(rep.certificates.size()) + " certificates";
         }
         if (rep.residual_strings() != std::vector<std::string>{"l1^2 + 8"}) return "unexpected residual conditions";
         return "";
       }},
      {"s2", "H is irreducible", "", [](auto& s, auto&) -> std::string {
         return is_irreducible_natural_H(s).irreducible ? "" : "factorization found";
       }},
      {"s3", "H is irreducible", "", [](auto& s, auto&) -> std::string {
         return is_irreducible_natural_H(s).irreducible ? "" : "factorization found";
       }},
      {"s5", "H is irreducible", "", [](auto& s, auto&) -> std::string {
         return is_irreducible_natural_H(s).irreducible ? "" : "factorization found";
       }},
      {"cubic", "no proper Darboux polynomial up to gamma-degree 12", "",
       [](auto& s, auto&) -> std::string {
         const auto rep = check_theorem1(s, 12);
         return rep.verdict == Verdict::ConsistentWithTheorem ? "" : to_string(rep.verdict);
       }},
  };
}

}  // namespace

std::vector<GoldenCheck> run_golden_corpus() {
  std::vector<GoldenCheck> out;
  for (const auto& g : goldens()) {
    GoldenCheck res{g.system, g.claim, "", false, ""};
    try {
      const NaturalHamiltonian sys = load_builtin(g.system);
      const Poly f = g.poly.empty() ? sys.zero() : parse_poly(g.poly, {sys.varset(), sys.field()});
      res.poly = g.poly.empty() ? "" : format_poly(f);
      res.detail = g.check(sys, f);
      res.passed = res.detail.empty();
    } catch (const std::exception& e) {
      res.detail = e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace darboux
