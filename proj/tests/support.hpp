#pragma once

#include <random>
#include <string>
#include <vector>

#include "darboux/field.hpp"
#include "darboux/hamiltonian.hpp"
#include "darboux/parser.hpp"
#include "darboux/poly.hpp"

namespace testing {

using namespace darboux;

inline FieldSpec Q() { return FieldSpec::rationals(); }
inline FieldSpec QI(long d) { return FieldSpec::quad_gauss(d); }

inline Poly P(const std::string& text, std::size_t m, FieldSpec f) {
  return parse_poly(text, ParseContext{VarSet(m), f});
}
inline Poly P(const NaturalHamiltonian& sys, const std::string& text) {
  return parse_poly(text, ParseContext{sys.varset(), sys.field()});
}
inline FieldElement S(const std::string& text, FieldSpec f) { return parse_scalar(text, f); }

inline NaturalHamiltonian system(const std::string& mu, const std::string& V, FieldSpec f = Q(), std::size_t m = 2) {
  std::string text = "m = " + std::to_string(m) + "\nfield = " + f.to_string() + "\nmu = " + mu + "\nV = " + V + "\n";
  return NaturalHamiltonian::from_definition(parse_system_definition(text));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

  Rational rational(long span = 9) {
    long den = integer(1, 5);
    return Rational(integer(-span, span), den);  // canonicalized by FieldElement
  }

  FieldElement scalar(FieldSpec f, bool allow_zero = true) {
    while (true) {
      FieldElement x = f.is_rationals()
                           ? FieldElement(f, rational())
                           : FieldElement(f, sparse(), sparse(), sparse(), sparse());
      if (allow_zero || !x.is_zero()) return x;
    }
  }

  /// Random polynomial with up to max_terms terms of total degree <= max_deg
  /// over the given variables (default: all).
  Poly poly(std::size_t nvars, FieldSpec f, int max_terms, unsigned max_deg, std::vector<std::size_t> vars = {}) {
    if (vars.empty()) {
      for (std::size_t v = 0; v < nvars; ++v) vars.push_back(v);
    }
    std::vector<Term> terms;
    int count = static_cast<int>(integer(0, max_terms));
    for (int t = 0; t < count; ++t) {
      Monomial mono;
      unsigned budget = static_cast<unsigned>(integer(0, max_deg));
      for (unsigned k = 0; k < budget; ++k) {
        std::size_t v = vars[static_cast<std::size_t>(integer(0, static_cast<long>(vars.size()) - 1))];
        mono.set(v, mono[v] + 1);
      }
      terms.push_back({mono, scalar(f, false)});
    }
    return Poly::from_terms(nvars, f, std::move(terms));
  }

  std::vector<std::size_t> q_vars(std::size_t m) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m; ++i) out.push_back(i);
    return out;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  Rational sparse() { return coin(0.5) ? Rational(0) : rational(); }
  std::mt19937_64 gen_;
};

}  // namespace testing

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<darboux::Poly> {
  static String convert(const darboux::Poly& p) { return darboux::format_poly(p).c_str(); }
};
template <>
struct StringMaker<darboux::FieldElement> {
  static String convert(const darboux::FieldElement& x) { return darboux::format_scalar(x).c_str(); }
};
}  // namespace doctest
#endif
