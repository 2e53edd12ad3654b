#include "darboux/structure.hpp"

#include <algorithm>

#include "darboux/search.hpp"

namespace darboux {

namespace {

Poly linear_in_p(const NaturalHamiltonian& sys, const std::vector<FieldElement>& coeffs, const Poly& w) {
  Poly out = w;
  for (std::size_t i = 0; i < sys.m(); ++i) {
    out += Poly::monomial(sys.nvars(), coeffs[i], Monomial::variable(sys.varset().p(i)));
  }
  return out;
}

std::size_t nonzero_mu(const NaturalHamiltonian& sys) {
  return static_cast<std::size_t>(std::count_if(sys.mu().begin(), sys.mu().end(), [](const auto& x) { return !x.is_zero(); }));
}

void sort_certificates(std::vector<DarbouxCertificate>& certs) {
  std::sort(certs.begin(), certs.end(), [](const auto& x, const auto& y) {
    if (int c = Poly::compare(x.polynomial, y.polynomial); c != 0) return c < 0;
    return Poly::compare(x.cofactor, y.cofactor) < 0;
  });
  certs.erase(std::unique(certs.begin(), certs.end(),
                          [](const auto& x, const auto& y) {
                            return x.polynomial == y.polynomial && x.cofactor == y.cofactor;
                          }),
              certs.end());
}

}  // namespace

Poly FactorAnsatz::first(const NaturalHamiltonian& sys) const { return linear_in_p(sys, alpha, w1); }
Poly FactorAnsatz::second(const NaturalHamiltonian& sys) const { return linear_in_p(sys, beta, w2); }

std::optional<FactorAnsatz> brute_force_factor_search(const NaturalHamiltonian& sys) {
  const FieldSpec f = sys.field();
  const std::size_t m = sys.m();
  const Poly target = sys.hamiltonian().scaled(FieldElement(f, 2));
  for (std::size_t k = 0; k < m; ++k) {
    const FieldElement& mu_k = sys.mu()[k];
    if (mu_k.is_zero()) continue;
    // Normalize alpha_k = 1.  The p_k-linear term forces W2 = -mu_k W1 and
    // W1 W2 = 2V then fixes W1 up to sign.
    auto w1 = poly_sqrt(sys.potential().scaled(FieldElement(f, -2) / mu_k));
    if (!w1) continue;
    // alpha_i beta_k + alpha_k beta_i = 0 gives beta_i = -mu_k alpha_i, and
    // alpha_i beta_i = mu_i gives alpha_i^2 = -mu_i / mu_k.
    std::vector<std::vector<FieldElement>> choices(m);
    bool feasible = true;
    for (std::size_t i = 0; i < m && feasible; ++i) {
      if (i == k) {
        choices[i] = {FieldElement::one(f)};
      } else if (sys.mu()[i].is_zero()) {
        choices[i] = {FieldElement::zero(f)};
      } else if (auto s = sqrt(-sys.mu()[i] / mu_k)) {
        choices[i] = {*s, -*s};
      } else {
        feasible = false;
      }
    }
    if (!feasible) continue;
    std::vector<std::size_t> index(m, 0);
    while (true) {
      FactorAnsatz cand;
      for (std::size_t i = 0; i < m; ++i) {
        cand.alpha.push_back(choices[i][index[i]]);
        cand.beta.push_back(i == k ? mu_k : -(mu_k * cand.alpha.back()));
      }
      cand.w1 = *w1;
      cand.w2 = w1->scaled(-mu_k);
      if (cand.first(sys) * cand.second(sys) == target) return cand;
      std::size_t pos = 0;
      while (pos < m && ++index[pos] == choices[pos].size()) index[pos++] = 0;
      if (pos == m) break;
    }
  }
  return std::nullopt;
}

IrreducibilityResult is_irreducible_natural_H(const NaturalHamiltonian& sys) {
  const std::size_t active = nonzero_mu(sys);
  if (active == 0) throw InputError("all mu_i vanish: H = V has no kinetic part");
  IrreducibilityResult out;
  out.criterion_applies = active >= 2;
  if (out.criterion_applies && sys.m() > 3) return out;
  out.brute_force_ran = true;
  out.factors = brute_force_factor_search(sys);
  out.irreducible = !out.factors.has_value();
  if (out.criterion_applies && !out.irreducible) {
    throw InvariantViolation("factor search found a factorization although two mu_i are nonzero");
  }
  return out;
}

std::vector<Poly> jacobian_minors(const Poly& f, const Poly& g) {
  const std::size_t n = f.nvars();
  std::vector<Poly> df, dg;
  for (std::size_t v = 0; v < n; ++v) {
    df.push_back(partial_derivative(f, v));
    dg.push_back(partial_derivative(g, v));
  }
  std::vector<Poly> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) out.push_back(df[a] * dg[b] - df[b] * dg[a]);
  }
  return out;
}

bool jacobian_independent(const NaturalHamiltonian& sys, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) throw InputError("independence test needs nonzero polynomials");
  if (f.nvars() != sys.nvars() || g.nvars() != sys.nvars()) throw InputError("polynomial ring does not match the system");
  const auto minors = jacobian_minors(f, g);
  return std::any_of(minors.begin(), minors.end(), [](const Poly& p) { return !p.is_zero(); });
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ConsistentWithTheorem: return "consistent-with-theorem";
    case Verdict::CounterexampleFound: return "counterexample-found";
    case Verdict::HypothesesNotMet: return "hypotheses-not-met";
  }
  return "";
}

TheoremReport check_theorem1(const NaturalHamiltonian& sys, long max_gamma_degree, std::size_t branch_cap) {
  TheoremReport out;
  const long r = sys.degree();
  if (r % 2 == 0 || r < 3) {
    out.diagnostics.push_back("deg V = " + std::to_string(r) + " is not an odd degree >= 3");
    return out;
  }
  if (max_gamma_degree < 1) throw InputError("max gamma-degree must be >= 1");

  // Structural part: q-monomials have even gamma-degree, so nothing sits
  // in the odd stratum r - 2.
  const Direction g = gamma_direction(sys);
  const auto lambda_monos = cofactor_ansatz_monomials(sys);
  const bool top_empty = std::none_of(lambda_monos.begin(), lambda_monos.end(),
                                      [&](const Monomial& mono) { return g.weight(mono) == r - 2; });
  out.diagnostics.push_back(std::string("parity check: cofactor stratum of gamma-degree r-2 is ") +
                            (top_empty ? "empty" : "NOT empty"));
  if (!sys.potential_is_homogeneous()) {
    std::string lower;
    for (long d = 0; d < r - 2; d += 2) lower += (lower.empty() ? "" : ", ") + std::to_string(d);
    out.diagnostics.push_back("parity argument covers only the top stratum; lower cofactor strata {" + lower +
                              "} are checked by the bounded search alone");
  }

  std::vector<SearchReport> reports;
  if (sys.potential_is_homogeneous()) {
    for (long d = 1; d <= max_gamma_degree; ++d) reports.push_back(search_darboux(sys, {d, true, branch_cap}));
  } else {
    reports.push_back(search_darboux(sys, {max_gamma_degree, false, branch_cap}));
  }
  bool proper_found = false;
  for (const auto& rep : reports) {
    for (const auto& cert : rep.certificates) {
      check_certificate(sys, cert);
      proper_found = proper_found || cert.proper;
      out.evidence.push_back(cert);
    }
    for (const auto& s : rep.residual_strings()) out.residual_conditions.push_back(s);
    for (const auto& n : rep.notes) out.diagnostics.push_back(n);
  }
  sort_certificates(out.evidence);
  std::sort(out.residual_conditions.begin(), out.residual_conditions.end());
  out.residual_conditions.erase(std::unique(out.residual_conditions.begin(), out.residual_conditions.end()),
                                out.residual_conditions.end());
  out.diagnostics.push_back("bounded search up to gamma-degree " + std::to_string(max_gamma_degree) + " over " +
                            sys.field().to_string() + ": " + (proper_found ? "proper" : "no proper") +
                            " Darboux polynomial found");
  if (proper_found) {
    out.verdict = Verdict::CounterexampleFound;
  } else if (top_empty) {
    out.verdict = Verdict::ConsistentWithTheorem;
  } else {
    throw InvariantViolation("odd-degree cofactor stratum r-2 contains a q-monomial");
  }
  return out;
}

TheoremReport check_theorem2_pipeline(const NaturalHamiltonian& sys, const DarbouxCertificate& cert) {
  TheoremReport out;
  if (sys.degree() % 2 != 0) {
    out.diagnostics.push_back("deg V = " + std::to_string(sys.degree()) + " is odd");
    return out;
  }
  if (nonzero_mu(sys) < 2) {
    out.diagnostics.push_back("fewer than two mu_i are nonzero");
    return out;
  }
  if (cert.cofactor.is_zero()) {
    out.diagnostics.push_back("not proper: the cofactor is zero");
    return out;
  }
  const DarbouxCertificate integral = reversal_integral(sys, cert);
  if (!verify_first_integral(sys, integral.polynomial)) {
    throw InvariantViolation("tau(F)*F is not a first integral");
  }
  out.evidence.push_back(cert);
  out.integral = integral;
  if (jacobian_independent(sys, sys.hamiltonian(), integral.polynomial)) {
    out.verdict = Verdict::ConsistentWithTheorem;
    out.diagnostics.push_back("tau(F)*F is a first integral functionally independent of H");
  } else {
    out.verdict = Verdict::CounterexampleFound;
    out.diagnostics.push_back("tau(F)*F is a first integral but every Jacobian minor with H vanishes");
  }
  return out;
}

}  // namespace darboux
