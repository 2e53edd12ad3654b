#pragma once

// Reducibility of H, functional independence, and checkers for the two
// structural results on natural Hamiltonians: odd-degree potentials admit
// no proper Darboux polynomials, and for even degree a proper Darboux
// polynomial F yields the additional integral tau(F)*F.

#include <optional>
#include <string>
#include <vector>

#include "darboux/darboux.hpp"
#include "darboux/hamiltonian.hpp"

namespace darboux {

/// Trial factorization 2H = (sum alpha_i p_i + W1)(sum beta_i p_i + W2),
/// W1, W2 in k[q], W1*W2 = 2V.
struct FactorAnsatz {
  std::vector<FieldElement> alpha;
  std::vector<FieldElement> beta;
  Poly w1;
  Poly w2;

  Poly first(const NaturalHamiltonian& sys) const;
  Poly second(const NaturalHamiltonian& sys) const;
};

struct IrreducibilityResult {
  bool irreducible = true;
  /// At least two mu_i are nonzero, which already rules out a factorization.
  bool criterion_applies = false;
  /// The exhaustive factor search ran (m <= 3, or the criterion does not apply).
  bool brute_force_ran = false;
  /// Explicit factors when H is reducible.
  std::optional<FactorAnsatz> factors;
};

/// Throws InputError when every mu_i vanishes (H = V is outside the
/// degree-one-in-p factor model).  Throws InvariantViolation if the criterion
/// and the exhaustive search disagree.
IrreducibilityResult is_irreducible_natural_H(const NaturalHamiltonian& sys);

/// Solves the matching conditions for a factorization of 2H into two
/// factors of degree one in p.  Every candidate is expanded and compared
/// with 2H before it is returned.
std::optional<FactorAnsatz> brute_force_factor_search(const NaturalHamiltonian& sys);

/// All 2x2 minors of the Jacobian of (F, G) with respect to (q, p), in
/// column-pair order (0,1), (0,2), ...
std::vector<Poly> jacobian_minors(const Poly& f, const Poly& g);

/// True iff some 2x2 minor is a nonzero polynomial.  Throws InputError
/// when F or G is zero.
bool jacobian_independent(const NaturalHamiltonian& sys, const Poly& f, const Poly& g);

enum class Verdict { ConsistentWithTheorem, CounterexampleFound, HypothesesNotMet };
std::string to_string(Verdict v);

struct TheoremReport {
  Verdict verdict = Verdict::HypothesesNotMet;
  /// Certificates found or constructed, sorted.
  std::vector<DarbouxCertificate> evidence;
  std::vector<std::string> diagnostics;
  std::vector<std::string> residual_conditions;
  /// Even-degree pipeline only: the constructed integral tau(F)*F.
  std::optional<DarbouxCertificate> integral;
};

/// Odd deg V: a structural parity check on the top cofactor stratum plus a
/// bounded search up to max_gamma_degree.  "consistent" never means
/// "proved".
TheoremReport check_theorem1(const NaturalHamiltonian& sys, long max_gamma_degree, std::size_t branch_cap = 10'000);

/// Even deg V, at least two nonzero mu_i, proper certificate: builds
/// tau(F)*F, re-verifies it as an integral and tests independence from H.
TheoremReport check_theorem2_pipeline(const NaturalHamiltonian& sys, const DarbouxCertificate& cert);

}  // namespace darboux
