#pragma once

// Darboux polynomials of the Hamiltonian derivation: d_H(F) = Lambda * F.

#include <optional>

#include "darboux/errors.hpp"
#include "darboux/hamiltonian.hpp"
#include "darboux/poly.hpp"

namespace darboux {

struct DarbouxCertificate {
  Poly polynomial;  ///< F, monic in the canonical order
  Poly cofactor;    ///< Lambda, depends on q only
  bool proper = false;  ///< Lambda != 0
};

/// Extracts the cofactor of F, or nullopt when F is not a Darboux
/// polynomial.  A returned cofactor that depends on a momentum or exceeds
/// the gamma-degree bound r - 2 raises InvariantViolation.  Throws
/// InputError for F = 0.
std::optional<DarbouxCertificate> cofactor_of(const NaturalHamiltonian& sys, const Poly& f);

/// d_H(F) == 0 exactly.  Throws InputError for F = 0.
bool verify_first_integral(const NaturalHamiltonian& sys, const Poly& f);

/// Recomputes d_H(F) - Lambda*F and the Lambda invariants; throws
/// InvariantViolation on any failure.
void check_certificate(const NaturalHamiltonian& sys, const DarbouxCertificate& cert);

/// Certificate for tau(F)*F with zero cofactor.  Requires even deg V
/// (HypothesisError otherwise) and a valid certificate (InputError).
/// Confirms on the way that tau(F) has cofactor -Lambda.
DarbouxCertificate reversal_integral(const NaturalHamiltonian& sys, const DarbouxCertificate& cert);

/// F/G as a rational first integral: coprime, equal cofactors.
struct RationalIntegral {
  Poly numerator;
  Poly denominator;
  Poly cofactor;
};

class CofactorMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// Raised when the pair shares a nonconstant factor; the factor itself is
/// a Darboux polynomial.
class CommonFactor : public InputError {
 public:
  CommonFactor(const std::string& what, Poly factor) : InputError(what), factor_(std::move(factor)) {}
  const Poly& factor() const { return factor_; }

 private:
  Poly factor_;
};

RationalIntegral rational_integral_from_pair(const NaturalHamiltonian& sys, const DarbouxCertificate& num,
                                             const DarbouxCertificate& den);

}  // namespace darboux
