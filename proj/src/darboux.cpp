#include "darboux/darboux.hpp"

#include "darboux/parser.hpp"

namespace darboux {

namespace {

void check_ring(const NaturalHamiltonian& sys, const Poly& f) {
  if (f.nvars() != sys.nvars()) throw InputError("polynomial ring does not match the system");
  if (!(f.field() == sys.field())) throw FieldMismatch("polynomial field does not match the system");
}

// Structural invariants of any cofactor of a natural Hamiltonian.
void check_cofactor_shape(const NaturalHamiltonian& sys, const Poly& cofactor) {
  for (std::size_t i = 0; i < sys.m(); ++i) {
    if (cofactor.depends_on(sys.varset().p(i))) {
      throw InvariantViolation("cofactor depends on a momentum: " + format_poly(cofactor));
    }
  }
  if (sys.degree() >= 3) {
    auto g = gamma_degree(cofactor, gamma_direction(sys));
    if (g && *g > sys.degree() - 2) {
      throw InvariantViolation("cofactor exceeds the gamma-degree bound r-2: " + format_poly(cofactor));
    }
  }
}

}  // namespace

std::optional<DarbouxCertificate> cofactor_of(const NaturalHamiltonian& sys, const Poly& f) {
  check_ring(sys, f);
  if (f.is_zero()) throw InputError("the zero polynomial is not a Darboux polynomial");
  auto cofactor = poly_divide_exact(lie_derivative(sys, f), f);
  if (!cofactor) return std::nullopt;
  check_cofactor_shape(sys, *cofactor);
  return DarbouxCertificate{f.monic(), *cofactor, !cofactor->is_zero()};
}

bool verify_first_integral(const NaturalHamiltonian& sys, const Poly& f) {
  check_ring(sys, f);
  if (f.is_zero()) throw InputError("the zero polynomial is excluded");
  return lie_derivative(sys, f).is_zero();
}

void check_certificate(const NaturalHamiltonian& sys, const DarbouxCertificate& cert) {
  check_ring(sys, cert.polynomial);
  check_ring(sys, cert.cofactor);
  if (cert.polynomial.is_zero()) throw InvariantViolation("certificate polynomial is zero");
  if (cert.proper == cert.cofactor.is_zero()) throw InvariantViolation("certificate 'proper' flag is inconsistent");
  if (!(lie_derivative(sys, cert.polynomial) - cert.cofactor * cert.polynomial).is_zero()) {
    throw InvariantViolation("certificate fails d_H(F) = Lambda*F for F = " + format_poly(cert.polynomial));
  }
  check_cofactor_shape(sys, cert.cofactor);
}

DarbouxCertificate reversal_integral(const NaturalHamiltonian& sys, const DarbouxCertificate& cert) {
  if (sys.degree() % 2 != 0) {
    throw HypothesisError("deg V is odd: every Darboux polynomial already has zero cofactor, reversal is vacuous");
  }
  try {
    check_certificate(sys, cert);
  } catch (const InvariantViolation& e) {
    throw InputError(std::string("invalid certificate: ") + e.what());
  }
  const Poly reversed = tau(cert.polynomial);
  auto reversed_cert = cofactor_of(sys, reversed);
  if (!reversed_cert || !(reversed_cert->cofactor == -cert.cofactor)) {
    throw InvariantViolation("tau(F) does not carry cofactor -Lambda");
  }
  const Poly product = (reversed * cert.polynomial).monic();
  DarbouxCertificate out{product, sys.zero(), false};
  check_certificate(sys, out);
  return out;
}

RationalIntegral rational_integral_from_pair(const NaturalHamiltonian& sys, const DarbouxCertificate& num,
                                             const DarbouxCertificate& den) {
  for (const auto* c : {&num, &den}) {
    try {
      check_certificate(sys, *c);
    } catch (const InvariantViolation& e) {
      throw InputError(std::string("invalid certificate: ") + e.what());
    }
  }
  if (!(num.cofactor == den.cofactor)) {
    throw CofactorMismatch("cofactors differ: " + format_poly(num.cofactor) + " vs " + format_poly(den.cofactor));
  }
  Poly g = multivariate_gcd(num.polynomial, den.polynomial);
  if (!g.is_constant()) throw CommonFactor("polynomials share the factor " + format_poly(g), g);
  return RationalIntegral{num.polynomial, den.polynomial, num.cofactor};
}

}  // namespace darboux
