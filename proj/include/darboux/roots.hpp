#pragma once

// Roots in the coefficient field of univariate polynomials of low degree.

#include <span>
#include <vector>

#include "darboux/field.hpp"

namespace darboux {

/// Univariate polynomial, coefficients low degree first.
using UniPoly = std::vector<FieldElement>;

struct FieldRoots {
  /// Distinct roots lying in the field, in deterministic order.
  std::vector<FieldElement> roots;
  /// Monic factor collecting every root outside the field (degree 0 when
  /// all roots were found).
  UniPoly leftover;
};

/// Finds the roots of p that lie in its coefficient field.  Degrees 1 and
/// 2 are solved in radicals with exact square roots.  For degrees 3 and 4
/// in-field roots are located numerically, recognized as field elements
/// and accepted only after exact verification, then deflated; what
/// remains is reported as leftover.  Degrees above 4 only have the root 0
/// extracted.  Precondition: p is not the zero polynomial.
FieldRoots roots_in_field(UniPoly p);

UniPoly uni_trim(UniPoly p);
UniPoly uni_derivative(const UniPoly& p);
/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd.
UniPoly uni_gcd(UniPoly a, UniPoly b);
FieldElement uni_eval(const UniPoly& p, const FieldElement& x);

}  // namespace darboux
