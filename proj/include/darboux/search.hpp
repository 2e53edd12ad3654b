#pragma once

// Bounded-degree search for Darboux polynomials.
//
// Ansatz: F = sum f_a x^a over monomials of gamma-degree <= D (or == D),
// Lambda = sum l_b q^b over q-monomials of gamma-degree <= r-2 (exactly
// r-2 for homogeneous V).  Matching coefficients of d_H(F) - Lambda*F
// gives a system M(l) f = 0 whose entries are affine in the cofactor
// parameters l.  The system is eliminated over the polynomial ring in l,
// splitting on whether each non-constant pivot vanishes.  When a branch
// fixes every parameter the kernel is computed over the field.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "darboux/darboux.hpp"
#include "darboux/errors.hpp"
#include "darboux/hamiltonian.hpp"

namespace darboux {

struct SearchOptions {
  /// Gamma-degree of the F ansatz (exact, or an upper bound).
  long gamma_degree = 0;
  bool homogeneous_only = true;
  std::size_t branch_cap = 10'000;
};

/// A constraint on the cofactor parameters the search could not resolve
/// in the configured field, with the parameter values fixed on its branch.
struct ResidualCondition {
  Poly condition;
  std::vector<std::pair<std::size_t, Poly>> assignments;
  /// The system is known to have a nonzero kernel at every root.  When
  /// false the condition is only necessary (a pivot vanishes there).
  bool confirmed = false;
};

struct SearchReport {
  std::vector<DarbouxCertificate> certificates;
  std::size_t branches_explored = 0;
  std::vector<ResidualCondition> residual_conditions;
  /// Phase-space q-monomial multiplying each parameter l1, l2, ...
  std::vector<Monomial> cofactor_monomials;
  std::size_t ansatz_size = 0;
  std::vector<std::string> notes;

  /// "l1", "l2", ...
  std::vector<std::string> parameter_names() const;
  /// Rendered condition polynomials, deduplicated and sorted.
  std::vector<std::string> residual_strings() const;
  /// "l1*q1 + l2*q2" style description of the cofactor ansatz.
  std::string cofactor_ansatz(const VarSet& vs) const;
};

/// Raised when the branch cap is exceeded; carries what was found so far.
class SearchAborted : public Error {
 public:
  SearchAborted(const std::string& what, SearchReport partial) : Error(what), partial_(std::move(partial)) {}
  const SearchReport& partial() const { return partial_; }

 private:
  SearchReport partial_;
};

/// Throws GradingUnavailable for r <= 2 and InputError for gamma_degree < 1.
SearchReport search_darboux(const NaturalHamiltonian& sys, const SearchOptions& opts);

/// Monomials of the F ansatz in increasing canonical order.
std::vector<Monomial> darboux_ansatz_monomials(const NaturalHamiltonian& sys, long gamma_degree,
                                               bool homogeneous_only);
/// q-monomials of the cofactor ansatz in increasing canonical order.
std::vector<Monomial> cofactor_ansatz_monomials(const NaturalHamiltonian& sys);

}  // namespace darboux
