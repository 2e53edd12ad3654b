#pragma once

// Natural Hamiltonian systems H = 1/2 sum mu_i p_i^2 + V(q) and their
// Hamiltonian derivation.

#include <string>
#include <vector>

#include "darboux/field.hpp"
#include "darboux/parser.hpp"
#include "darboux/poly.hpp"

namespace darboux {

class NaturalHamiltonian {
 public:
  /// Throws InputError when m < 2, V = 0, V depends on a momentum, or the
  /// mu / V rings disagree.  deg V <= 2 is accepted with a warning.
  static NaturalHamiltonian make(std::vector<FieldElement> mu, Poly potential);
  static NaturalHamiltonian from_definition(const SystemDefinition& def);

  const VarSet& varset() const { return varset_; }
  std::size_t m() const { return varset_.m; }
  std::size_t nvars() const { return varset_.nvars(); }
  const FieldSpec& field() const { return potential_.field(); }
  const std::vector<FieldElement>& mu() const { return mu_; }
  const Poly& potential() const { return potential_; }
  const Poly& hamiltonian() const { return hamiltonian_; }
  /// Total degree r of V.
  long degree() const { return degree_; }
  bool potential_is_homogeneous() const;
  /// dV/dq_i for i = 0..m-1.
  const std::vector<Poly>& potential_gradient() const { return gradient_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Zero polynomial / constant helpers in this system's ring.
  Poly zero() const { return Poly(nvars(), field()); }
  Poly constant(const FieldElement& c) const { return Poly::constant(nvars(), c); }

 private:
  NaturalHamiltonian(VarSet vs, std::vector<FieldElement> mu, Poly potential);

  VarSet varset_;
  std::vector<FieldElement> mu_;
  Poly potential_;
  Poly hamiltonian_;
  long degree_ = 0;
  std::vector<Poly> gradient_;
  std::vector<std::string> warnings_;
};

/// d_H(F) = sum mu_i p_i dF/dq_i - sum dV/dq_i dF/dp_i.
Poly lie_derivative(const NaturalHamiltonian& sys, const Poly& f);

/// Time reversal q -> q, p -> -p on a phase-space polynomial.
Poly tau(const Poly& f);

/// The grading (2, ..., 2, r, ..., r).  Throws GradingUnavailable when r <= 2.
Direction gamma_direction(const NaturalHamiltonian& sys);

/// Same mu, potential replaced by its top-degree homogeneous component.
/// Throws GradingUnavailable when r <= 2.
NaturalHamiltonian top_hamiltonian(const NaturalHamiltonian& sys);

}  // namespace darboux
