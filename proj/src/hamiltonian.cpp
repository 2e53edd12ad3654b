#include "darboux/hamiltonian.hpp"

#include <utility>

#include "darboux/errors.hpp"

namespace darboux {

NaturalHamiltonian::NaturalHamiltonian(VarSet vs, std::vector<FieldElement> mu, Poly potential)
    : varset_(vs), mu_(std::move(mu)), potential_(std::move(potential)) {}

NaturalHamiltonian NaturalHamiltonian::make(std::vector<FieldElement> mu, Poly potential) {
  if (mu.size() < 2) throw InputError("natural Hamiltonian needs m >= 2 degrees of freedom");
  const std::size_t m = mu.size();
  if (potential.nvars() != 2 * m) throw InputError("potential ring does not match m = " + std::to_string(m));
  for (const auto& x : mu) {
    if (!(x.field() == potential.field())) throw FieldMismatch("mu and V are over different fields");
  }
  if (potential.is_zero()) throw InputError("potential V must be nonzero");
  const VarSet vs(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (potential.depends_on(vs.p(i))) throw InputError("potential V must not depend on " + vs.name(vs.p(i)));
  }

  NaturalHamiltonian sys(vs, std::move(mu), std::move(potential));
  sys.degree_ = sys.potential_.total_degree();
  const FieldSpec f = sys.field();
  Poly kinetic(2 * m, f);
  const FieldElement half(f, Rational(1, 2));
  for (std::size_t i = 0; i < m; ++i) {
    Monomial sq = Monomial::variable(vs.p(i), 2);
    kinetic += Poly::monomial(2 * m, half * sys.mu_[i], sq);
  }
  sys.hamiltonian_ = kinetic + sys.potential_;
  for (std::size_t i = 0; i < m; ++i) sys.gradient_.push_back(partial_derivative(sys.potential_, vs.q(i)));
  if (sys.degree_ <= 2) {
    sys.warnings_.push_back("deg V = " + std::to_string(sys.degree_) +
                            " <= 2: grading-based operations are unavailable for this system");
  }
  return sys;
}

NaturalHamiltonian NaturalHamiltonian::from_definition(const SystemDefinition& def) {
  return make(def.mu, def.potential);
}

bool NaturalHamiltonian::potential_is_homogeneous() const {
  for (const auto& t : potential_.terms()) {
    if (static_cast<long>(t.mono.total_degree()) != degree_) return false;
  }
  return true;
}

Poly lie_derivative(const NaturalHamiltonian& sys, const Poly& f) {
  if (f.nvars() != sys.nvars()) throw InputError("polynomial ring does not match the system");
  if (!(f.field() == sys.field())) throw FieldMismatch("polynomial field does not match the system");
  const VarSet& vs = sys.varset();
  Poly out = sys.zero();
  for (std::size_t i = 0; i < vs.m; ++i) {
    Poly dq = partial_derivative(f, vs.q(i));
    if (!dq.is_zero() && !sys.mu()[i].is_zero()) {
      out += dq.times_monomial(sys.mu()[i], Monomial::variable(vs.p(i)));
    }
    Poly dp = partial_derivative(f, vs.p(i));
    if (!dp.is_zero()) out -= sys.potential_gradient()[i] * dp;
  }
  return out;
}

Poly tau(const Poly& f) {
  if (f.nvars() % 2 != 0) throw InputError("tau needs a phase-space ring");
  const std::size_t m = f.nvars() / 2;
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    unsigned pdeg = 0;
    for (std::size_t i = 0; i < m; ++i) pdeg += t.mono[m + i];
    terms.push_back({t.mono, pdeg % 2 == 0 ? t.coef : -t.coef});
  }
  return Poly::from_terms(f.nvars(), f.field(), std::move(terms));
}

Direction gamma_direction(const NaturalHamiltonian& sys) {
  const long r = sys.degree();
  if (r <= 2) throw GradingUnavailable("grading needs deg V >= 3, got " + std::to_string(r));
  std::vector<long> g(sys.nvars(), r);
  for (std::size_t i = 0; i < sys.m(); ++i) g[i] = 2;
  return Direction(std::move(g));
}

NaturalHamiltonian top_hamiltonian(const NaturalHamiltonian& sys) {
  gamma_direction(sys);
  std::vector<Term> top;
  for (const auto& t : sys.potential().terms()) {
    if (static_cast<long>(t.mono.total_degree()) == sys.degree()) top.push_back(t);
  }
  return NaturalHamiltonian::make(sys.mu(), Poly::from_terms(sys.nvars(), sys.field(), std::move(top)));
}

}  // namespace darboux
