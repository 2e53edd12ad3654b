#pragma once

// Numerical cross-check of first integrals along RK4 trajectories of
// Hamilton's equations.  Only real-evaluable systems and polynomials are
// accepted: any coefficient with a nonzero i or i*sqrt(d) component is
// rejected with InputError.

#include <string>
#include <vector>

#include "darboux/hamiltonian.hpp"

namespace darboux {

struct Sample {
  double t;
  std::vector<double> state;  ///< (q1..qm, p1..pm)
};

struct Trajectory {
  std::vector<Sample> samples;
  double h = 0;
  std::string method;
};

/// Polynomial compiled to double-precision terms.
class RealPoly {
 public:
  explicit RealPoly(const Poly& p);
  double operator()(const std::vector<double>& x) const;

 private:
  struct Term {
    double coef;
    std::vector<std::pair<std::size_t, unsigned>> factors;
  };
  std::vector<Term> terms_;
};

/// Fixed-step classical RK4 for q_i' = mu_i p_i, p_i' = -dV/dq_i from t = 0
/// to T.  The last step is shortened to land on T exactly.
Trajectory integrate_rk4(const NaturalHamiltonian& sys, const std::vector<double>& x0, double h, double T);

/// max over samples of |F(x(t)) - F(x0)| / max(1, |F(x0)|).
double drift(const NaturalHamiltonian& sys, const Poly& f, const std::vector<double>& x0, double h, double T);

}  // namespace darboux
