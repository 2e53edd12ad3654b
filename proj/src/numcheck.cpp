#include "darboux/numcheck.hpp"

#include <algorithm>
#include <cmath>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

double real_value(const FieldElement& c) {
  if (sgn(c.component(FieldElement::kI)) != 0 || sgn(c.component(FieldElement::kISqrt)) != 0) {
    throw InputError("coefficient has an imaginary component; not real-evaluable");
  }
  return static_cast<double>(c.to_complex().real());
}

}  // namespace

RealPoly::RealPoly(const Poly& p) {
  for (const auto& t : p.terms()) {
    Term rt{real_value(t.coef), {}};
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      if (t.mono[v] > 0) rt.factors.emplace_back(v, t.mono[v]);
    }
    terms_.push_back(std::move(rt));
  }
}

double RealPoly::operator()(const std::vector<double>& x) const {
  double sum = 0;
  for (const auto& t : terms_) {
    double v = t.coef;
    for (const auto& [var, e] : t.factors) {
      double base = x[var];
      for (unsigned k = 0; k < e; ++k) v *= base;
    }
    sum += v;
  }
  return sum;
}

Trajectory integrate_rk4(const NaturalHamiltonian& sys, const std::vector<double>& x0, double h, double T) {
  if (!(h > 0) || !std::isfinite(h)) throw InputError("step h must be positive");
  if (!(T > 0) || !std::isfinite(T)) throw InputError("horizon T must be positive");
  const std::size_t m = sys.m();
  if (x0.size() != 2 * m) throw InputError("initial point must have 2m coordinates");
  std::vector<double> mu;
  for (const auto& c : sys.mu()) mu.push_back(real_value(c));
  std::vector<RealPoly> grad;
  for (const auto& g : sys.potential_gradient()) grad.emplace_back(g);

  auto field = [&](const std::vector<double>& x) {
    std::vector<double> dx(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      dx[i] = mu[i] * x[m + i];
      dx[m + i] = -grad[i](x);
    }
    return dx;
  };
  auto shifted = [](const std::vector<double>& x, const std::vector<double>& k, double s) {
    std::vector<double> y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) y[j] = x[j] + s * k[j];
    return y;
  };

  Trajectory out;
  out.h = h;
  out.method = "rk4";
  out.samples.push_back({0.0, x0});
  std::vector<double> x = x0;
  const auto steps = static_cast<std::size_t>(std::ceil(T / h - 1e-9));
  for (std::size_t n = 0; n < steps; ++n) {
    const double t = static_cast<double>(n) * h;
    const double step = std::min(h, T - t);
    if (step <= 0) break;
    const auto k1 = field(x);
    const auto k2 = field(shifted(x, k1, step / 2));
    const auto k3 = field(shifted(x, k2, step / 2));
    const auto k4 = field(shifted(x, k3, step));
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += step / 6 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
    out.samples.push_back({n + 1 == steps ? T : t + step, x});
  }
  return out;
}

double drift(const NaturalHamiltonian& sys, const Poly& f, const std::vector<double>& x0, double h, double T) {
  if (f.nvars() != sys.nvars()) throw InputError("polynomial ring does not match the system");
  const RealPoly F(f);
  const Trajectory traj = integrate_rk4(sys, x0, h, T);
  const double f0 = F(x0);
  const double scale = std::max(1.0, std::fabs(f0));
  double worst = 0;
  for (const auto& s : traj.samples) worst = std::max(worst, std::fabs(F(s.state) - f0) / scale);
  return worst;
}

}  // namespace darboux
