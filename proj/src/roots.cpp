#include "darboux/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

using Complex = std::complex<long double>;

FieldSpec field_of(const UniPoly& p) {
  if (p.empty()) throw InputError("empty univariate polynomial");
  return p.front().field();
}

long degree(const UniPoly& p) { return static_cast<long>(p.size()) - 1; }

UniPoly monic(UniPoly p) {
  p = uni_trim(std::move(p));
  FieldElement inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

// Simultaneous (Durand-Kerner) iteration for all complex roots.
std::vector<Complex> numeric_roots(const std::vector<Complex>& coeffs) {
  const std::size_t n = coeffs.size() - 1;
  std::vector<Complex> a(coeffs.size());
  for (std::size_t k = 0; k <= n; ++k) a[k] = coeffs[k] / coeffs[n];
  std::vector<Complex> z(n);
  const Complex seed(0.4L, 0.9L);
  Complex w(1.0L, 0.0L);
  long double radius = 1.0L;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(a[k]));
  for (std::size_t k = 0; k < n; ++k) {
    w *= seed;
    z[k] = w * radius;
  }
  auto eval = [&](Complex x) {
    Complex v = a[n];
    for (std::size_t k = n; k-- > 0;) v = v * x + a[k];
    return v;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex denom(1.0L, 0.0L);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      if (std::abs(denom) == 0) denom = Complex(1e-30L, 0);
      Complex step = eval(z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-30L) break;
  }
  return z;
}

// Best rational approximation with a bounded denominator.
std::optional<Rational> rationalize(long double x) {
  if (!std::isfinite(x) || std::fabs(x) > 1e12L) return std::nullopt;
  const long double tol = 1e-11L * std::max(1.0L, std::fabs(x));
  long double rest = x;
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(rest));
  mpz_class k_prev = 0, k = 1;
  for (int iter = 0; iter < 40; ++iter) {
    const long double approx = static_cast<long double>(h.get_d()) / static_cast<long double>(k.get_d());
    if (std::fabs(approx - x) < tol) return Rational(h, k);
    const long double frac = rest - std::floor(rest);
    if (frac < 1e-18L) break;
    rest = 1.0L / frac;
    const long a = static_cast<long>(std::floor(rest));
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > 1000000) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

std::vector<Complex> to_complex(const UniPoly& p) {
  std::vector<Complex> out;
  for (const auto& c : p) out.push_back(c.to_complex());
  return out;
}

// One root in the field, found numerically and verified exactly.
std::optional<FieldElement> find_field_root(const UniPoly& p) {
  const FieldSpec f = field_of(p);
  auto check = [&](const FieldElement& x) -> std::optional<FieldElement> {
    if (uni_eval(p, x).is_zero()) return x;
    return std::nullopt;
  };
  const auto roots = numeric_roots(to_complex(p));
  if (f.is_rationals()) {
    for (const auto& z : roots) {
      if (std::fabs(z.imag()) > 1e-8L * std::max(1.0L, std::abs(z))) continue;
      if (auto a = rationalize(z.real())) {
        if (auto r = check(FieldElement(f, *a))) return r;
      }
    }
    return std::nullopt;
  }
  // Pair each root with a root of the sqrt-conjugate polynomial and
  // recover the four rational coordinates.
  UniPoly conj;
  for (const auto& c : p) conj.push_back(c.conjugate_sqrt());
  const auto conj_roots = numeric_roots(to_complex(conj));
  const long double s = std::sqrt(static_cast<long double>(f.d));
  for (const auto& z : roots) {
    for (const auto& w : conj_roots) {
      auto a = rationalize((z.real() + w.real()) / 2);
      auto b = rationalize((z.imag() + w.imag()) / 2);
      auto c = rationalize((z.real() - w.real()) / (2 * s));
      auto e = rationalize((z.imag() - w.imag()) / (2 * s));
      if (!a || !b || !c || !e) continue;
      if (auto r = check(FieldElement(f, *a, *b, *c, *e))) return r;
    }
  }
  return std::nullopt;
}

}  // namespace

UniPoly uni_trim(UniPoly p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
  return p;
}

UniPoly uni_derivative(const UniPoly& p) {
  const FieldSpec f = field_of(p);
  if (p.size() <= 1) return {FieldElement::zero(f)};
  UniPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * FieldElement(f, static_cast<long>(k)));
  return uni_trim(std::move(d));
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a_in, const UniPoly& b_in) {
  const FieldSpec f = field_of(a_in);
  UniPoly a = uni_trim(a_in);
  UniPoly b = uni_trim(b_in);
  if (b.size() == 1 && b[0].is_zero()) throw DivisionByZero();
  if (degree(a) < degree(b)) return {{FieldElement::zero(f)}, a};
  UniPoly q(a.size() - b.size() + 1, FieldElement::zero(f));
  const FieldElement lead_inv = b.back().inverse();
  for (long k = degree(a) - degree(b); k >= 0; --k) {
    const FieldElement c = a[static_cast<std::size_t>(k) + b.size() - 1] * lead_inv;
    q[static_cast<std::size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[static_cast<std::size_t>(k) + j] -= c * b[j];
  }
  a.resize(b.size() > 1 ? b.size() - 1 : 1, FieldElement::zero(f));
  return {uni_trim(std::move(q)), uni_trim(std::move(a))};
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  a = uni_trim(std::move(a));
  b = uni_trim(std::move(b));
  auto is_zero = [](const UniPoly& p) { return p.size() == 1 && p[0].is_zero(); };
  while (!is_zero(b)) {
    auto r = uni_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (is_zero(a)) return a;
  return monic(std::move(a));
}

FieldElement uni_eval(const UniPoly& p, const FieldElement& x) {
  FieldElement v = FieldElement::zero(x.field());
  for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
  return v;
}

FieldRoots roots_in_field(UniPoly p) {
  const FieldSpec f = field_of(p);
  p = uni_trim(std::move(p));
  if (p.size() == 1 && p[0].is_zero()) throw InputError("roots of the zero polynomial are not isolated");
  FieldRoots out;
  if (p.size() == 1) {
    out.leftover = {FieldElement::one(f)};
    return out;
  }
  // Square-free part keeps the numeric stage well conditioned.
  UniPoly g = uni_gcd(p, uni_derivative(p));
  p = monic(uni_divmod(p, g).first);

  auto deflate = [&](const FieldElement& root) {
    out.roots.push_back(root);
    p = monic(uni_divmod(p, UniPoly{-root, FieldElement::one(f)}).first);
  };
  while (degree(p) >= 1) {
    if (p[0].is_zero()) {
      deflate(FieldElement::zero(f));
      continue;
    }
    if (degree(p) == 1) {
      deflate(-p[0]);
      continue;
    }
    if (degree(p) == 2) {
      // x^2 + b x + c, p is monic.
      const FieldElement half(f, Rational(1, 2));
      const FieldElement disc = p[1] * p[1] - FieldElement(f, 4) * p[0];
      auto s = sqrt(disc);
      if (!s) break;
      const FieldElement r1 = (-p[1] + *s) * half;
      const FieldElement r2 = (-p[1] - *s) * half;
      out.roots.push_back(r1);
      out.roots.push_back(r2);
      p = {FieldElement::one(f)};
      break;
    }
    if (degree(p) > 4) break;
    auto r = find_field_root(p);
    if (!r) break;
    deflate(*r);
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const FieldElement& a, const FieldElement& b) { return FieldElement::compare(a, b) < 0; });
  out.leftover = p;
  return out;
}

}  // namespace darboux
