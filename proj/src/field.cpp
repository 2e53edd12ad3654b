#include "darboux/field.hpp"

#include <cmath>
#include <utility>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

Rational reduced(Rational x) {
  x.canonicalize();
  return x;
}

bool is_zero(const Rational& x) { return sgn(x) == 0; }

// x0 + x1*i in Q(i); squares in Q(i) only.
std::optional<std::pair<Rational, Rational>> sqrt_gaussian(const Rational& x0, const Rational& x1) {
  if (is_zero(x1)) {
    if (auto r = rational_sqrt(x0)) return std::make_pair(*r, Rational(0));
    if (auto r = rational_sqrt(-x0)) return std::make_pair(Rational(0), *r);
    return std::nullopt;
  }
  // (a + b i)^2 = a^2 - b^2 + 2ab i.  a^2 = (x0 + |x|)/2 with |x| = sqrt(x0^2 + x1^2).
  auto norm = rational_sqrt(x0 * x0 + x1 * x1);
  if (!norm) return std::nullopt;
  auto a = rational_sqrt((x0 + *norm) / 2);
  if (!a || is_zero(*a)) return std::nullopt;
  Rational b = x1 / (2 * *a);
  return std::make_pair(*a, reduced(b));
}

}  // namespace

bool is_square_free(long d) {
  if (d < 1) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::quad_gauss(long d) {
  if (d < 2 || !is_square_free(d)) {
    throw InputError("field Q(i,sqrt d) requires square-free d >= 2, got " + std::to_string(d));
  }
  return {FieldKind::QuadGauss, d};
}

std::string FieldSpec::to_string() const {
  if (is_rationals()) return "Q";
  return "Q(i,sqrt" + std::to_string(d) + ")";
}

FieldElement::FieldElement(FieldSpec field, Rational a) : field_(field) { c_[0] = reduced(std::move(a)); }

FieldElement::FieldElement(FieldSpec field, Rational a, Rational b, Rational c, Rational e) : field_(field) {
  c_ = {reduced(std::move(a)), reduced(std::move(b)), reduced(std::move(c)), reduced(std::move(e))};
  if (field_.is_rationals() && (!darboux::is_zero(c_[1]) || !darboux::is_zero(c_[2]) || !darboux::is_zero(c_[3]))) {
    throw FieldMismatch("irrational component in an element of Q");
  }
}

FieldElement FieldElement::imaginary_unit(FieldSpec field) {
  if (field.is_rationals()) throw InputError("i is not an element of Q");
  return FieldElement(field, 0, 1, 0, 0);
}

FieldElement FieldElement::sqrt_d(FieldSpec field) {
  if (field.is_rationals()) throw InputError("sqrt(d) is not an element of Q");
  return FieldElement(field, 0, 0, 1, 0);
}

bool FieldElement::is_zero() const {
  return darboux::is_zero(c_[0]) && darboux::is_zero(c_[1]) && darboux::is_zero(c_[2]) && darboux::is_zero(c_[3]);
}

bool FieldElement::is_one() const { return c_[0] == 1 && is_rational(); }

bool FieldElement::is_rational() const {
  return darboux::is_zero(c_[1]) && darboux::is_zero(c_[2]) && darboux::is_zero(c_[3]);
}

bool FieldElement::is_real() const { return darboux::is_zero(c_[1]) && darboux::is_zero(c_[3]); }

int FieldElement::nonzero_components() const {
  int n = 0;
  for (const auto& x : c_) n += darboux::is_zero(x) ? 0 : 1;
  return n;
}

void FieldElement::check_same_field(const FieldElement& y) const {
  if (!(field_ == y.field_)) {
    throw FieldMismatch("field mismatch: " + field_.to_string() + " vs " + y.field_.to_string());
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& y) {
  check_same_field(y);
  for (std::size_t k = 0; k < 4; ++k) {
    if (!darboux::is_zero(y.c_[k])) c_[k] += y.c_[k];
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& y) {
  check_same_field(y);
  for (std::size_t k = 0; k < 4; ++k) {
    if (!darboux::is_zero(y.c_[k])) c_[k] -= y.c_[k];
  }
  return *this;
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  x.check_same_field(y);
  if (x.is_rational() && y.is_rational()) return FieldElement(x.field_, x.c_[0] * y.c_[0]);
  const auto& [a, b, c, e] = x.c_;
  const auto& [a2, b2, c2, e2] = y.c_;
  const Rational d(x.field_.d);
  // i^2 = -1, s^2 = d, (i s)^2 = -d.
  FieldElement r(x.field_);
  r.c_[0] = a * a2 - b * b2 + d * (c * c2 - e * e2);
  r.c_[1] = a * b2 + b * a2 + d * (c * e2 + e * c2);
  r.c_[2] = a * c2 + c * a2 - (b * e2 + e * b2);
  r.c_[3] = a * e2 + e * a2 + b * c2 + c * b2;
  return r;
}

FieldElement& FieldElement::operator*=(const FieldElement& y) { return *this = *this * y; }

FieldElement& FieldElement::operator/=(const FieldElement& y) { return *this = *this * y.inverse(); }

FieldElement FieldElement::conjugate_i() const {
  FieldElement r = *this;
  r.c_[1] = -r.c_[1];
  r.c_[3] = -r.c_[3];
  return r;
}

FieldElement FieldElement::conjugate_sqrt() const {
  FieldElement r = *this;
  r.c_[2] = -r.c_[2];
  r.c_[3] = -r.c_[3];
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return FieldElement(field_, 1 / c_[0]);
  // x * conj_sqrt(x) lies in Q(i); times its i-conjugate lies in Q.
  FieldElement step1 = conjugate_sqrt();
  FieldElement w = *this * step1;
  FieldElement step2 = w.conjugate_i();
  FieldElement n = w * step2;
  return step1 * step2 * FieldElement(field_, 1 / n.c_[0]);
}

std::complex<long double> FieldElement::to_complex() const {
  const long double s = field_.is_rationals() ? 0.0L : std::sqrt(static_cast<long double>(field_.d));
  auto f = [](const Rational& q) { return static_cast<long double>(q.get_d()); };
  // get_d loses precision for huge numerators; fine for the numeric paths that call this.
  return {f(c_[0]) + f(c_[2]) * s, f(c_[1]) + f(c_[3]) * s};
}

int FieldElement::compare(const FieldElement& x, const FieldElement& y) {
  for (std::size_t k = 0; k < 4; ++k) {
    int c = cmp(x.c_[k], y.c_[k]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (sgn(x) == 0) return Rational(0);
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return reduced(Rational(rn, rd));
}

std::optional<FieldElement> sqrt(const FieldElement& x) {
  const FieldSpec& f = x.field();
  if (x.is_zero()) return x;
  if (f.is_rationals()) {
    if (auto r = rational_sqrt(x.rational_part())) return FieldElement(f, *r);
    return std::nullopt;
  }
  // x = U + V s with U, V in Q(i); y = u + v s.
  const FieldElement u_part(f, x.component(0), x.component(1), 0, 0);
  const FieldElement v_part(f, x.component(2), x.component(3), 0, 0);
  auto gaussian_root = [&](const FieldElement& z) -> std::optional<FieldElement> {
    auto r = sqrt_gaussian(z.component(0), z.component(1));
    if (!r) return std::nullopt;
    return FieldElement(f, r->first, r->second, 0, 0);
  };
  const FieldElement s = FieldElement::sqrt_d(f);
  if (v_part.is_zero()) {
    if (auto u = gaussian_root(u_part)) return *u;
    if (auto v = gaussian_root(u_part * FieldElement(f, Rational(1, f.d)))) return *v * s;
    return std::nullopt;
  }
  // u^2 + d v^2 = U, 2uv = V  =>  u^2 = (U +- sqrt(U^2 - d V^2)) / 2.
  const FieldElement dd(f, f.d);
  auto disc = gaussian_root(u_part * u_part - dd * v_part * v_part);
  if (!disc) return std::nullopt;
  const FieldElement half(f, Rational(1, 2));
  for (const FieldElement& t : {(u_part + *disc) * half, (u_part - *disc) * half}) {
    if (t.is_zero()) continue;
    auto u = gaussian_root(t);
    if (!u) continue;
    FieldElement v = v_part * (FieldElement(f, 2) * *u).inverse();
    FieldElement y = *u + v * s;
    if (y * y == x) return y;
  }
  return std::nullopt;
}

}  // namespace darboux
