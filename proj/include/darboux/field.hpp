#pragma once

// Exact scalars: the rationals and the biquadratic tower Q(i, sqrt d).

#include <array>
#include <complex>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace darboux {

using Rational = mpq_class;

enum class FieldKind { Rationals, QuadGauss };

/// Which coefficient field a computation runs over.  For QuadGauss the
/// field is Q(i, sqrt d) with d >= 2 square-free.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  long d = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws InputError unless d >= 2 and square-free.
  static FieldSpec quad_gauss(long d);

  bool is_rationals() const { return kind == FieldKind::Rationals; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// a + b*i + c*sqrt(d) + e*i*sqrt(d), all components reduced rationals.
///
/// Elements remember their field; binary operations on elements of
/// different fields throw FieldMismatch.  Over the rationals only `a` is
/// ever nonzero.
class FieldElement {
 public:
  /// Basis index of each component.
  enum Component { kOne = 0, kI = 1, kSqrt = 2, kISqrt = 3 };

  FieldElement() = default;
  explicit FieldElement(FieldSpec field, Rational a = 0);
  FieldElement(FieldSpec field, Rational a, Rational b, Rational c, Rational e);
  FieldElement(FieldSpec field, long a) : FieldElement(field, Rational(a)) {}

  static FieldElement zero(FieldSpec field) { return FieldElement(field); }
  static FieldElement one(FieldSpec field) { return FieldElement(field, Rational(1)); }
  /// Throws InputError over the rationals.
  static FieldElement imaginary_unit(FieldSpec field);
  static FieldElement sqrt_d(FieldSpec field);

  const FieldSpec& field() const { return field_; }
  const Rational& component(int k) const { return c_[static_cast<std::size_t>(k)]; }
  const Rational& rational_part() const { return c_[0]; }

  bool is_zero() const;
  bool is_one() const;
  /// True when only the rational component may be nonzero.
  bool is_rational() const;
  /// True when the element is real under i -> +i, sqrt d -> +sqrt d.
  bool is_real() const;
  /// Number of nonzero basis components.
  int nonzero_components() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& y);
  FieldElement& operator-=(const FieldElement& y);
  FieldElement& operator*=(const FieldElement& y);
  FieldElement& operator/=(const FieldElement& y);

  friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
  friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }

  /// Exact equality; elements of different fields are unequal.
  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.field_ == y.field_ && x.c_ == y.c_;
  }

  /// Multiplicative inverse.  Throws DivisionByZero on zero.
  FieldElement inverse() const;

  /// Conjugations of the Galois group: i -> -i and sqrt d -> -sqrt d.
  FieldElement conjugate_i() const;
  FieldElement conjugate_sqrt() const;

  /// Value under the embedding i -> +i, sqrt d -> +sqrt d.
  std::complex<long double> to_complex() const;

  /// Total order used only for deterministic sorting.
  static int compare(const FieldElement& x, const FieldElement& y);

 private:
  void check_same_field(const FieldElement& y) const;

  FieldSpec field_{};
  std::array<Rational, 4> c_{};
};

/// A square root in the same field, if one exists.
std::optional<FieldElement> sqrt(const FieldElement& x);

/// Exact square root of a rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& x);

bool is_square_free(long d);

}  // namespace darboux
