#pragma once

// Sparse multivariate polynomials over a FieldElement coefficient field.
//
// Terms are kept in strictly decreasing canonical order: lexicographic with
// the highest-index variable most significant, so for phase-space rings
// q1 < ... < qm < p1 < ... < pm.  The same class serves the phase-space
// ring k[q, p] and the auxiliary cofactor-parameter rings used by the
// search.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "darboux/field.hpp"

namespace darboux {

inline constexpr std::size_t kMaxVars = 24;
inline constexpr std::size_t kMaxTerms = 1'000'000;

/// Exponent vector.  Entries past the ring's variable count are zero.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t var, unsigned power = 1);

  unsigned operator[](std::size_t var) const { return e_[var]; }
  void set(std::size_t var, unsigned power);

  unsigned total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  Monomial& operator*=(const Monomial& y);
  friend Monomial operator*(Monomial x, const Monomial& y) { return x *= y; }
  /// Precondition: y divides *this.
  Monomial operator/(const Monomial& y) const;

  /// Canonical order: highest-index variable most significant.
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
    for (std::size_t k = kMaxVars; k-- > 0;) {
      if (x.e_[k] != y.e_[k]) return x.e_[k] <=> y.e_[k];
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
};

/// Phase-space variables q1..qm, p1..pm mapped to indices 0..2m-1.
struct VarSet {
  std::size_t m = 0;

  /// Throws InputError unless 1 <= m and 2m fits the ring.
  explicit VarSet(std::size_t m);

  std::size_t nvars() const { return 2 * m; }
  /// 0-based position index of q_{i+1} and p_{i+1}.
  std::size_t q(std::size_t i) const { return i; }
  std::size_t p(std::size_t i) const { return m + i; }
  bool is_momentum(std::size_t var) const { return var >= m; }
  std::string name(std::size_t var) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;
};

struct Term {
  Monomial mono;
  FieldElement coef;
};

/// Weight vector of a grading; every entry >= 1.
struct Direction {
  std::vector<long> gamma;

  explicit Direction(std::vector<long> weights);
  long weight(const Monomial& mono) const;
};

class Poly {
 public:
  Poly() = default;
  Poly(std::size_t nvars, FieldSpec field);

  static Poly constant(std::size_t nvars, const FieldElement& c);
  static Poly variable(std::size_t nvars, FieldSpec field, std::size_t var);
  static Poly monomial(std::size_t nvars, const FieldElement& c, const Monomial& mono);
  /// Builds a polynomial from arbitrary terms, combining duplicates and
  /// dropping zeros.
  static Poly from_terms(std::size_t nvars, FieldSpec field, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant term (zero when absent).
  FieldElement constant_term() const;
  /// Coefficient of an exact monomial (zero when absent).
  FieldElement coefficient(const Monomial& mono) const;

  /// Leading term in the canonical order.  Precondition: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const FieldElement& leading_coefficient() const { return terms_.front().coef; }

  /// Total degree; -1 for the zero polynomial.
  long total_degree() const;
  /// Degree in one variable; -1 for the zero polynomial.
  long degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& y);
  Poly& operator-=(const Poly& y);
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(const Poly& x, const Poly& y);
  Poly& operator*=(const Poly& y) { return *this = *this * y; }

  Poly scaled(const FieldElement& c) const;
  Poly times_monomial(const FieldElement& c, const Monomial& mono) const;
  Poly pow(unsigned k) const;

  /// Leading coefficient 1; zero stays zero.
  Poly monic() const;

  friend bool operator==(const Poly& x, const Poly& y);

  /// Total order for deterministic sorting (term lists compared
  /// lexicographically, larger leading monomial sorts later).
  static int compare(const Poly& x, const Poly& y);

 private:
  void check_compatible(const Poly& y) const;
  void check_size() const;

  std::size_t nvars_ = 0;
  FieldSpec field_{};
  std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };
Poly poly_arith(const Poly& a, const Poly& b, ArithOp op);

/// Formal partial derivative.  Throws InputError for an out-of-range index.
Poly partial_derivative(const Poly& a, std::size_t var);

/// Max over terms of <gamma, alpha>; std::nullopt stands for -infinity
/// (the zero polynomial).
std::optional<long> gamma_degree(const Poly& a, const Direction& g);

struct GammaComponent {
  long degree;
  Poly form;
};
/// Split into gamma-homogeneous components, degrees strictly increasing.
/// The last entry is the top component.
std::vector<GammaComponent> gamma_decompose(const Poly& a, const Direction& g);

/// True when every term has the same gamma weight.
bool is_gamma_homogeneous(const Poly& a, const Direction& g);

FieldElement evaluate(const Poly& a, std::span<const FieldElement> point);

/// Replace one variable by a polynomial of the same ring.
Poly substitute(const Poly& a, std::size_t var, const Poly& value);

/// Q with a == Q*b, or nullopt when b does not divide a.  Throws
/// DivisionByZero when b is zero.
std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b);

/// Pseudo-remainder of a by b with respect to one variable.
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var);

/// Monic greatest common divisor; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
Poly multivariate_gcd(const Poly& a, const Poly& b);

/// Coefficient of var^k, as a polynomial free of var.
Poly coefficient_in(const Poly& a, std::size_t var, unsigned k);

/// Monic gcd of the coefficients of a viewed as a polynomial in var.
Poly content_in(const Poly& a, std::size_t var);

/// Exact square root up to sign, if a is a perfect square.
std::optional<Poly> poly_sqrt(const Poly& a);

}  // namespace darboux
