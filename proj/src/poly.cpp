#include "darboux/poly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "darboux/errors.hpp"

namespace darboux {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t var, unsigned power) {
  Monomial m;
  m.set(var, power);
  return m;
}

void Monomial::set(std::size_t var, unsigned power) {
  if (var >= kMaxVars) throw InputError("variable index out of range");
  if (power > std::numeric_limits<std::uint16_t>::max()) throw InputError("exponent overflow");
  e_[var] = static_cast<std::uint16_t>(power);
}

unsigned Monomial::total_degree() const {
  unsigned s = 0;
  for (auto x : e_) s += x;
  return s;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    if (e_[k] > other.e_[k]) return false;
  }
  return true;
}

Monomial& Monomial::operator*=(const Monomial& y) {
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    unsigned s = unsigned{e_[k]} + y.e_[k];
    if (s > std::numeric_limits<std::uint16_t>::max()) throw InputError("exponent overflow");
    e_[k] = static_cast<std::uint16_t>(s);
  }
  return *this;
}

Monomial Monomial::operator/(const Monomial& y) const {
  Monomial r;
  for (std::size_t k = 0; k < kMaxVars; ++k) r.e_[k] = static_cast<std::uint16_t>(e_[k] - y.e_[k]);
  return r;
}

// ------------------------------------------------------------------ VarSet

VarSet::VarSet(std::size_t m_) : m(m_) {
  if (m < 1 || 2 * m > kMaxVars) throw InputError("degrees of freedom m out of range");
}

std::string VarSet::name(std::size_t var) const {
  if (var >= nvars()) throw InputError("variable index out of range");
  return (var < m ? "q" : "p") + std::to_string(var % m + 1);
}

// --------------------------------------------------------------- Direction

Direction::Direction(std::vector<long> weights) : gamma(std::move(weights)) {
  if (gamma.empty()) throw InputError("direction must be non-empty");
  for (long w : gamma) {
    if (w < 1) throw InputError("direction weights must be >= 1");
  }
}

long Direction::weight(const Monomial& mono) const {
  long s = 0;
  for (std::size_t k = 0; k < gamma.size(); ++k) s += gamma[k] * static_cast<long>(mono[k]);
  return s;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(std::size_t nvars, FieldSpec field) : nvars_(nvars), field_(field) {
  if (nvars > kMaxVars) throw InputError("too many variables (max " + std::to_string(kMaxVars) + ")");
}

Poly Poly::constant(std::size_t nvars, const FieldElement& c) { return monomial(nvars, c, Monomial{}); }

Poly Poly::variable(std::size_t nvars, FieldSpec field, std::size_t var) {
  if (var >= nvars) throw InputError("variable index out of range");
  return monomial(nvars, FieldElement::one(field), Monomial::variable(var));
}

Poly Poly::monomial(std::size_t nvars, const FieldElement& c, const Monomial& mono) {
  Poly p(nvars, c.field());
  if (!c.is_zero()) p.terms_.push_back({mono, c});
  return p;
}

Poly Poly::from_terms(std::size_t nvars, FieldSpec field, std::vector<Term> terms) {
  Poly p(nvars, field);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  for (auto& t : terms) {
    if (!(t.coef.field() == field)) throw FieldMismatch("term coefficient over a different field");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
  p.check_size();
  return p;
}

void Poly::check_compatible(const Poly& y) const {
  if (nvars_ != y.nvars_) throw InputError("polynomials over different variable sets");
  if (!(field_ == y.field_)) throw FieldMismatch("polynomials over different fields");
}

void Poly::check_size() const {
  if (terms_.size() > kMaxTerms) throw InputError("polynomial exceeds the 10^6-term guard");
}

FieldElement Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return FieldElement::zero(field_);
}

FieldElement Poly::coefficient(const Monomial& mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, const Monomial& m) { return t.mono > m; });
  if (it != terms_.end() && it->mono == mono) return it->coef;
  return FieldElement::zero(field_);
}

long Poly::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, t.mono.total_degree());
  return d;
}

long Poly::degree_in(std::size_t var) const {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, t.mono[var]);
  return d;
}

bool Poly::depends_on(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[var] > 0; });
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

template <class Combine>
std::vector<Term> merge_terms(const std::vector<Term>& x, const std::vector<Term>& y, Combine combine,
                              bool negate_y) {
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->mono > j->mono)) {
      out.push_back(*i++);
    } else if (i == x.end() || j->mono > i->mono) {
      out.push_back(negate_y ? Term{j->mono, -j->coef} : *j);
      ++j;
    } else {
      FieldElement c = combine(i->coef, j->coef);
      if (!c.is_zero()) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& y) {
  check_compatible(y);
  terms_ = merge_terms(terms_, y.terms_, [](const FieldElement& a, const FieldElement& b) { return a + b; }, false);
  check_size();
  return *this;
}

Poly& Poly::operator-=(const Poly& y) {
  check_compatible(y);
  terms_ = merge_terms(terms_, y.terms_, [](const FieldElement& a, const FieldElement& b) { return a - b; }, true);
  check_size();
  return *this;
}

Poly operator*(const Poly& x, const Poly& y) {
  x.check_compatible(y);
  if (x.is_zero() || y.is_zero()) return Poly(x.nvars_, x.field_);
  if (x.terms_.size() == 1) return y.times_monomial(x.terms_[0].coef, x.terms_[0].mono);
  if (y.terms_.size() == 1) return x.times_monomial(y.terms_[0].coef, y.terms_[0].mono);
  if (x.terms_.size() * y.terms_.size() > 50 * kMaxTerms) throw InputError("product exceeds the term guard");
  std::map<Monomial, FieldElement, std::greater<>> acc;
  for (const auto& a : x.terms_) {
    for (const auto& b : y.terms_) {
      Monomial m = a.mono * b.mono;
      auto [it, inserted] = acc.try_emplace(m, a.coef * b.coef);
      if (!inserted) it->second += a.coef * b.coef;
    }
  }
  Poly r(x.nvars_, x.field_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
  }
  r.check_size();
  return r;
}

Poly Poly::scaled(const FieldElement& c) const {
  if (c.is_zero()) return Poly(nvars_, field_);
  Poly r = *this;
  if (c.is_one()) return r;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Poly Poly::times_monomial(const FieldElement& c, const Monomial& mono) const {
  if (c.is_zero()) return Poly(nvars_, field_);
  Poly r(nvars_, field_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * mono, t.coef * c});
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(nvars_, FieldElement::one(field_));
  Poly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().inverse());
}

bool operator==(const Poly& x, const Poly& y) {
  if (x.nvars_ != y.nvars_ || !(x.field_ == y.field_) || x.terms_.size() != y.terms_.size()) return false;
  for (std::size_t k = 0; k < x.terms_.size(); ++k) {
    if (!(x.terms_[k].mono == y.terms_[k].mono) || !(x.terms_[k].coef == y.terms_[k].coef)) return false;
  }
  return true;
}

int Poly::compare(const Poly& x, const Poly& y) {
  std::size_t n = std::min(x.terms_.size(), y.terms_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& a = x.terms_[k];
    const auto& b = y.terms_[k];
    if (a.mono != b.mono) return a.mono < b.mono ? -1 : 1;
    if (int c = FieldElement::compare(a.coef, b.coef); c != 0) return c;
  }
  if (x.terms_.size() == y.terms_.size()) return 0;
  return x.terms_.size() < y.terms_.size() ? -1 : 1;
}

// -------------------------------------------------------------- operations

Poly poly_arith(const Poly& a, const Poly& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
  }
  throw InputError("unknown arithmetic operation");
}

Poly partial_derivative(const Poly& a, std::size_t var) {
  if (var >= a.nvars()) throw InputError("derivative variable index out of range");
  std::vector<Term> out;
  for (const auto& t : a.terms()) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coef * FieldElement(a.field(), static_cast<long>(e))});
  }
  // Differentiation can reorder terms (x*y^2 vs x^3 in lex), so re-sort.
  return Poly::from_terms(a.nvars(), a.field(), std::move(out));
}

namespace {

void check_direction(const Poly& a, const Direction& g) {
  if (g.gamma.size() != a.nvars()) throw InputError("direction length does not match the variable count");
}

}  // namespace

std::optional<long> gamma_degree(const Poly& a, const Direction& g) {
  check_direction(a, g);
  std::optional<long> d;
  for (const auto& t : a.terms()) {
    long w = g.weight(t.mono);
    if (!d || w > *d) d = w;
  }
  return d;
}

std::vector<GammaComponent> gamma_decompose(const Poly& a, const Direction& g) {
  check_direction(a, g);
  std::map<long, std::vector<Term>> buckets;
  for (const auto& t : a.terms()) buckets[g.weight(t.mono)].push_back(t);
  std::vector<GammaComponent> out;
  for (auto& [deg, terms] : buckets) {
    out.push_back({deg, Poly::from_terms(a.nvars(), a.field(), std::move(terms))});
  }
  return out;
}

bool is_gamma_homogeneous(const Poly& a, const Direction& g) { return gamma_decompose(a, g).size() <= 1; }

FieldElement evaluate(const Poly& a, std::span<const FieldElement> point) {
  if (point.size() != a.nvars()) throw InputError("evaluation point has the wrong length");
  FieldElement sum = FieldElement::zero(a.field());
  for (const auto& t : a.terms()) {
    FieldElement v = t.coef;
    for (std::size_t k = 0; k < a.nvars(); ++k) {
      for (unsigned e = 0; e < t.mono[k]; ++e) v *= point[k];
    }
    sum += v;
  }
  return sum;
}

Poly substitute(const Poly& a, std::size_t var, const Poly& value) {
  if (var >= a.nvars()) throw InputError("substitution variable index out of range");
  if (value.nvars() != a.nvars() || !(value.field() == a.field())) {
    throw InputError("substituted value lives in a different ring");
  }
  if (!a.depends_on(var)) return a;
  std::map<unsigned, std::vector<Term>> by_power;
  for (const auto& t : a.terms()) {
    Monomial m = t.mono;
    unsigned e = m[var];
    m.set(var, 0);
    by_power[e].push_back({m, t.coef});
  }
  Poly result(a.nvars(), a.field());
  Poly power = Poly::constant(a.nvars(), FieldElement::one(a.field()));
  unsigned current = 0;
  for (auto& [e, terms] : by_power) {
    while (current < e) {
      power *= value;
      ++current;
    }
    result += Poly::from_terms(a.nvars(), a.field(), std::move(terms)) * power;
  }
  return result;
}

std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.nvars() != b.nvars() || !(a.field() == b.field())) throw InputError("division across different rings");
  const Term& lead = b.leading_term();
  const FieldElement lead_inv = lead.coef.inverse();
  std::vector<Term> quotient;
  Poly rest = a;
  while (!rest.is_zero()) {
    const Term& r = rest.leading_term();
    if (!lead.mono.divides(r.mono)) return std::nullopt;
    Term t{r.mono / lead.mono, r.coef * lead_inv};
    rest -= b.times_monomial(t.coef, t.mono);
    quotient.push_back(std::move(t));
  }
  // Quotient terms are produced in strictly decreasing order.
  return Poly::from_terms(a.nvars(), a.field(), std::move(quotient));
}

Poly coefficient_in(const Poly& a, std::size_t var, unsigned k) {
  std::vector<Term> out;
  for (const auto& t : a.terms()) {
    if (t.mono[var] != k) continue;
    Monomial m = t.mono;
    m.set(var, 0);
    out.push_back({m, t.coef});
  }
  return Poly::from_terms(a.nvars(), a.field(), std::move(out));
}

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
  const long db = b.degree_in(var);
  if (db < 0) throw DivisionByZero();
  const Poly lcb = coefficient_in(b, var, static_cast<unsigned>(db));
  Poly r = a;
  long dr = r.degree_in(var);
  while (!r.is_zero() && dr >= db) {
    Poly lcr = coefficient_in(r, var, static_cast<unsigned>(dr));
    Poly shift = Poly::monomial(a.nvars(), FieldElement::one(a.field()),
                                Monomial::variable(var, static_cast<unsigned>(dr - db)));
    if (lcb.is_constant()) {
      r -= (lcr * shift).scaled(lcb.constant_term().inverse()) * b;
    } else {
      r = r * lcb - lcr * shift * b;
    }
    dr = r.degree_in(var);
  }
  return r;
}

Poly content_in(const Poly& a, std::size_t var) {
  Poly g(a.nvars(), a.field());
  const long d = a.degree_in(var);
  for (long k = d; k >= 0; --k) {
    Poly c = coefficient_in(a, var, static_cast<unsigned>(k));
    if (c.is_zero()) continue;
    g = multivariate_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

namespace {

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto q = poly_divide_exact(a, b);
  if (!q) throw InvariantViolation("expected exact division failed");
  return *q;
}

// Monic, so univariate sequences over the field do not grow coefficients.
Poly primitive_part(const Poly& a, std::size_t var) { return exact_quotient(a, content_in(a, var)).monic(); }

std::optional<std::size_t> main_variable(const Poly& a, const Poly& b) {
  for (std::size_t v = a.nvars(); v-- > 0;) {
    if (a.depends_on(v) || b.depends_on(v)) return v;
  }
  return std::nullopt;
}

}  // namespace

Poly multivariate_gcd(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars() || !(a.field() == b.field())) throw InputError("gcd across different rings");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const Poly one = Poly::constant(a.nvars(), FieldElement::one(a.field()));
  if (a.is_constant() || b.is_constant()) return one;
  const std::size_t var = *main_variable(a, b);
  if (!a.depends_on(var)) return multivariate_gcd(a, content_in(b, var));
  if (!b.depends_on(var)) return multivariate_gcd(content_in(a, var), b);

  const Poly ca = content_in(a, var);
  const Poly cb = content_in(b, var);
  const Poly c = multivariate_gcd(ca, cb);
  Poly f = exact_quotient(a, ca);
  Poly g = exact_quotient(b, cb);
  if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
  // Primitive pseudo-remainder sequence in var.
  while (true) {
    Poly r = pseudo_remainder(f, g, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      g = one;
      break;
    }
    f = std::move(g);
    g = primitive_part(r, var);
  }
  if (!g.is_constant()) g = primitive_part(g, var);
  return (c * g).monic();
}

std::optional<Poly> poly_sqrt(const Poly& a) {
  if (a.is_zero()) return a;
  const Term& lead = a.leading_term();
  Monomial half;
  for (std::size_t k = 0; k < a.nvars(); ++k) {
    if (lead.mono[k] % 2 != 0) return std::nullopt;
    half.set(k, lead.mono[k] / 2);
  }
  auto c = sqrt(lead.coef);
  if (!c) return std::nullopt;
  Poly s = Poly::monomial(a.nvars(), *c, half);
  const FieldElement two_lead_inv = (FieldElement(a.field(), 2) * *c).inverse();
  Poly rest = a - s * s;
  while (!rest.is_zero()) {
    const Term& r = rest.leading_term();
    if (!half.divides(r.mono)) return std::nullopt;
    Monomial m = r.mono / half;
    if (!(m < half)) return std::nullopt;
    s += Poly::monomial(a.nvars(), r.coef * two_lead_inv, m);
    rest = a - s * s;
  }
  return s;
}

}  // namespace darboux
