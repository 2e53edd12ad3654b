#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "darboux/corpus.hpp"
#include "darboux/errors.hpp"
#include "darboux/search.hpp"
#include "support.hpp"

using namespace testing;

namespace {

bool has_certificate(const SearchReport& rep, const Poly& f, const Poly& cof) {
  return std::any_of(rep.certificates.begin(), rep.certificates.end(),
                     [&](const DarbouxCertificate& c) { return c.polynomial == f.monic() && c.cofactor == cof; });
}

void check_invariants(const NaturalHamiltonian& sys, const SearchReport& rep) {
  const Direction g = gamma_direction(sys);
  for (const auto& c : rep.certificates) {
    REQUIRE(lie_derivative(sys, c.polynomial) == c.cofactor * c.polynomial);
    REQUIRE(c.polynomial.leading_coefficient().is_one());
    for (std::size_t i = 0; i < sys.m(); ++i) REQUIRE_FALSE(c.cofactor.depends_on(sys.varset().p(i)));
    if (!c.cofactor.is_zero()) REQUIRE(*gamma_degree(c.cofactor, g) <= sys.degree() - 2);
  }
  for (std::size_t a = 0; a < rep.certificates.size(); ++a) {
    for (std::size_t b = a + 1; b < rep.certificates.size(); ++b) {
      REQUIRE(Poly::compare(rep.certificates[a].polynomial, rep.certificates[b].polynomial) < 0);
    }
  }
}

// Rank of a matrix over the field by plain Gaussian elimination.
std::size_t rank(std::vector<std::vector<FieldElement>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      FieldElement factor = rows[k][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Determinant by cofactor expansion; entries are polynomials in (l1, l2).
Poly det(const std::vector<std::vector<Poly>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Poly out(a[0][0].nvars(), a[0][0].field());
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(row);
    }
    Poly term = a[0][c] * det(minor);
    out = c % 2 == 0 ? out + term : out - term;
  }
  return out;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("ansatz spaces") {
    auto s1 = load_builtin("s1");
    auto mons = darboux_ansatz_monomials(s1, 4, true);
    CHECK(mons.size() == 5);  // p1, p2, q1^2, q1 q2, q2^2
    CHECK(darboux_ansatz_monomials(s1, 4, false).size() == 7);  // plus q1, q2; no constant
    CHECK(cofactor_ansatz_monomials(s1).size() == 2);
    auto s3 = load_builtin("s3");
    CHECK(cofactor_ansatz_monomials(s3).size() == 3);  // 1, q1, q2
    auto cubic = load_builtin("cubic");
    CHECK(cofactor_ansatz_monomials(cubic).empty());
    CHECK_THROWS_AS(darboux_ansatz_monomials(s1, 0, true), InputError);
  }

  TEST_CASE("S1 over Q(i,sqrt2) at gamma-degree 4") {
    auto s = load_builtin("s1-ext");
    auto rep = search_darboux(s, {4, true});
    REQUIRE(rep.certificates.size() == 3);
    CHECK(has_certificate(rep, P(s, "p2"), Poly(4, s.field())));
    CHECK(has_certificate(rep, P(s, "p1 + sqrt(2)*i*q1^2"), P(s, "2*sqrt(2)*i*q1")));
    CHECK(has_certificate(rep, P(s, "p1 - sqrt(2)*i*q1^2"), P(s, "-2*sqrt(2)*i*q1")));
    CHECK(rep.residual_conditions.empty());
    check_invariants(s, rep);
  }

  TEST_CASE("S1 over Q at gamma-degree 4") {
    auto s = load_builtin("s1");
    auto rep = search_darboux(s, {4, true});
    REQUIRE(rep.certificates.size() == 1);
    CHECK(has_certificate(rep, P(s, "p2"), Poly(4, s.field())));
    CHECK(rep.residual_strings() == std::vector<std::string>{"l1^2 + 8"});
    CHECK(rep.parameter_names() == std::vector<std::string>{"l1", "l2"});
    CHECK(rep.cofactor_ansatz(s.varset()) == "l1*q1 + l2*q2");
  }

  TEST_CASE("S1 completeness against an exhaustive minor computation") {
    // Coefficient matrix of d_H(F) - (l1 q1 + l2 q2) F on the ansatz
    // {p1, p2, q1^2, q1 q2, q2^2}, built here independently of the search.
    auto s = load_builtin("s1-ext");
    const FieldSpec f = s.field();
    const std::vector<std::string> basis = {"p1", "p2", "q1^2", "q1*q2", "q2^2"};
    std::vector<Poly> cols;
    const Poly l1 = P("q1", 1, f), l2 = P("p1", 1, f);  // a 2-variable ring for (l1, l2)
    std::set<Monomial> row_monos;
    std::vector<std::vector<std::pair<Monomial, Poly>>> entries;
    for (const auto& b : basis) {
      Poly x = P(s, b);
      Poly lie = lie_derivative(s, x);
      Poly a = lie, c1 = P(s, "q1") * x, c2 = P(s, "q2") * x;
      std::vector<std::pair<Monomial, Poly>> col;
      std::set<Monomial> monos;
      for (const Poly* p : {&a, &c1, &c2}) {
        for (const auto& t : p->terms()) monos.insert(t.mono);
      }
      for (const auto& mono : monos) {
        Poly e = Poly::constant(2, a.coefficient(mono)) - l1.scaled(c1.coefficient(mono)) -
                 l2.scaled(c2.coefficient(mono));
        if (!e.is_zero()) {
          col.push_back({mono, e});
          row_monos.insert(mono);
        }
      }
      entries.push_back(col);
    }
    std::vector<Monomial> rows(row_monos.begin(), row_monos.end());
    std::vector<std::vector<Poly>> M(rows.size(), std::vector<Poly>(basis.size(), Poly(2, f)));
    for (std::size_t c = 0; c < basis.size(); ++c) {
      for (const auto& [mono, e] : entries[c]) {
        M[static_cast<std::size_t>(std::find(rows.begin(), rows.end(), mono) - rows.begin())][c] = e;
      }
    }
    // All 5x5 minors; a nonzero kernel exists iff every one vanishes.
    std::vector<Poly> minors;
    std::vector<std::size_t> pick(5);
    const std::size_t n = rows.size();
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
      if (depth == 5) {
        std::vector<std::vector<Poly>> sub;
        for (auto r : pick) sub.push_back(M[r]);
        if (Poly d = det(sub); !d.is_zero()) minors.push_back(d);
        return;
      }
      for (std::size_t r = start; r < n; ++r) {
        pick[depth] = r;
        choose(r + 1, depth + 1);
      }
    };
    choose(0, 0);
    REQUIRE_FALSE(minors.empty());

    // Reference branch solutions (l1, l2), frozen from a sympy solve of the
    // same minor system: (0,0), (+-2 sqrt2 i, 0).
    const auto two_sqrt2_i = S("2*sqrt(2)*i", f);
    std::vector<std::pair<FieldElement, FieldElement>> reference = {
        {FieldElement::zero(f), FieldElement::zero(f)},
        {two_sqrt2_i, FieldElement::zero(f)},
        {-two_sqrt2_i, FieldElement::zero(f)}};
    for (const auto& [a, b] : reference) {
      std::vector<FieldElement> pt = {a, b};
      for (const auto& d : minors) REQUIRE(evaluate(d, pt).is_zero());
      std::vector<std::vector<FieldElement>> numeric;
      for (const auto& row : M) {
        std::vector<FieldElement> r;
        for (const auto& e : row) r.push_back(evaluate(e, pt));
        numeric.push_back(r);
      }
      CHECK(rank(numeric) == basis.size() - 1);  // one certificate per branch
    }
    // Generic parameter values give full rank.
    std::vector<FieldElement> generic = {FieldElement(f, 3), FieldElement(f, -5)};
    CHECK(std::any_of(minors.begin(), minors.end(), [&](const Poly& d) { return !evaluate(d, generic).is_zero(); }));

    auto rep = search_darboux(s, {4, true});
    REQUIRE(rep.certificates.size() == reference.size());
    for (const auto& c : rep.certificates) {
      std::vector<FieldElement> values = {c.cofactor.coefficient(Monomial::variable(0)),
                                          c.cofactor.coefficient(Monomial::variable(1))};
      CHECK(std::count_if(reference.begin(), reference.end(), [&](const auto& r) {
              return r.first == values[0] && r.second == values[1];
            }) == 1);
    }
  }

  TEST_CASE("S2 angular momentum") {
    auto s = load_builtin("s2");
    auto rep = search_darboux(s, {6, true});
    CHECK(has_certificate(rep, P(s, "q1*p2 - q2*p1"), Poly(4, s.field())));
    check_invariants(s, rep);
  }

  TEST_CASE("S3 non-homogeneous search") {
    auto s = load_builtin("s3");
    auto rep = search_darboux(s, {4, false});
    CHECK(has_certificate(rep, P(s, "i*p2 + sqrt(2)*q2^2"), P(s, "-2*sqrt(2)*i*q2")));
    CHECK(has_certificate(rep, P(s, "-i*p2 + sqrt(2)*q2^2"), P(s, "2*sqrt(2)*i*q2")));
    check_invariants(s, rep);
    // top-component law for every proper certificate
    const Direction g = gamma_direction(s);
    const auto top = top_hamiltonian(s);
    for (const auto& c : rep.certificates) {
      if (!c.proper) continue;
      Poly f_top = gamma_decompose(c.polynomial, g).back().form;
      Poly lam_top(4, s.field());
      for (const auto& part : gamma_decompose(c.cofactor, g)) {
        if (part.degree == s.degree() - 2) lam_top = part.form;
      }
      CHECK(lie_derivative(top, f_top) == lam_top * f_top);
    }
  }

  TEST_CASE("S5 finds the printed factor") {
    auto s = load_builtin("s5");
    auto rep = search_darboux(s, {8, true});
    auto g = P(s, "3*sqrt(6)*p2^2 + 12*i*p2*q1*q2 + q2^2*(-6*i*p1 + sqrt(6)*(2*q1^2 + q2^2))");
    CHECK(has_certificate(rep, g, P(s, "2/3*i*sqrt(6)*q1")));
    CHECK(has_certificate(rep, tau(g), P(s, "-2/3*i*sqrt(6)*q1")));
    check_invariants(s, rep);
  }

  TEST_CASE("homogeneous components share the cofactor") {
    for (const char* name : {"s1-ext", "s2"}) {
      auto s = load_builtin(name);
      auto rep = search_darboux(s, {4, false});
      const Direction g = gamma_direction(s);
      for (const auto& c : rep.certificates) {
        for (const auto& part : gamma_decompose(c.polynomial, g)) {
          CHECK(lie_derivative(s, part.form) == c.cofactor * part.form);
        }
      }
    }
  }

  TEST_CASE("determinism") {
    auto s = load_builtin("s1");
    auto a = search_darboux(s, {4, true});
    auto b = search_darboux(s, {4, true});
    REQUIRE(a.certificates.size() == b.certificates.size());
    for (std::size_t k = 0; k < a.certificates.size(); ++k) {
      CHECK(a.certificates[k].polynomial == b.certificates[k].polynomial);
    }
    CHECK(a.branches_explored == b.branches_explored);
    CHECK(a.residual_strings() == b.residual_strings());
  }

  TEST_CASE("errors and the branch cap") {
    auto osc = system("1, 1", "q1^2 + q2^2");
    CHECK_THROWS_AS(search_darboux(osc, {4, true}), GradingUnavailable);
    auto s = load_builtin("s1-ext");
    CHECK_THROWS_AS(search_darboux(s, {0, true}), InputError);
    try {
      (void)search_darboux(s, {4, true, 2});
      FAIL("expected SearchAborted");
    } catch (const SearchAborted& e) {
      CHECK(e.partial().branches_explored <= 3);
      CHECK(std::string(e.what()).find("branch cap") != std::string::npos);
    }
  }

  TEST_CASE("homogeneous cubic has only first integrals") {
    auto s = load_builtin("cubic");
    for (long d = 1; d <= 12; ++d) {
      auto rep = search_darboux(s, {d, true});
      for (const auto& c : rep.certificates) CHECK_FALSE(c.proper);
      check_invariants(s, rep);
    }
    auto rep6 = search_darboux(s, {6, true});
    CHECK(has_certificate(rep6, P(s, "1/2*p1^2 + q1^3"), Poly(4, s.field())));
    CHECK(has_certificate(rep6, P(s, "1/2*p2^2 + q2^3"), Poly(4, s.field())));
  }
}
