#include "darboux/search.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "darboux/parser.hpp"
#include "darboux/roots.hpp"

namespace darboux {

std::vector<std::string> SearchReport::parameter_names() const {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < cofactor_monomials.size(); ++k) names.push_back("l" + std::to_string(k + 1));
  return names;
}

std::vector<std::string> SearchReport::residual_strings() const {
  const auto names = parameter_names();
  std::vector<std::string> out;
  for (const auto& r : residual_conditions) out.push_back(format_poly(r.condition, names));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string SearchReport::cofactor_ansatz(const VarSet& vs) const {
  if (cofactor_monomials.empty()) return "0";
  std::string s;
  const auto names = parameter_names();
  for (std::size_t k = 0; k < cofactor_monomials.size(); ++k) {
    if (k > 0) s += " + ";
    s += names[k];
    for (std::size_t v = 0; v < vs.nvars(); ++v) {
      const unsigned e = cofactor_monomials[k][v];
      if (e == 0) continue;
      s += "*" + vs.name(v);
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

namespace {

void enumerate_monomials(const std::vector<long>& weights, std::size_t var, long budget, Monomial current,
                         std::vector<Monomial>& out) {
  if (var == weights.size()) {
    out.push_back(current);
    return;
  }
  for (unsigned e = 0; static_cast<long>(e) * weights[var] <= budget; ++e) {
    current.set(var, e);
    enumerate_monomials(weights, var + 1, budget - static_cast<long>(e) * weights[var], current, out);
  }
}

struct Cell {
  std::size_t col;
  Poly value;
};
using Row = std::vector<Cell>;

// Branch state: parameters fixed so far (each value expressed in the
// still-free parameters) and polynomials assumed nonzero.
struct Assumptions {
  std::vector<std::optional<Poly>> value;
  std::vector<Poly> nonzero;
};

// x*sx - y*sy, with sx == nullptr meaning 1.
Row combine(const Row& x, const Poly* sx, const Row& y, const Poly& sy) {
  Row out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  auto scale_x = [&](const Poly& v) { return sx ? v * *sx : v; };
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->col < j->col)) {
      out.push_back({i->col, scale_x(i->value)});
      ++i;
    } else if (i == x.end() || j->col < i->col) {
      out.push_back({j->col, -(j->value * sy)});
      ++j;
    } else {
      Poly v = scale_x(i->value) - j->value * sy;
      if (!v.is_zero()) out.push_back({i->col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

using SVec = std::vector<std::pair<std::size_t, FieldElement>>;

// x - c*y on sorted sparse vectors.
SVec axpy(const SVec& x, const SVec& y, const FieldElement& c) {
  SVec out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, -(c * j->second));
      ++j;
    } else {
      FieldElement v = i->second - c * j->second;
      if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Incremental reduced row echelon form over the field.  Pivots are taken
// only in columns below `limit`; each pivot is the leading column of its
// row and is cleared from every other row.
class Echelon {
 public:
  Echelon(std::size_t limit, FieldSpec field) : limit_(limit), field_(field), row_of_(limit, -1) {}

  // Adds v.  Returns nullopt when v became a new pivot row, otherwise the
  // reduced remainder (no entries below limit; possibly empty).
  std::optional<SVec> insert(SVec v) {
    std::size_t from = 0;
    while (true) {
      auto it = std::find_if(v.begin(), v.end(), [&](const auto& e) {
        return e.first >= from && e.first < limit_ && row_of_[e.first] >= 0;
      });
      if (it == v.end()) break;
      const std::size_t col = it->first;
      const FieldElement c = it->second;
      v = axpy(v, rows_[static_cast<std::size_t>(row_of_[col])], c);
      from = col + 1;
    }
    if (v.empty() || v.front().first >= limit_) return v;
    const std::size_t col = v.front().first;
    const FieldElement inv = v.front().second.inverse();
    for (auto& e : v) e.second *= inv;
    for (auto& r : rows_) {
      auto it = std::find_if(r.begin(), r.end(), [&](const auto& e) { return e.first == col; });
      if (it != r.end()) r = axpy(r, v, FieldElement(it->second));
    }
    row_of_[col] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(v));
    pivots_.push_back(col);
    return std::nullopt;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<SVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // One vector per free column c below limit: 1 at c, minus the pivot
  // rows' entries at c.  Every other entry sits in a smaller column.
  std::vector<SVec> kernel_basis() const {
    std::vector<SVec> out;
    for (std::size_t c = 0; c < limit_; ++c) {
      if (row_of_[c] >= 0) continue;
      SVec v;
      for (std::size_t k = 0; k < rows_.size(); ++k) {
        auto it = std::find_if(rows_[k].begin(), rows_[k].end(), [&](const auto& e) { return e.first == c; });
        if (it != rows_[k].end()) v.emplace_back(pivots_[k], -it->second);
      }
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      v.emplace_back(c, FieldElement::one(field_));
      out.push_back(std::move(v));
    }
    return out;
  }


 private:
  std::size_t limit_;
  FieldSpec field_;
  std::vector<long> row_of_;
  std::vector<SVec> rows_;
  std::vector<std::size_t> pivots_;
};

// det(t I - T), coefficients low degree first (Faddeev-LeVerrier).
UniPoly characteristic_polynomial(const std::vector<std::vector<FieldElement>>& T) {
  const std::size_t n = T.size();
  const FieldSpec f = T[0][0].field();
  using Mat = std::vector<std::vector<FieldElement>>;
  auto mul = [&](const Mat& x, const Mat& y) {
    Mat z(n, std::vector<FieldElement>(n, FieldElement::zero(f)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (x[i][k].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
      }
    }
    return z;
  };
  UniPoly c(n + 1, FieldElement::zero(f));
  c[n] = FieldElement::one(f);
  Mat M(n, std::vector<FieldElement>(n, FieldElement::zero(f)));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) M[i][i] += c[n - k + 1];
    M = mul(T, M);
    FieldElement trace = FieldElement::zero(f);
    for (std::size_t i = 0; i < n; ++i) trace += M[i][i];
    c[n - k] = -trace / FieldElement(f, static_cast<long>(k));
  }
  return c;
}

class Searcher {
 public:
  Searcher(const NaturalHamiltonian& sys, const SearchOptions& opts) : sys_(sys), opts_(opts) {
    columns_ = darboux_ansatz_monomials(sys, opts.gamma_degree, opts.homogeneous_only);
    report_.cofactor_monomials = cofactor_ansatz_monomials(sys);
    report_.ansatz_size = columns_.size();
    nparams_ = report_.cofactor_monomials.size();
    if (nparams_ > kMaxVars) throw InputError("cofactor ansatz has too many parameters");
    build_matrix();
  }

  SearchReport run() {
    Assumptions root;
    root.value.assign(nparams_, std::nullopt);
    explore(root);
    return finish();
  }

 private:
  Poly param_constant(const FieldElement& c) const { return Poly::constant(nparams_, c); }

  void build_matrix() {
    const FieldSpec f = sys_.field();
    std::map<Monomial, std::map<std::size_t, Poly>> rows;
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      const Poly x = Poly::monomial(sys_.nvars(), FieldElement::one(f), columns_[j]);
      const Poly lx = lie_derivative(sys_, x);
      for (const auto& t : lx.terms()) {
        auto& cell = rows[t.mono].try_emplace(j, Poly(nparams_, f)).first->second;
        cell += param_constant(t.coef);
      }
      for (std::size_t b = 0; b < nparams_; ++b) {
        auto& cell = rows[report_.cofactor_monomials[b] * columns_[j]].try_emplace(j, Poly(nparams_, f)).first->second;
        cell -= Poly::variable(nparams_, f, b);
      }
    }
    for (auto& [mono, cells] : rows) {
      Row row;
      for (auto& [col, v] : cells) {
        if (!v.is_zero()) row.push_back({col, std::move(v)});
      }
      if (!row.empty()) original_.push_back(std::move(row));
    }
  }

  Poly apply(const Assumptions& a, Poly p) const {
    for (std::size_t k = 0; k < nparams_; ++k) {
      if (a.value[k]) p = substitute(p, k, *a.value[k]);
    }
    return p;
  }

  Assumptions with_value(const Assumptions& a, std::size_t var, const Poly& v) const {
    Assumptions out = a;
    for (auto& existing : out.value) {
      if (existing) existing = substitute(*existing, var, v);
    }
    out.value[var] = v;
    return out;
  }

  void count_branch() {
    if (++report_.branches_explored > opts_.branch_cap) {
      throw SearchAborted("search exceeded the branch cap of " + std::to_string(opts_.branch_cap), finish());
    }
  }

  void explore(Assumptions a) {
    count_branch();
    std::vector<Poly> nonzero;
    for (const auto& nz : a.nonzero) {
      Poly v = apply(a, nz);
      if (v.is_zero()) return;
      if (!v.is_constant()) nonzero.push_back(std::move(v));
    }
    a.nonzero = std::move(nonzero);

    std::vector<Row> rows;
    bool parametric = false;
    for (const auto& row : original_) {
      Row r;
      for (const auto& cell : row) {
        Poly v = apply(a, cell.value);
        if (v.is_zero()) continue;
        parametric = parametric || !v.is_constant();
        r.push_back({cell.col, std::move(v)});
      }
      if (!r.empty()) rows.push_back(std::move(r));
    }
    if (!parametric) {
      constant_leaf(rows, a);
      return;
    }
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < nparams_; ++k) {
      if (!a.value[k]) free.push_back(k);
    }
    if (free.size() == 1 && eigen_branch(rows, a, free.front())) return;
    eliminate(rows, a);
  }

  // Fraction-free elimination over the parameter ring.  Each
  // non-constant pivot p spawns the p = 0 branches, then the current
  // branch continues under p != 0.
  void eliminate(std::vector<Row>& rows, Assumptions a) {
    std::vector<bool> used(rows.size(), false);
    std::size_t rank = 0;
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> best;  // (row, cell index)
      long best_degree = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (used[i]) continue;
        for (std::size_t c = 0; c < rows[i].size(); ++c) {
          const Poly& v = rows[i][c].value;
          const long deg = v.total_degree();
          if (!best || deg < best_degree) {
            best = {i, c};
            best_degree = deg;
            continue;
          }
          if (deg > best_degree) continue;
          const Cell& incumbent = rows[best->first][best->second];
          const int cmp = Poly::compare(v, incumbent.value);
          // Ties keep the earlier (row, col) position, which is the incumbent.
          if (cmp < 0) best = {i, c};
        }
      }
      if (!best) break;
      const std::size_t pr = best->first;
      const Cell pivot = rows[pr][best->second];
      if (!pivot.value.is_constant()) {
        impose_zero(a, pivot.value);
        a.nonzero.push_back(pivot.value);
      }
      used[pr] = true;
      ++rank;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (used[i]) continue;
        auto it = std::find_if(rows[i].begin(), rows[i].end(), [&](const Cell& c) { return c.col == pivot.col; });
        if (it == rows[i].end()) continue;
        const Poly factor = it->value;
        if (pivot.value.is_constant()) {
          rows[i] = combine(rows[i], nullptr, rows[pr], factor.scaled(pivot.value.constant_term().inverse()));
        } else {
          rows[i] = combine(rows[i], &pivot.value, rows[pr], factor);
          simplify_row(rows[i], a.nonzero);
        }
      }
    }
    if (rank >= columns_.size()) return;
    std::vector<std::string> free;
    const auto names = report_.parameter_names();
    for (std::size_t k = 0; k < nparams_; ++k) {
      if (!a.value[k]) free.push_back(names[k]);
    }
    std::string note = "unresolved family: kernel of dimension " + std::to_string(columns_.size() - rank) +
                       " for generic values of";
    for (const auto& n : free) note += " " + n;
    report_.notes.push_back(note);
  }

  // Divide out row factors that are known to be nonzero on this branch,
  // then normalize the leading coefficient.
  void simplify_row(Row& row, const std::vector<Poly>& nonzero) const {
    if (row.empty()) return;
    Poly content(nparams_, sys_.field());
    for (const auto& cell : row) {
      content = multivariate_gcd(content, cell.value);
      if (content.is_constant()) break;
    }
    if (!content.is_constant()) {
      Poly divisor = param_constant(FieldElement::one(sys_.field()));
      for (const auto& nz : nonzero) {
        while (true) {
          Poly g = multivariate_gcd(content, nz);
          if (g.is_constant()) break;
          content = *poly_divide_exact(content, g);
          divisor *= g;
        }
      }
      if (!divisor.is_constant()) {
        for (auto& cell : row) cell.value = *poly_divide_exact(cell.value, divisor);
      }
    }
    const FieldElement lead = row.front().value.leading_coefficient();
    if (!lead.is_one()) {
      const FieldElement inv = lead.inverse();
      for (auto& cell : row) cell.value = cell.value.scaled(inv);
    }
  }

  void impose_zero(const Assumptions& a, Poly p) {
    for (const auto& nz : a.nonzero) {
      while (true) {
        Poly g = multivariate_gcd(p, nz);
        if (g.is_constant()) break;
        p = *poly_divide_exact(p, g);
      }
    }
    if (p.is_constant()) return;
    Monomial content = p.leading_term().mono;
    for (const auto& t : p.terms()) {
      for (std::size_t k = 0; k < nparams_; ++k) content.set(k, std::min(content[k], t.mono[k]));
    }
    const Poly zero(nparams_, sys_.field());
    for (std::size_t k = 0; k < nparams_; ++k) {
      if (content[k] > 0) explore(with_value(a, k, zero));
    }
    if (!content.is_one()) {
      p = *poly_divide_exact(p, Poly::monomial(nparams_, FieldElement::one(sys_.field()), content));
    }
    if (!p.is_constant()) solve_factor(a, p);
  }

  void solve_factor(const Assumptions& a, const Poly& p) {
    std::vector<std::size_t> vars;
    for (std::size_t k = 0; k < nparams_; ++k) {
      if (p.depends_on(k)) vars.push_back(k);
    }
    for (std::size_t k : vars) {
      if (p.degree_in(k) != 1) continue;
      const Poly lead = coefficient_in(p, k, 1);
      if (!lead.is_constant()) continue;
      const Poly rest = coefficient_in(p, k, 0);
      explore(with_value(a, k, rest.scaled(-lead.constant_term().inverse())));
      return;
    }
    if (vars.size() == 1) {
      const std::size_t k = vars.front();
      UniPoly uni;
      for (long e = 0; e <= p.degree_in(k); ++e) {
        uni.push_back(coefficient_in(p, k, static_cast<unsigned>(e)).constant_term());
      }
      const FieldRoots roots = roots_in_field(uni);
      for (const auto& r : roots.roots) explore(with_value(a, k, param_constant(r)));
      if (roots.leftover.size() > 1) {
        Poly left(nparams_, sys_.field());
        for (std::size_t e = 0; e < roots.leftover.size(); ++e) {
          left += Poly::monomial(nparams_, roots.leftover[e], Monomial::variable(k, static_cast<unsigned>(e)));
        }
        add_residual(a, left);
      }
      return;
    }
    for (std::size_t k : vars) {
      Poly c = content_in(p, k);
      if (c.is_constant()) continue;
      solve_factor(a, c);
      solve_factor(a, *poly_divide_exact(p, c));
      return;
    }
    add_residual(a, p);
  }

  void add_residual(const Assumptions& a, const Poly& condition, bool confirmed = false) {
    ResidualCondition rc{condition.monic(), {}, confirmed};
    for (std::size_t k = 0; k < nparams_; ++k) {
      if (a.value[k]) rc.assignments.emplace_back(k, *a.value[k]);
    }
    report_.residual_conditions.push_back(std::move(rc));
  }

  // Every parameter is fixed: compute the kernel over the field.
  void constant_leaf(const std::vector<Row>& prow, const Assumptions& a) {
    const FieldSpec f = sys_.field();
    Echelon ech(columns_.size(), f);
    for (const auto& r : prow) {
      SVec v;
      for (const auto& cell : r) v.emplace_back(cell.col, cell.value.constant_term());
      ech.insert(std::move(v));
    }
    Poly cofactor(sys_.nvars(), f);
    for (std::size_t b = 0; b < nparams_; ++b) {
      if (!a.value[b] || !a.value[b]->is_constant()) {
        throw InvariantViolation("kernel leaf reached with an unfixed cofactor parameter");
      }
      cofactor += Poly::monomial(sys_.nvars(), a.value[b]->constant_term(), report_.cofactor_monomials[b]);
    }
    for (const SVec& v : ech.kernel_basis()) {
      std::vector<Term> terms;
      for (const auto& [col, c] : v) terms.push_back({columns_[col], c});
      Poly F = Poly::from_terms(sys_.nvars(), f, std::move(terms)).monic();
      auto cert = cofactor_of(sys_, F);
      if (!cert || !(cert->cofactor == cofactor)) {
        throw InvariantViolation("search produced a kernel vector that fails re-verification: " + format_poly(F));
      }
      const std::string key = format_poly(cert->polynomial) + "|" + format_poly(cert->cofactor);
      found_.try_emplace(key, *cert);
    }
  }

  // One free parameter t with M(t) = A0 + t*A1.  When A1 has full column
  // rank a constant row transform turns M(t) f = 0 into E f = t f, C f = 0,
  // and the admissible t are the eigenvalues of E on the largest
  // E-invariant subspace of ker C.  Returns false when the shape does not
  // apply and generic elimination must be used.
  bool eigen_branch(const std::vector<Row>& rows, const Assumptions& a, std::size_t t) {
    const std::size_t n = columns_.size();
    const FieldSpec f = sys_.field();
    // Augmented rows [B | A] with A f = t B f, B = -A1.
    Echelon aug(n, f);
    std::vector<SVec> constraints;
    for (const auto& r : rows) {
      SVec bpart, apart;
      for (const auto& cell : r) {
        if (cell.value.degree_in(t) > 1) return false;
        const Poly c1 = coefficient_in(cell.value, t, 1);
        const Poly c0 = coefficient_in(cell.value, t, 0);
        if (!c1.is_constant() || !c0.is_constant()) return false;
        if (!c1.is_zero()) bpart.emplace_back(cell.col, -c1.constant_term());
        if (!c0.is_zero()) apart.emplace_back(n + cell.col, c0.constant_term());
      }
      bpart.insert(bpart.end(), apart.begin(), apart.end());
      if (auto rest = aug.insert(std::move(bpart))) {
        for (auto& e : *rest) e.first -= n;
        if (!rest->empty()) constraints.push_back(std::move(*rest));
      }
    }
    if (aug.rank() < n) return false;
    // E row j: the A-part of the pivot row for column j.
    std::vector<SVec> E(n);
    for (std::size_t k = 0; k < aug.rank(); ++k) {
      SVec row;
      for (const auto& [col, c] : aug.rows()[k]) {
        if (col >= n) row.emplace_back(col - n, c);
      }
      E[aug.pivots()[k]] = std::move(row);
    }
    // Largest E-invariant subspace of ker C: ker of C, C E, C E^2, ...
    Echelon obs(n, f);
    std::vector<SVec> fresh = std::move(constraints);
    while (!fresh.empty()) {
      std::vector<SVec> added;
      for (auto& v : fresh) {
        if (obs.insert(v)) continue;
        added.push_back(std::move(v));
      }
      fresh.clear();
      for (const auto& v : added) {
        std::map<std::size_t, FieldElement> acc;
        for (const auto& [j, c] : v) {
          for (const auto& [k, e] : E[j]) {
            auto it = acc.try_emplace(k, FieldElement::zero(f)).first;
            it->second += c * e;
          }
        }
        SVec w;
        for (auto& [k, c] : acc) {
          if (!c.is_zero()) w.emplace_back(k, std::move(c));
        }
        if (!w.empty()) fresh.push_back(std::move(w));
      }
    }
    const std::vector<SVec> basis = obs.kernel_basis();
    const std::size_t w = basis.size();
    if (w == 0) return true;
    // Coordinates in the kernel basis are the entries at the free columns.
    std::vector<std::size_t> free_cols;
    for (const auto& v : basis) free_cols.push_back(v.back().first);
    std::vector<std::vector<FieldElement>> T(w, std::vector<FieldElement>(w, FieldElement::zero(f)));
    for (std::size_t j = 0; j < w; ++j) {
      for (std::size_t i = 0; i < w; ++i) {
        FieldElement sum = FieldElement::zero(f);
        auto it = basis[j].begin();
        for (const auto& [k, e] : E[free_cols[i]]) {
          while (it != basis[j].end() && it->first < k) ++it;
          if (it != basis[j].end() && it->first == k) sum += e * it->second;
        }
        T[i][j] = sum;
      }
    }
    UniPoly chi = characteristic_polynomial(T);
    const FieldRoots roots = roots_in_field(chi);
    for (const auto& r : roots.roots) explore(with_value(a, t, param_constant(r)));
    if (roots.leftover.size() > 1) {
      Poly left(nparams_, f);
      for (std::size_t e = 0; e < roots.leftover.size(); ++e) {
        left += Poly::monomial(nparams_, roots.leftover[e], Monomial::variable(t, static_cast<unsigned>(e)));
      }
      for (const auto& nz : a.nonzero) {
        while (true) {
          Poly g = multivariate_gcd(left, nz);
          if (g.is_constant()) break;
          left = *poly_divide_exact(left, g);
        }
      }
      if (!left.is_constant()) add_residual(a, left, true);
    }
    return true;
  }

  SearchReport finish() const {
    SearchReport out = report_;
    for (const auto& [key, cert] : found_) out.certificates.push_back(cert);
    std::sort(out.certificates.begin(), out.certificates.end(), [](const auto& x, const auto& y) {
      if (int c = Poly::compare(x.polynomial, y.polynomial); c != 0) return c < 0;
      return Poly::compare(x.cofactor, y.cofactor) < 0;
    });
    // Deduplicate residual conditions by (condition, assignments).
    std::map<std::string, ResidualCondition> uniq;
    const auto names = out.parameter_names();
    for (const auto& r : out.residual_conditions) {
      std::string key = format_poly(r.condition, names);
      for (const auto& [k, v] : r.assignments) key += "|" + names[k] + "=" + format_poly(v, names);
      uniq.try_emplace(key, r);
    }
    out.residual_conditions.clear();
    for (auto& [key, r] : uniq) out.residual_conditions.push_back(r);
    std::sort(out.notes.begin(), out.notes.end());
    out.notes.erase(std::unique(out.notes.begin(), out.notes.end()), out.notes.end());
    return out;
  }

  const NaturalHamiltonian& sys_;
  SearchOptions opts_;
  std::vector<Monomial> columns_;
  std::size_t nparams_ = 0;
  std::vector<Row> original_;
  SearchReport report_;
  std::map<std::string, DarbouxCertificate> found_;
};

}  // namespace

std::vector<Monomial> darboux_ansatz_monomials(const NaturalHamiltonian& sys, long gamma_degree,
                                               bool homogeneous_only) {
  const Direction g = gamma_direction(sys);
  if (gamma_degree < 1) throw InputError("ansatz gamma-degree must be >= 1");
  std::vector<Monomial> all;
  enumerate_monomials(g.gamma, 0, gamma_degree, Monomial{}, all);
  std::vector<Monomial> out;
  for (const auto& mono : all) {
    const long w = g.weight(mono);
    if (w == 0) continue;
    if (homogeneous_only && w != gamma_degree) continue;
    out.push_back(mono);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> cofactor_ansatz_monomials(const NaturalHamiltonian& sys) {
  const Direction g = gamma_direction(sys);
  const long top = sys.degree() - 2;
  const bool homogeneous = sys.potential_is_homogeneous();
  std::vector<long> q_weights(g.gamma.begin(), g.gamma.begin() + static_cast<long>(sys.m()));
  std::vector<Monomial> all;
  enumerate_monomials(q_weights, 0, top, Monomial{}, all);
  std::vector<Monomial> out;
  for (const auto& mono : all) {
    if (homogeneous && g.weight(mono) != top) continue;
    out.push_back(mono);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SearchReport search_darboux(const NaturalHamiltonian& sys, const SearchOptions& opts) {
  Searcher s(sys, opts);
  return s.run();
}

}  // namespace darboux
