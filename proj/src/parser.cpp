#include "darboux/parser.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

constexpr unsigned kMaxExponent = 256;
constexpr int kMaxNesting = 256;

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  Lexer(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line_, column_});
        return out;
      }
      const char c = text_[pos_];
      const std::size_t line = line_;
      const std::size_t col = column_;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) s += advance();
        out.push_back({Tok::Number, s, line, col});
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string s;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          s += advance();
        }
        out.push_back({Tok::Ident, s, line, col});
      } else {
        Tok kind;
        switch (c) {
          case '+': kind = Tok::Plus; break;
          case '-': kind = Tok::Minus; break;
          case '*': kind = Tok::Star; break;
          case '/': kind = Tok::Slash; break;
          case '^': kind = Tok::Caret; break;
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          case ',': kind = Tok::Comma; break;
          default: {
            std::ostringstream msg;
            if (std::isprint(static_cast<unsigned char>(c))) {
              msg << "unexpected character '" << c << "'";
            } else {
              msg << "unexpected byte 0x" << std::hex << static_cast<int>(static_cast<unsigned char>(c));
            }
            throw ParseError(msg.str(), line, col);
          }
        }
        out.push_back({kind, std::string(1, advance()), line, col});
      }
    }
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r')) {
      advance();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t nvars, std::optional<VarSet> varset, FieldSpec field)
      : toks_(std::move(tokens)), nvars_(nvars), varset_(varset), field_(field) {}

  Poly parse_all() {
    Poly p = expr();
    if (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind == Tok::Number || t.kind == Tok::Ident || t.kind == Tok::LParen) {
        fail("implicit multiplication is not allowed; use '*'", t);
      }
      fail("unexpected " + describe(t), t);
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const Token& at) const { throw ParseError(msg, at.line, at.column); }

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what + ", found " + describe(peek()), peek());
    return take();
  }

  Poly constant(const FieldElement& c) const { return Poly::constant(nvars_, c); }

  Poly expr() {
    Poly acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = take().kind == Tok::Minus;
      Poly rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = unary();
    while (peek().kind == Tok::Star) {
      const Token& star = take();
      Poly rhs = unary();
      acc = guarded([&] { return acc * rhs; }, star);
    }
    return acc;
  }

  Poly unary() {
    if (peek().kind == Tok::Minus) {
      const Token& minus = take();
      enter(minus);
      Poly p = -unary();
      --depth_;
      return p;
    }
    return power();
  }

  Poly power() {
    Poly b = base();
    if (peek().kind == Tok::Caret) {
      const Token& caret = take();
      const Token& num = peek();
      if (num.kind != Tok::Number) fail("exponent must be a positive integer", num);
      take();
      if (num.text.size() > 4 || std::stoul(num.text) == 0 || std::stoul(num.text) > kMaxExponent) {
        fail("exponent must be an integer in 1.." + std::to_string(kMaxExponent), num);
      }
      const unsigned e = static_cast<unsigned>(std::stoul(num.text));
      b = guarded([&] { return b.pow(e); }, caret);
    }
    return b;
  }

  Poly base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        take();
        mpz_class num(t.text);
        mpz_class den(1);
        if (peek().kind == Tok::Slash) {
          take();
          const Token& d = peek();
          if (d.kind != Tok::Number) fail("expected an integer denominator", d);
          take();
          den = mpz_class(d.text);
          if (den == 0) fail("zero denominator", d);
        }
        return constant(FieldElement(field_, Rational(num, den)));
      }
      case Tok::Ident:
        return identifier();
      case Tok::LParen: {
        take();
        enter(t);
        Poly p = expr();
        --depth_;
        expect(Tok::RParen, "')'");
        return p;
      }
      case Tok::Slash:
        fail("'/' is only allowed inside a rational literal such as 3/4", t);
      default:
        fail("expected a number, variable or '(', found " + describe(t), t);
    }
  }

  Poly identifier() {
    const Token& t = take();
    if (t.text == "i") {
      if (field_.is_rationals()) fail("'i' is not available over Q", t);
      return constant(FieldElement::imaginary_unit(field_));
    }
    if (t.text == "sqrt") {
      expect(Tok::LParen, "'(' after sqrt");
      const Token& n = peek();
      if (n.kind != Tok::Number) fail("sqrt takes a non-negative integer literal", n);
      take();
      expect(Tok::RParen, "')'");
      const Rational value{mpz_class(n.text)};
      if (auto r = rational_sqrt(value)) return constant(FieldElement(field_, *r));
      if (!field_.is_rationals() && value == field_.d) return constant(FieldElement::sqrt_d(field_));
      fail("sqrt(" + n.text + ") is not an element of " + field_.to_string(), t);
    }
    if (varset_ && (t.text[0] == 'q' || t.text[0] == 'p') && t.text.size() > 1 && t.text.size() < 6) {
      const std::string digits = t.text.substr(1);
      const bool numeric = digits.find_first_not_of("0123456789") == std::string::npos && digits[0] != '0';
      if (numeric) {
        const std::size_t idx = std::stoul(digits);
        if (idx >= 1 && idx <= varset_->m) {
          const std::size_t var = t.text[0] == 'q' ? varset_->q(idx - 1) : varset_->p(idx - 1);
          return Poly::variable(nvars_, field_, var);
        }
      }
    }
    fail("unknown variable '" + t.text + "'", t);
  }

  void enter(const Token& at) {
    if (++depth_ > kMaxNesting) fail("expression nested too deeply", at);
  }

  template <class F>
  Poly guarded(F&& f, const Token& at) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      fail(e.what(), at);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  std::optional<VarSet> varset_;
  FieldSpec field_;
  int depth_ = 0;
};

Poly parse_at(std::string_view text, const ParseContext& ctx, std::size_t line, std::size_t column) {
  Parser p(Lexer(text, line, column).run(), ctx.varset.nvars(), ctx.varset, ctx.field);
  return p.parse_all();
}

std::string rational_text(const Rational& q) { return q.get_str(); }

std::string basis_unit(int k, long d) {
  switch (k) {
    case FieldElement::kI: return "i";
    case FieldElement::kSqrt: return "sqrt(" + std::to_string(d) + ")";
    case FieldElement::kISqrt: return "i*sqrt(" + std::to_string(d) + ")";
    default: return "";
  }
}

// |component| times basis unit, without sign.
std::string component_text(const Rational& magnitude, int k, long d) {
  const std::string unit = basis_unit(k, d);
  if (unit.empty()) return rational_text(magnitude);
  if (magnitude == 1) return unit;
  return rational_text(magnitude) + "*" + unit;
}

std::string monomial_text(const Monomial& mono, std::span<const std::string> names) {
  std::string s;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (mono[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[k];
    if (mono[k] > 1) s += "^" + std::to_string(mono[k]);
  }
  return s;
}

// Multi-component scalar as a parenthesized sum.
std::string parenthesized(const FieldElement& x) {
  std::string s = "(";
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    const Rational& c = x.component(k);
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    s += component_text(abs(c), k, x.field().d);
    first = false;
  }
  return s + ")";
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Poly parse_poly(std::string_view text, const ParseContext& ctx) { return parse_at(text, ctx, 1, 1); }

FieldElement parse_scalar(std::string_view text, FieldSpec field) {
  Parser p(Lexer(text, 1, 1).run(), 0, std::nullopt, field);
  Poly c = p.parse_all();
  return c.constant_term();
}

FieldSpec parse_field_spec(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s == "Q") return FieldSpec::rationals();
  const std::string prefix = "Q(i,sqrt";
  if (s.rfind(prefix, 0) == 0 && s.back() == ')') {
    std::string digits = s.substr(prefix.size(), s.size() - prefix.size() - 1);
    if (!digits.empty() && digits.front() == '(' && digits.back() == ')') digits = digits.substr(1, digits.size() - 2);
    if (!digits.empty() && digits.size() < 10 && digits.find_first_not_of("0123456789") == std::string::npos) {
      return FieldSpec::quad_gauss(std::stol(digits));
    }
  }
  throw InputError("field must be 'Q' or 'Q(i,sqrt D)', got '" + std::string(text) + "'");
}

std::string format_scalar(const FieldElement& x) {
  if (x.nonzero_components() > 1) return parenthesized(x);
  for (int k = 0; k < 4; ++k) {
    const Rational& c = x.component(k);
    if (sgn(c) != 0) return (sgn(c) < 0 ? "-" : "") + component_text(abs(c), k, x.field().d);
  }
  return "0";
}

std::string format_poly(const Poly& a) {
  if (a.nvars() % 2 != 0 || a.nvars() == 0) throw InputError("format_poly needs a phase-space ring");
  const VarSet vs(a.nvars() / 2);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < vs.nvars(); ++k) names.push_back(vs.name(k));
  return format_poly(a, names);
}

std::string format_poly(const Poly& a, std::span<const std::string> names) {
  if (names.size() != a.nvars()) throw InputError("variable name count does not match the ring");
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    const std::string mono = monomial_text(t.mono, names);
    bool negative = false;
    std::string coef;
    if (t.coef.nonzero_components() > 1) {
      coef = parenthesized(t.coef);
    } else {
      for (int k = 0; k < 4; ++k) {
        const Rational& c = t.coef.component(k);
        if (sgn(c) == 0) continue;
        negative = sgn(c) < 0;
        coef = component_text(abs(c), k, t.coef.field().d);
      }
    }
    std::string body;
    if (mono.empty()) {
      body = coef;
    } else if (coef == "1") {
      body = mono;
    } else {
      body = coef + "*" + mono;
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

SystemDefinition parse_system_definition(std::string_view text) {
  struct Entry {
    std::string value;
    std::size_t line;
    std::size_t column;
  };
  std::map<std::string, Entry> entries;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no, 1);
    std::string key = trim(line.substr(0, eq));
    std::string_view raw = line.substr(eq + 1);
    std::size_t lead = 0;
    while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
    const std::size_t value_col = eq + 2 + lead;
    if (key != "m" && key != "field" && key != "mu" && key != "V") {
      throw ParseError("unknown key '" + key + "'", line_no, 1);
    }
    if (entries.count(key)) throw ParseError("duplicate key '" + key + "'", line_no, 1);
    entries[key] = {trim(raw), line_no, value_col};
    if (end == text.size()) break;
  }
  for (const char* key : {"m", "field", "mu", "V"}) {
    if (!entries.count(key)) throw ParseError(std::string("missing key '") + key + "'", line_no, 1);
  }

  const Entry& m_entry = entries["m"];
  if (m_entry.value.empty() || m_entry.value.size() > 3 ||
      m_entry.value.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("m must be a positive integer", m_entry.line, m_entry.column);
  }
  const std::size_t m = std::stoul(m_entry.value);
  if (m < 2) throw ParseError("m must be at least 2", m_entry.line, m_entry.column);
  if (2 * m > kMaxVars) throw ParseError("m is too large", m_entry.line, m_entry.column);

  const Entry& f_entry = entries["field"];
  FieldSpec field;
  try {
    field = parse_field_spec(f_entry.value);
  } catch (const InputError& e) {
    throw ParseError(e.what(), f_entry.line, f_entry.column);
  }

  const VarSet vs(m);
  const ParseContext ctx{vs, field};
  std::vector<FieldElement> mu;
  const Entry& mu_entry = entries["mu"];
  std::size_t piece_start = 0;
  const std::string& mu_text = mu_entry.value;
  while (true) {
    std::size_t comma = mu_text.find(',', piece_start);
    std::string piece = mu_text.substr(piece_start, comma == std::string::npos ? std::string::npos : comma - piece_start);
    Poly c = parse_at(piece, ParseContext{VarSet(m), field}, mu_entry.line, mu_entry.column + piece_start);
    if (!c.is_constant()) throw ParseError("mu entries must be constants", mu_entry.line, mu_entry.column + piece_start);
    mu.push_back(c.constant_term());
    if (comma == std::string::npos) break;
    piece_start = comma + 1;
  }
  if (mu.size() != m) {
    throw ParseError("mu must have exactly m = " + std::to_string(m) + " entries", mu_entry.line, mu_entry.column);
  }

  const Entry& v_entry = entries["V"];
  Poly V = parse_at(v_entry.value, ctx, v_entry.line, v_entry.column);
  return SystemDefinition{vs, field, std::move(mu), std::move(V)};
}

SystemDefinition load_system_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read system file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system_definition(buf.str());
}

}  // namespace darboux
