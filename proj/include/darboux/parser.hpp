#pragma once

// Text form of polynomials and of system-definition files.
//
// Polynomial grammar (precedence ^ > unary minus > * > binary +/-):
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := base ('^' positive-integer)?
//   base   := integer ('/' integer)? | 'i' | 'sqrt' '(' integer ')'
//           | variable | '(' expr ')'
//
// There is no implicit multiplication: "2q1" and "q1 q2" are errors.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "darboux/field.hpp"
#include "darboux/poly.hpp"

namespace darboux {

struct ParseContext {
  VarSet varset;
  FieldSpec field;
};

/// Throws ParseError with a 1-based line/column on any failure.
Poly parse_poly(std::string_view text, const ParseContext& ctx);

/// Parses a constant expression (no variables allowed).
FieldElement parse_scalar(std::string_view text, FieldSpec field);

/// Parses "Q", "Q(i,sqrt2)", "Q(i,sqrt 2)" or "Q(i,sqrt(2))".
FieldSpec parse_field_spec(std::string_view text);

/// Canonical text, terms in decreasing canonical order, q/p variable names.
/// parse_poly(format_poly(a)) == a.
std::string format_poly(const Poly& a);
/// Same, with caller-supplied variable names.
std::string format_poly(const Poly& a, std::span<const std::string> names);

/// Literal form of a scalar, e.g. "-3/2", "2*i*sqrt(2)", "(1 + i)".
std::string format_scalar(const FieldElement& x);

/// Contents of a system-definition file.
struct SystemDefinition {
  VarSet varset;
  FieldSpec field;
  std::vector<FieldElement> mu;
  Poly potential;
};

/// Line-based `key = value` format with `#` comments; keys m, field, mu, V.
SystemDefinition parse_system_definition(std::string_view text);
/// Reads and parses a file; unreadable files raise InputError.
SystemDefinition load_system_file(const std::string& path);

}  // namespace darboux
