#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "flagorder/automorphism.hpp"
#include "flagorder/skew.hpp"

namespace flagorder {

/// Syntax tree of the expression language.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' nat)?
///   primary := nat | var | 'id' | 'perm(' nat+ ')' | 'sign(' var ')'
///            | 'shift(' var ':' rational ')' | '(' expr ')'
///
/// '*' and '/' share one precedence level and associate to the left, so
/// 1/(x2-x1)*(perm(1 2)-id) is (1/(x2-x1)) * (perm(1 2)-id). A divisor must
/// evaluate to a nonzero scalar; X/f multiplies X by 1/f on the right.
struct Ast {
  enum class Kind { number, variable, neg, add, sub, mul, div, pow, perm, sign, shift, identity };

  Kind kind = Kind::number;
  /// number: the literal; shift: the amount.
  Rat value;
  /// variable, sign, shift: the variable name.
  std::string name;
  /// perm: one-based cycle entries.
  std::vector<std::size_t> cycle;
  /// pow: the exponent.
  unsigned exponent = 0;
  std::vector<Ast> children;

  friend bool operator==(const Ast& a, const Ast& b);
};

/// Throws ParseError (with line and column) on syntax errors, unknown
/// variables and malformed cycles.
Ast parse(std::string_view input, const VarList& vars);

/// Minimal-parenthesis text that parses back to an equal tree.
std::string pretty(const Ast& ast);

SkewElement to_skew(const Ast& ast, const VarList& vars);

SkewElement parse_skew(std::string_view input, const VarList& vars);
/// Requires a scalar result.
RatFunc parse_ratfunc(std::string_view input, const VarList& vars);
/// Requires a polynomial result.
MultiPoly parse_poly(std::string_view input, const VarList& vars);
/// Requires a single automorphism with coefficient 1.
Automorphism parse_automorphism(std::string_view input, const VarList& vars);

/// Splits at commas outside parentheses; empty input gives an empty list.
std::vector<std::string> split_top_level(std::string_view input, char sep = ',');
std::vector<Automorphism> parse_automorphism_list(std::string_view input, const VarList& vars);
std::vector<MultiPoly> parse_poly_list(std::string_view input, const VarList& vars);

/// "x1,x2,x3" -> VarList.
VarList parse_vars(std::string_view input);

}  // namespace flagorder
