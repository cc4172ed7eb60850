#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pushkit/gysin.hpp"
#include "pushkit/polynomial.hpp"

namespace pushkit {

/// Syntax tree of a class expression.
///
///   expr   := term (("+" | "-") term)*
///   term   := factor ("*"? factor)*
///   factor := base ("^" nat)?
///   base   := nat | nat "/" nat | var | "(" expr ")" | "-" factor | "inv" "(" expr ")"
///   var    := "x" | "y" | "c" nat | "q" nat | "u" nat
///
/// There is no division operator; `inv(e)` is the truncated series inverse.
struct ExprNode {
  enum class Kind { number, variable, add, sub, mul, pow, neg, inv };

  Kind kind = Kind::number;
  std::size_t offset = 0; // byte offset of the node's first token
  Rational value;         // number
  std::string name;       // variable, e.g. "c2"
  unsigned exponent = 0;  // pow
  std::vector<ExprNode> children;
};

using ExprAst = ExprNode;

/// Largest exponent accepted after `^`.
inline constexpr unsigned max_exponent = 4096;

/// Parses `text` for a bundle of rank r. Generator subscripts are checked
/// against the rank (c1..cr, q1..q(r-1), u1..ur).
///
/// Throws ParseError (syntax, with byte offset), ParseArityError (subscript
/// out of range) or ExponentError (negative, non-integer or oversized power).
/// Never throws anything else for any input string.
ExprAst parse_expression(std::string_view text, unsigned r);

/// Evaluates the tree over the rank-r bundle table with every product and
/// inverse truncated at `cutoff` (none if nullopt; `inv` then needs a cutoff).
/// Throws NotInvertibleError for inv of a class with zero constant term.
Polynomial evaluate(const ExprAst &ast, unsigned r, Cutoff cutoff);

enum class SignConvention {
  mixed_to_y, // rewrite x = -y only if both occur
  to_y,
  to_x,
};

/// Series-expands the expression at cutoff D and normalizes the hyperplane
/// class per `convention`.
ClassExpr elaborate(const ExprAst &ast, unsigned r, unsigned cutoff,
                    SignConvention convention = SignConvention::mixed_to_y);

/// Renders the tree back to (fully parenthesized) source text.
std::string to_string(const ExprAst &ast);

} // namespace pushkit
