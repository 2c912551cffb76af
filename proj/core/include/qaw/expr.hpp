#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "qaw/hall.hpp"
#include "qaw/uaw.hpp"

namespace qaw {

/// Parse failure, with the byte offset and the tokens that were expected there.
struct SyntaxError : std::runtime_error {
  SyntaxError(size_t offset, std::string expected_tokens)
      : std::runtime_error("syntax error at byte " + std::to_string(offset) + ": expected " +
                           expected_tokens),
        offset(offset),
        expected(std::move(expected_tokens)) {}
  size_t offset;
  std::string expected;
};

/// Evaluation failure (e.g. division by a non-scalar, negative exponent on a
/// generator).
struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Abstract syntax tree for algebra expressions.
///
/// Grammar: expr := term (("+"|"-") term)* ; term := factor (("*"|"/")? factor)* ;
/// factor := "-"? atom ("^" int)? ; atom := nat | "q" | "A"|"B"|"C" |
/// "al"|"be"|"ga"|"Om" | "H" nat | "[" expr "," expr "]" | "(" expr ")".
/// Juxtaposition multiplies; Unicode aliases for the central generators accepted.
struct Expr {
  enum class Kind { Number, Q, Gen, Central, Hall, Add, Sub, Mul, Div, Pow, Neg, Bracket };

  Kind kind;
  BigInt number;      // Number
  char gen = 0;       // Gen: 'A','B','C'
  int central = 0;    // Central: 0 al, 1 be, 2 ga, 3 Om
  int hall = 0;       // Hall index
  long exponent = 0;  // Pow
  ExprPtr a, b;

  std::string str() const;  // minimal-parenthesis printer; reparses to the same tree
};

ExprPtr parse_expr(std::string_view text);

/// Value in the algebra Delta. Scalars embed via the empty normal word.
UawElement eval_delta(const Expr& e, Uaw& uaw, HallBasis& basis);
/// Value in the free algebra; al/be/ga/Om stand for their defining word
/// combinations and H n for the expanded Hall element.
FreeElement eval_free(const Expr& e, HallBasis& basis);
/// Scalar-only evaluation; EvalError when a generator appears.
RatFunc eval_scalar(const Expr& e);
/// Interpret the expression as a bracket tree over letters (and H atoms).
LieTreePtr to_lie_tree(const Expr& e, HallBasis& basis);

/// Convenience: parse and evaluate a scalar in the module-scalar text syntax.
RatFunc parse_scalar(std::string_view text);

}  // namespace qaw
