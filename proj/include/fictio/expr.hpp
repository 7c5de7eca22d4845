#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "fictio/lc_number.hpp"

namespace fictio {

enum class Builtin { Exp, Ln, Sin, Cos, Sqrt };

const char* builtin_name(Builtin b);
std::optional<Builtin> builtin_from_name(std::string_view name);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Single-variable arithmetic expression AST. Nodes are immutable and may
/// be shared freely between trees and threads.
///
/// Grammar (whitespace-insensitive):
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := "-" factor | base ("^" intlit)?
///   base   := numlit | "x" | ident "(" expr ")" | "(" expr ")"
///   numlit := integer | integer "/" integer
/// "+", "-", "*", "/" associate left; "^" requires an integer literal
/// exponent (possibly negative) and binds tighter than unary minus.
struct Expr {
  enum class Kind { Const, Var, Neg, Add, Sub, Mul, Div, PowInt, Call };

  Kind kind;
  Rational value;             // Const
  long exponent = 0;          // PowInt
  Builtin fn = Builtin::Exp;  // Call
  ExprPtr lhs, rhs;           // children; rhs empty for unary nodes

  static ExprPtr constant(Rational q);
  static ExprPtr var();
  static ExprPtr neg(ExprPtr e);
  static ExprPtr add(ExprPtr l, ExprPtr r);
  static ExprPtr sub(ExprPtr l, ExprPtr r);
  static ExprPtr mul(ExprPtr l, ExprPtr r);
  static ExprPtr div(ExprPtr l, ExprPtr r);
  static ExprPtr pow_int(ExprPtr base, long k);
  static ExprPtr call(Builtin fn, ExprPtr arg);
};

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

/// Throws ParseError with a byte offset on malformed input.
ExprPtr parse_expr(std::string_view src);

/// Precedence-aware canonical rendering; parse_expr(to_string(e)) == e for
/// every tree the grammar can denote.
std::string to_string(const ExprPtr& e);

/// Exact evaluation; rejects transcendental builtins.
Rational eval_rational(const ExprPtr& e, const Rational& x);

/// Evaluation over LC numbers: the arithmetic rules transfer verbatim.
/// Exact mode forbids builtins; float mode expands builtin f at a + u
/// (a the appreciable part, u the higher part) as a Taylor series
/// truncated at the window. Division by a pure infinitesimal is legal and
/// yields an infinite value; ln and sqrt require a positive appreciable
/// part.
LCNumber eval_lc(const ExprPtr& e, const LCNumber& x, Mode mode);

/// Plain binary64 walk over ordinary numbers.
double eval_scalar(const ExprPtr& e, double x);

}  // namespace fictio
