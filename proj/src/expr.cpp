#include "fictio/expr.hpp"

#include <cctype>
#include <cmath>
#include <vector>

namespace fictio {

const char* builtin_name(Builtin b) {
  switch (b) {
    case Builtin::Exp: return "exp";
    case Builtin::Ln: return "ln";
    case Builtin::Sin: return "sin";
    case Builtin::Cos: return "cos";
    case Builtin::Sqrt: return "sqrt";
  }
  return "?";
}

std::optional<Builtin> builtin_from_name(std::string_view name) {
  if (name == "exp") return Builtin::Exp;
  if (name == "ln") return Builtin::Ln;
  if (name == "sin") return Builtin::Sin;
  if (name == "cos") return Builtin::Cos;
  if (name == "sqrt") return Builtin::Sqrt;
  return std::nullopt;
}

namespace {

ExprPtr make_node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

}  // namespace

ExprPtr Expr::constant(Rational q) {
  Expr e{};
  e.kind = Kind::Const;
  e.value = std::move(q);
  return make_node(std::move(e));
}

ExprPtr Expr::var() {
  Expr e{};
  e.kind = Kind::Var;
  return make_node(std::move(e));
}

ExprPtr Expr::neg(ExprPtr c) {
  Expr e{};
  e.kind = Kind::Neg;
  e.lhs = std::move(c);
  return make_node(std::move(e));
}

ExprPtr Expr::add(ExprPtr l, ExprPtr r) {
  Expr e{};
  e.kind = Kind::Add;
  e.lhs = std::move(l);
  e.rhs = std::move(r);
  return make_node(std::move(e));
}

ExprPtr Expr::sub(ExprPtr l, ExprPtr r) {
  Expr e{};
  e.kind = Kind::Sub;
  e.lhs = std::move(l);
  e.rhs = std::move(r);
  return make_node(std::move(e));
}

ExprPtr Expr::mul(ExprPtr l, ExprPtr r) {
  Expr e{};
  e.kind = Kind::Mul;
  e.lhs = std::move(l);
  e.rhs = std::move(r);
  return make_node(std::move(e));
}

ExprPtr Expr::div(ExprPtr l, ExprPtr r) {
  Expr e{};
  e.kind = Kind::Div;
  e.lhs = std::move(l);
  e.rhs = std::move(r);
  return make_node(std::move(e));
}

ExprPtr Expr::pow_int(ExprPtr base, long k) {
  Expr e{};
  e.kind = Kind::PowInt;
  e.lhs = std::move(base);
  e.exponent = k;
  return make_node(std::move(e));
}

ExprPtr Expr::call(Builtin fn, ExprPtr arg) {
  Expr e{};
  e.kind = Kind::Call;
  e.fn = fn;
  e.lhs = std::move(arg);
  return make_node(std::move(e));
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Kind::Const: return a->value == b->value;
    case Expr::Kind::Var: return true;
    case Expr::Kind::Neg: return expr_equal(a->lhs, b->lhs);
    case Expr::Kind::PowInt: return a->exponent == b->exponent && expr_equal(a->lhs, b->lhs);
    case Expr::Kind::Call: return a->fn == b->fn && expr_equal(a->lhs, b->lhs);
    default: return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
  }
}

// ---------------------------------------------------------------------------
// Lexing and parsing.

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Int, start, std::string(src.substr(start, i - start))});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < src.size() && std::isalpha(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Ident, start, std::string(src.substr(start, i - start))});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw ParseError(i, "token", std::string(1, c));
    }
    out.push_back({kind, i, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, src.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End) throw ParseError(peek().pos, "end of input", peek().text);
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = idx_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& advance() { return tokens_[idx_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++idx_;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool plus = advance().kind == Tok::Plus;
      ExprPtr r = term();
      e = plus ? Expr::add(e, r) : Expr::sub(e, r);
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      bool star = advance().kind == Tok::Star;
      ExprPtr r = factor();
      e = star ? Expr::mul(e, r) : Expr::div(e, r);
    }
    return e;
  }

  ExprPtr factor() {
    if (accept(Tok::Minus)) return Expr::neg(factor());
    ExprPtr b = base();
    if (accept(Tok::Caret)) return Expr::pow_int(b, int_literal());
    return b;
  }

  long int_literal() {
    bool neg = accept(Tok::Minus);
    const Token& t = peek();
    if (t.kind != Tok::Int) throw ParseError(t.pos, "integer literal exponent", t.text);
    advance();
    if (t.text.size() > 6) throw ParseError(t.pos, "exponent within range", t.text);
    long v = std::stol(t.text);
    return neg ? -v : v;
  }

  ExprPtr base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        advance();
        // An integer directly followed by "/ integer" is a rational literal.
        if (peek().kind == Tok::Slash && peek(1).kind == Tok::Int) {
          advance();
          const Token& den = advance();
          Rational d = Rational::from_string(den.text);
          if (d.is_zero()) throw ParseError(den.pos, "nonzero denominator", den.text);
          return Expr::constant(Rational::from_string(t.text) / d);
        }
        return Expr::constant(Rational::from_string(t.text));
      }
      case Tok::Ident: {
        advance();
        if (t.text == "x") return Expr::var();
        auto fn = builtin_from_name(t.text);
        if (!fn) throw ParseError(t.pos, "variable 'x' or builtin function", t.text);
        if (!accept(Tok::LParen)) throw ParseError(peek().pos, "'('", peek().text);
        ExprPtr arg = expr();
        if (!accept(Tok::RParen)) throw ParseError(peek().pos, "')'", peek().text);
        return Expr::call(*fn, arg);
      }
      case Tok::LParen: {
        advance();
        ExprPtr e = expr();
        if (!accept(Tok::RParen)) throw ParseError(peek().pos, "')'", peek().text);
        return e;
      }
      default: throw ParseError(t.pos, "number, 'x', function call, or '('", t.text);
    }
  }

  std::vector<Token> tokens_;
  std::size_t idx_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view src) { return Parser(src).run(); }

// ---------------------------------------------------------------------------
// Printing.

namespace {

// Precedence levels: Add/Sub 1, Mul/Div 2, Neg 3, PowInt 4, atoms 5.
int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::PowInt: return 4;
    default: return 5;
  }
}

std::string print(const ExprPtr& e);

std::string wrap(const ExprPtr& e, bool parens) {
  std::string s = print(e);
  return parens ? "(" + s + ")" : s;
}

std::string print(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Const: return e->value.to_string();
    case Expr::Kind::Var: return "x";
    case Expr::Kind::Neg: {
      bool parens = precedence(*e->lhs) < 3 || e->lhs->kind == Expr::Kind::Neg;
      return "-" + wrap(e->lhs, parens);
    }
    case Expr::Kind::Add:
      return wrap(e->lhs, false) + " + " + wrap(e->rhs, precedence(*e->rhs) <= 1);
    case Expr::Kind::Sub:
      return wrap(e->lhs, false) + " - " + wrap(e->rhs, precedence(*e->rhs) <= 1);
    case Expr::Kind::Mul:
      return wrap(e->lhs, precedence(*e->lhs) < 2) + "*" + wrap(e->rhs, precedence(*e->rhs) <= 2);
    case Expr::Kind::Div: {
      std::string l = wrap(e->lhs, precedence(*e->lhs) < 2);
      bool parens = precedence(*e->rhs) <= 2;
      std::string r = wrap(e->rhs, parens);
      // "p / q" with bare integers on both sides would re-lex as a rational
      // literal; parenthesize the divisor in that case.
      if (!parens && !l.empty() && !r.empty() && std::isdigit(static_cast<unsigned char>(l.back())) &&
          std::isdigit(static_cast<unsigned char>(r.front()))) {
        r = "(" + r + ")";
      }
      return l + " / " + r;
    }
    case Expr::Kind::PowInt: {
      bool atomic = e->lhs->kind == Expr::Kind::Var || e->lhs->kind == Expr::Kind::Call ||
                    (e->lhs->kind == Expr::Kind::Const && e->lhs->value.is_integer() &&
                     e->lhs->value.sign() >= 0);
      return wrap(e->lhs, !atomic) + "^" + std::to_string(e->exponent);
    }
    case Expr::Kind::Call: return std::string(builtin_name(e->fn)) + "(" + print(e->lhs) + ")";
  }
  return "?";
}

}  // namespace

std::string to_string(const ExprPtr& e) { return print(e); }

// ---------------------------------------------------------------------------
// Evaluation.

Rational eval_rational(const ExprPtr& e, const Rational& x) {
  switch (e->kind) {
    case Expr::Kind::Const: return e->value;
    case Expr::Kind::Var: return x;
    case Expr::Kind::Neg: return -eval_rational(e->lhs, x);
    case Expr::Kind::Add: return eval_rational(e->lhs, x) + eval_rational(e->rhs, x);
    case Expr::Kind::Sub: return eval_rational(e->lhs, x) - eval_rational(e->rhs, x);
    case Expr::Kind::Mul: return eval_rational(e->lhs, x) * eval_rational(e->rhs, x);
    case Expr::Kind::Div: {
      Rational denom = eval_rational(e->rhs, x);
      if (denom.is_zero()) throw DivisionByZero();
      return eval_rational(e->lhs, x) / denom;
    }
    case Expr::Kind::PowInt: {
      Rational base = eval_rational(e->lhs, x);
      if (base.is_zero() && e->exponent < 0) throw DivisionByZero();
      return base.pow(e->exponent);
    }
    case Expr::Kind::Call: throw TranscendentalInExactMode(builtin_name(e->fn));
  }
  throw Error("unreachable expression kind");
}

double eval_scalar(const ExprPtr& e, double x) {
  switch (e->kind) {
    case Expr::Kind::Const: return e->value.to_double();
    case Expr::Kind::Var: return x;
    case Expr::Kind::Neg: return -eval_scalar(e->lhs, x);
    case Expr::Kind::Add: return eval_scalar(e->lhs, x) + eval_scalar(e->rhs, x);
    case Expr::Kind::Sub: return eval_scalar(e->lhs, x) - eval_scalar(e->rhs, x);
    case Expr::Kind::Mul: return eval_scalar(e->lhs, x) * eval_scalar(e->rhs, x);
    case Expr::Kind::Div: {
      double denom = eval_scalar(e->rhs, x);
      if (denom == 0.0) throw DivisionByZero();
      return eval_scalar(e->lhs, x) / denom;
    }
    case Expr::Kind::PowInt: {
      double base = eval_scalar(e->lhs, x);
      if (base == 0.0 && e->exponent < 0) throw DivisionByZero();
      long k = e->exponent;
      double b = k < 0 ? 1.0 / base : base;
      if (k < 0) k = -k;
      double acc = 1.0;
      while (k > 0) {
        if (k & 1) acc *= b;
        k >>= 1;
        if (k > 0) b *= b;
      }
      return acc;
    }
    case Expr::Kind::Call: {
      double a = eval_scalar(e->lhs, x);
      switch (e->fn) {
        case Builtin::Exp: return std::exp(a);
        case Builtin::Ln:
          if (a <= 0.0) throw DomainError("ln of a non-positive value");
          return std::log(a);
        case Builtin::Sin: return std::sin(a);
        case Builtin::Cos: return std::cos(a);
        case Builtin::Sqrt:
          if (a < 0.0) throw DomainError("sqrt of a negative value");
          return std::sqrt(a);
      }
      break;
    }
  }
  throw Error("unreachable expression kind");
}

namespace {

// Taylor coefficients f^(j)(a)/j! for j < count, in binary64. The
// derivative table here is shared with the symbolic differentiator:
// exp' = exp, ln'(a) = 1/a, sin' = cos, cos' = -sin, sqrt'(a) = 1/(2 sqrt a).
std::vector<double> taylor_coefficients(Builtin fn, double a, int count) {
  std::vector<double> c(static_cast<std::size_t>(count));
  switch (fn) {
    case Builtin::Exp: {
      double fj = std::exp(a);
      double fact = 1.0;
      for (int j = 0; j < count; ++j) {
        c[j] = fj / fact;
        fact *= j + 1;
      }
      break;
    }
    case Builtin::Sin:
    case Builtin::Cos: {
      double s = std::sin(a), k = std::cos(a);
      double cycle[4] = {s, k, -s, -k};  // sin and its successive derivatives
      int phase = fn == Builtin::Sin ? 0 : 1;
      double fact = 1.0;
      for (int j = 0; j < count; ++j) {
        c[j] = cycle[(phase + j) % 4] / fact;
        fact *= j + 1;
      }
      break;
    }
    case Builtin::Ln: {
      if (a <= 0.0) throw DomainError("ln requires a positive appreciable part");
      c[0] = std::log(a);
      double apow = a;
      for (int j = 1; j < count; ++j) {
        c[j] = (j % 2 == 1 ? 1.0 : -1.0) / (j * apow);
        apow *= a;
      }
      break;
    }
    case Builtin::Sqrt: {
      if (a <= 0.0) throw DomainError("sqrt requires a positive appreciable part");
      c[0] = std::sqrt(a);
      // c_j = c_{j-1} * (1/2 - (j-1)) / (j * a)
      for (int j = 1; j < count; ++j) {
        c[j] = c[j - 1] * (0.5 - (j - 1)) / (j * a);
      }
      break;
    }
  }
  return c;
}

LCNumber eval_builtin_lc(Builtin fn, const LCNumber& v) {
  int window = v.window();
  if (!v.is_zero() && v.ord() < 0) {
    throw DomainError(std::string(builtin_name(fn)) + " of an infinite value");
  }
  double a = v.coeff(0).float64();
  std::vector<double> c = taylor_coefficients(fn, a, window);
  LCNumber u = v - LCNumber::from_double(a, window);  // the higher (ord >= 1) part
  if (u.is_zero()) return LCNumber::from_double(c[0], window);
  LCNumber acc = LCNumber::from_double(c[window - 1], window);
  for (int j = window - 2; j >= 0; --j) {
    acc = acc * u + LCNumber::from_double(c[j], window);
  }
  // The true expansion continues past the window.
  return acc.marked_lossy();
}

}  // namespace

LCNumber eval_lc(const ExprPtr& e, const LCNumber& x, Mode mode) {
  if (x.mode() != mode) throw ModeMismatch("evaluation point does not match the requested mode");
  switch (e->kind) {
    case Expr::Kind::Const:
      return mode == Mode::Exact ? LCNumber::from_rational(e->value, x.window())
                                 : LCNumber::from_double(e->value.to_double(), x.window());
    case Expr::Kind::Var: return x;
    case Expr::Kind::Neg: return -eval_lc(e->lhs, x, mode);
    case Expr::Kind::Add: return eval_lc(e->lhs, x, mode) + eval_lc(e->rhs, x, mode);
    case Expr::Kind::Sub: return eval_lc(e->lhs, x, mode) - eval_lc(e->rhs, x, mode);
    case Expr::Kind::Mul: return eval_lc(e->lhs, x, mode) * eval_lc(e->rhs, x, mode);
    case Expr::Kind::Div: {
      LCNumber denom = eval_lc(e->rhs, x, mode);
      if (denom.is_zero()) throw DivisionByZero();
      return eval_lc(e->lhs, x, mode) / denom;
    }
    case Expr::Kind::PowInt: {
      LCNumber base = eval_lc(e->lhs, x, mode);
      if (base.is_zero() && e->exponent < 0) throw DivisionByZero();
      return base.pow(e->exponent);
    }
    case Expr::Kind::Call: {
      if (mode == Mode::Exact) throw TranscendentalInExactMode(builtin_name(e->fn));
      return eval_builtin_lc(e->fn, eval_lc(e->lhs, x, mode));
    }
  }
  throw Error("unreachable expression kind");
}

}  // namespace fictio
