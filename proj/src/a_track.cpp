#include "fictio/a_track.hpp"

#include <cmath>

namespace fictio {

const char* track_verdict_name(TrackVerdict v) {
  switch (v) {
    case TrackVerdict::ExactMatch: return "exact_match";
    case TrackVerdict::WithinTolerance: return "within_tolerance";
    case TrackVerdict::Mismatch: return "mismatch";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Symbolic differentiation.

namespace {

const Rational kZero(0);
const Rational kOne(1);

bool is_const(const ExprPtr& e, const Rational& q) {
  return e->kind == Expr::Kind::Const && e->value == q;
}

ExprPtr mk_const(Rational q) { return Expr::constant(std::move(q)); }

ExprPtr mk_neg(const ExprPtr& e) {
  if (e->kind == Expr::Kind::Const) return mk_const(-e->value);
  if (e->kind == Expr::Kind::Neg) return e->lhs;
  return Expr::neg(e);
}

ExprPtr mk_add(const ExprPtr& l, const ExprPtr& r) {
  if (is_const(l, kZero)) return r;
  if (is_const(r, kZero)) return l;
  if (l->kind == Expr::Kind::Const && r->kind == Expr::Kind::Const)
    return mk_const(l->value + r->value);
  return Expr::add(l, r);
}

ExprPtr mk_sub(const ExprPtr& l, const ExprPtr& r) {
  if (is_const(r, kZero)) return l;
  if (is_const(l, kZero)) return mk_neg(r);
  if (l->kind == Expr::Kind::Const && r->kind == Expr::Kind::Const)
    return mk_const(l->value - r->value);
  return Expr::sub(l, r);
}

ExprPtr mk_mul(const ExprPtr& l, const ExprPtr& r) {
  if (is_const(l, kZero) || is_const(r, kZero)) return mk_const(kZero);
  if (is_const(l, kOne)) return r;
  if (is_const(r, kOne)) return l;
  if (l->kind == Expr::Kind::Const && r->kind == Expr::Kind::Const)
    return mk_const(l->value * r->value);
  return Expr::mul(l, r);
}

ExprPtr mk_div(const ExprPtr& l, const ExprPtr& r) {
  if (is_const(l, kZero)) return mk_const(kZero);
  if (is_const(r, kOne)) return l;
  return Expr::div(l, r);
}

ExprPtr mk_pow(const ExprPtr& b, long k) {
  if (k == 0) return mk_const(kOne);
  if (k == 1) return b;
  return Expr::pow_int(b, k);
}

}  // namespace

ExprPtr symbolic_derivative(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Const: return mk_const(kZero);
    case Expr::Kind::Var: return mk_const(kOne);
    case Expr::Kind::Neg: return mk_neg(symbolic_derivative(e->lhs));
    case Expr::Kind::Add: return mk_add(symbolic_derivative(e->lhs), symbolic_derivative(e->rhs));
    case Expr::Kind::Sub: return mk_sub(symbolic_derivative(e->lhs), symbolic_derivative(e->rhs));
    case Expr::Kind::Mul:
      return mk_add(mk_mul(symbolic_derivative(e->lhs), e->rhs),
                    mk_mul(e->lhs, symbolic_derivative(e->rhs)));
    case Expr::Kind::Div:
      return mk_div(mk_sub(mk_mul(symbolic_derivative(e->lhs), e->rhs),
                           mk_mul(e->lhs, symbolic_derivative(e->rhs))),
                    mk_pow(e->rhs, 2));
    case Expr::Kind::PowInt: {
      if (e->exponent == 0) return mk_const(kZero);
      ExprPtr inner = symbolic_derivative(e->lhs);
      return mk_mul(mk_mul(mk_const(Rational(e->exponent)), mk_pow(e->lhs, e->exponent - 1)),
                    inner);
    }
    case Expr::Kind::Call: {
      ExprPtr g = e->lhs;
      ExprPtr dg = symbolic_derivative(g);
      switch (e->fn) {
        case Builtin::Exp: return mk_mul(Expr::call(Builtin::Exp, g), dg);
        case Builtin::Ln: return mk_div(dg, g);
        case Builtin::Sin: return mk_mul(Expr::call(Builtin::Cos, g), dg);
        case Builtin::Cos: return mk_mul(mk_neg(Expr::call(Builtin::Sin, g)), dg);
        case Builtin::Sqrt:
          return mk_div(dg, mk_mul(mk_const(Rational(2)), Expr::call(Builtin::Sqrt, g)));
      }
      break;
    }
  }
  throw Error("unreachable expression kind");
}

// ---------------------------------------------------------------------------
// Finite-difference limit certificates.

namespace {

// Sample ratios strictly below 1, spanning the five octaves under delta;
// stored pairs are verified by direct evaluation at delta * ratio.
const Rational kVerifyRatios[] = {Rational(1, 32), Rational(1, 16), Rational(3, 32),
                                  Rational(1, 8),  Rational(3, 16), Rational(1, 4),
                                  Rational(1, 2),  Rational(3, 4)};

struct ExactEval {
  const ExprPtr& e;
  Rational x0;
  Rational f0;
  Rational quotient(const Rational& h) const {
    return (eval_rational(e, x0 + h) - f0) / h;
  }
};

struct FloatEval {
  const ExprPtr& e;
  double x0;
  double f0;
  double quotient(double h) const { return (eval_scalar(e, x0 + h) - f0) / h; }
};

}  // namespace

LimitCertificate limit_derivative(const ExprPtr& e, const Rational& x0, int n_max, Mode mode) {
  if (n_max < 3) throw DomainError("limit schedule needs at least 3 steps");
  LimitCertificate cert;
  cert.mode = mode;

  if (mode == Mode::Exact) {
    ExactEval ev{e, x0, eval_rational(e, x0)};
    std::vector<Rational> h(static_cast<std::size_t>(n_max) + 1), q(h.size());
    for (int n = 1; n <= n_max; ++n) {
      h[n] = Rational::pow2(-n);
      q[n] = ev.quotient(h[n]);
      cert.schedule.emplace_back(Coefficient(h[n]), Coefficient(q[n]));
    }
    // One Richardson level: R_n = 2 q_{n+1} - q_n kills the O(h) error.
    std::vector<Rational> r;
    for (int n = 1; n < n_max; ++n) r.push_back(Rational(2) * q[n + 1] - q[n]);
    std::size_t best = 1;
    Rational best_diff = (r[1] - r[0]).abs();
    for (std::size_t i = 2; i < r.size(); ++i) {
      Rational d = (r[i] - r[i - 1]).abs();
      if (d < best_diff) {
        best_diff = d;
        best = i;
      }
    }
    Rational target = r[best];
    Rational tol = Rational(1, 1000000) * (target.abs() < kOne ? kOne : target.abs());
    if (best_diff > tol) {
      throw NoConvergence("difference quotients do not converge: successive extrapolations differ by more than 1e-6 relative",
                          cert.schedule);
    }
    cert.target = Coefficient(target);
    cert.richardson = Coefficient(target);

    for (long k : {3, 6, 9}) {
      Rational epsilon = Rational(10).pow(k).inverse();
      Rational half_eps = epsilon / Rational(2);
      for (int n = 1; n <= n_max; ++n) {
        bool schedule_ok = true;
        for (int m = n; m <= std::min(n + 8, n_max); ++m) {
          if ((q[m] - target).abs() >= half_eps) {
            schedule_ok = false;
            break;
          }
        }
        if (!schedule_ok) continue;
        bool verified = true;
        for (const Rational& ratio : kVerifyRatios) {
          Rational hh = h[n] * ratio;
          try {
            if ((ev.quotient(hh) - target).abs() >= epsilon) {
              verified = false;
              break;
            }
          } catch (const Error&) {
            verified = false;
            break;
          }
        }
        if (verified) {
          cert.eps_delta_pairs.push_back({std::pow(10.0, -static_cast<double>(k)),
                                          Coefficient(h[n])});
          break;
        }
      }
    }
    return cert;
  }

  FloatEval ev{e, x0.to_double(), 0.0};
  ev.f0 = eval_scalar(e, ev.x0);
  std::vector<double> h(static_cast<std::size_t>(n_max) + 1), q(h.size());
  for (int n = 1; n <= n_max; ++n) {
    h[n] = std::ldexp(1.0, -n);
    q[n] = ev.quotient(h[n]);
    cert.schedule.emplace_back(Coefficient(h[n]), Coefficient(q[n]));
  }
  std::vector<double> r;
  for (int n = 1; n < n_max; ++n) r.push_back(2.0 * q[n + 1] - q[n]);
  std::size_t best = 1;
  double best_diff = std::fabs(r[1] - r[0]);
  for (std::size_t i = 2; i < r.size(); ++i) {
    double d = std::fabs(r[i] - r[i - 1]);
    if (d < best_diff) {
      best_diff = d;
      best = i;
    }
  }
  double target = r[best];
  if (best_diff > 1e-6 * std::max(1.0, std::fabs(target))) {
    throw NoConvergence("difference quotients do not converge: successive extrapolations differ by more than 1e-6 relative",
                        cert.schedule);
  }
  cert.target = Coefficient(target);
  cert.richardson = Coefficient(target);

  for (double epsilon : {1e-3, 1e-6, 1e-9}) {
    for (int n = 1; n <= n_max; ++n) {
      bool schedule_ok = true;
      for (int m = n; m <= std::min(n + 8, n_max); ++m) {
        if (std::fabs(q[m] - target) >= epsilon / 2) {
          schedule_ok = false;
          break;
        }
      }
      if (!schedule_ok) continue;
      bool verified = true;
      for (const Rational& ratio : kVerifyRatios) {
        double hh = h[n] * ratio.to_double();
        try {
          if (std::fabs(ev.quotient(hh) - target) >= epsilon) {
            verified = false;
            break;
          }
        } catch (const Error&) {
          verified = false;
          break;
        }
      }
      if (verified) {
        cert.eps_delta_pairs.push_back({epsilon, Coefficient(h[n])});
        break;
      }
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Track comparison.

namespace {

double capped_relative_difference(double u, double v) {
  return std::fabs(u - v) / std::max({1.0, std::fabs(u), std::fabs(v)});
}

}  // namespace

TrackComparison compare_tracks(const ExprPtr& e, const Rational& x0, Mode mode, int window) {
  TrackComparison out;
  try {
    out.b_result = differentiate(e, x0, mode, window);
  } catch (const Error& err) {
    throw Error(std::string("B-track: ") + err.what());
  }
  out.a_symbolic_expr = symbolic_derivative(e);

  if (mode == Mode::Exact) {
    Rational a_value;
    try {
      a_value = eval_rational(out.a_symbolic_expr, x0);
    } catch (const Error& err) {
      throw Error(std::string("A-track: ") + err.what());
    }
    out.a_symbolic = Coefficient(a_value);
    out.tolerance = 0.0;
    out.verdict = out.b_result.derivative.rational() == a_value ? TrackVerdict::ExactMatch
                                                                : TrackVerdict::Mismatch;
    return out;
  }

  double a_value;
  try {
    a_value = eval_scalar(out.a_symbolic_expr, x0.to_double());
    out.a_limit = limit_derivative(e, x0, kDefaultLimitSteps, Mode::Float);
  } catch (const Error& err) {
    throw Error(std::string("A-track: ") + err.what());
  }
  out.a_symbolic = Coefficient(a_value);
  out.tolerance = kTrackTolerance;
  double b = out.b_result.derivative.float64();
  bool ok = capped_relative_difference(b, a_value) <= kTrackTolerance &&
            capped_relative_difference(b, out.a_limit->target.float64()) <= kTrackTolerance;
  out.verdict = ok ? TrackVerdict::WithinTolerance : TrackVerdict::Mismatch;
  return out;
}

}  // namespace fictio
