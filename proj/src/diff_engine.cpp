#include "fictio/diff_engine.hpp"

namespace fictio {

namespace {

LCNumber embed_point(const Rational& x0, Mode mode, int window) {
  return mode == Mode::Exact ? LCNumber::from_rational(x0, window)
                             : LCNumber::from_double(x0.to_double(), window);
}

Coefficient point_coefficient(const Rational& x0, Mode mode) {
  return mode == Mode::Exact ? Coefficient(x0) : Coefficient(x0.to_double());
}

}  // namespace

DerivReport differentiate(const ExprPtr& e, const Rational& x0, Mode mode, int window) {
  LCNumber at = embed_point(x0, mode, window);
  LCNumber shifted = at + LCNumber::eps(1, mode, window);
  LCNumber f1 = eval_lc(e, shifted, mode);
  LCNumber f0 = eval_lc(e, at, mode);
  LCNumber raw = (f1 - f0) * LCNumber::monomial(-1, Coefficient::one(mode), window);
  if (!raw.is_zero() && raw.ord() < 0) throw VerticalTangent(raw);

  DerivReport report;
  report.expr = e;
  report.point = point_coefficient(x0, mode);
  report.raw_quotient = raw;
  report.derivative = raw.coeff(0);
  report.trace = tlh_trace(raw, LCNumber::one(mode, window));
  report.mode = mode;
  return report;
}

Coefficient higher_derivative(const ExprPtr& e, const Rational& x0, int k, Mode mode, int window) {
  if (k < 1) throw DomainError("derivative order must be a positive integer");
  if (k >= window) {
    throw PrecisionWindowExceeded("derivative order " + std::to_string(k) +
                                  " needs a window above " + std::to_string(k));
  }
  LCNumber jet = eval_lc(e, embed_point(x0, mode, window) + LCNumber::eps(1, mode, window), mode);
  Coefficient factorial = mode == Mode::Exact
                              ? Coefficient(Rational::factorial(static_cast<unsigned long>(k)))
                              : Coefficient([k] {
                                  double f = 1.0;
                                  for (int j = 2; j <= k; ++j) f *= j;
                                  return f;
                                }());
  return jet.coeff(k) * factorial;
}

TangentLine tangent_line(const ExprPtr& e, const Rational& x0, Mode mode, int window) {
  DerivReport report = differentiate(e, x0, mode, window);
  Coefficient f0 = eval_lc(e, embed_point(x0, mode, window), mode).coeff(0);
  Coefficient x0c = point_coefficient(x0, mode);
  TangentLine line;
  line.slope = report.derivative;
  line.intercept = f0 - line.slope * x0c;
  line.touch_point = {x0c, f0};
  return line;
}

bool point_symmetry_check(const ExprPtr& e, const Rational& x0, Mode mode, int window) {
  LCNumber at = embed_point(x0, mode, window);
  LCNumber shifted = at + LCNumber::eps(1, mode, window);
  LCNumber f1 = eval_lc(e, shifted, mode);
  LCNumber f0 = eval_lc(e, at, mode);
  // Quotient through (x0, x0+eps), increment +eps ...
  LCNumber forward = (f1 - f0) * LCNumber::eps(1, mode, window).inverse();
  // ... and through (x0+eps, x0), increment -eps.
  LCNumber backward = (f0 - f1) * (-LCNumber::eps(1, mode, window)).inverse();
  if (!forward.is_zero() && forward.ord() < 0) throw VerticalTangent(forward);
  if (forward.is_zero() && backward.is_zero()) return true;
  return gen_equal(forward, backward) && tlh(forward) == tlh(backward);
}

}  // namespace fictio
