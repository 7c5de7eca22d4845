#include "fictio/tlh.hpp"

namespace fictio {

LCNumber tlh(const LCNumber& a) {
  if (a.is_zero()) return a;
  // The leading term is never affected by window truncation, so the kept
  // value is exact even when the input is flagged lossy; the trace keeps
  // the flagged input for auditing.
  return LCNumber::monomial(a.ord(), a.leading_coeff(), a.window());
}

LCNumber tlh_relative(const LCNumber& a, const LCNumber& scale) {
  if (scale.is_zero()) throw DomainError("tlh scale must be nonzero");
  if (a.mode() != scale.mode()) throw ModeMismatch();
  int cut = scale.ord();
  std::vector<Term> kept;
  for (const auto& t : a.terms()) {
    if (t.exp <= cut) kept.push_back(t);
  }
  LCNumber result = LCNumber::zero(a.mode(), a.window());
  for (const auto& t : kept) {
    result = result + LCNumber::monomial(t.exp, t.coeff, a.window());
  }
  return result;
}

TlhTrace tlh_trace(const LCNumber& a, const std::optional<LCNumber>& scale) {
  TlhTrace trace;
  trace.input = a;
  if (scale.has_value()) {
    trace.kept = tlh_relative(a, *scale);
    trace.justification = {TlhJustification::Kind::RelativeToScale, scale->ord()};
    int cut = scale->ord();
    for (const auto& t : a.terms()) {
      if (t.exp > cut) trace.discarded.push_back(t);
    }
  } else {
    trace.kept = tlh(a);
    trace.justification = {TlhJustification::Kind::LeadingOrder, 0};
    bool first = true;
    for (const auto& t : a.terms()) {
      if (first) {
        first = false;
        continue;
      }
      trace.discarded.push_back(t);
    }
  }
  return trace;
}

bool gen_equal(const LCNumber& a, const LCNumber& b) {
  if (a.mode() != b.mode()) throw ModeMismatch();
  LCNumber d = a - b;
  if (d.is_zero()) return true;
  // ord() of zero is the infinite sentinel, so a == 0 or b == 0 falls out
  // as false here unless the values are equal outright.
  return d.ord() > a.ord() && d.ord() > b.ord();
}

}  // namespace fictio
