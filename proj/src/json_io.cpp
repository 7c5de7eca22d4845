#include "fictio/json_io.hpp"

namespace fictio {

using nlohmann::json;

namespace {

json coefficient_json(const Coefficient& c) { return c.to_string(); }

json lc_json(const LCNumber& x) { return x.to_string(); }

}  // namespace

json trace_json(const TlhTrace& trace) {
  json discarded = json::array();
  for (const auto& t : trace.discarded) {
    discarded.push_back({{"exp", t.exp}, {"coeff", coefficient_json(t.coeff)}});
  }
  json justification;
  if (trace.justification.kind == TlhJustification::Kind::LeadingOrder) {
    justification = {{"kind", "leading_order"}};
  } else {
    justification = {{"kind", "relative_to_scale"}, {"scale_ord", trace.justification.scale_ord}};
  }
  return {{"input", lc_json(trace.input)},
          {"kept", lc_json(trace.kept)},
          {"discarded", discarded},
          {"justification", justification}};
}

json deriv_report_json(const DerivReport& report) {
  return {{"expr", to_string(report.expr)},
          {"point", coefficient_json(report.point)},
          {"mode", mode_name(report.mode)},
          {"raw_quotient", lc_json(report.raw_quotient)},
          {"derivative", coefficient_json(report.derivative)},
          {"trace", trace_json(report.trace)}};
}

json tangent_json(const TangentLine& line, const ExprPtr& expr, Mode mode) {
  return {{"expr", to_string(expr)},
          {"mode", mode_name(mode)},
          {"slope", coefficient_json(line.slope)},
          {"intercept", coefficient_json(line.intercept)},
          {"touch_point",
           {{"x", coefficient_json(line.touch_point.first)},
            {"y", coefficient_json(line.touch_point.second)}}}};
}

json limit_certificate_json(const LimitCertificate& cert) {
  json schedule = json::array();
  for (const auto& [h, q] : cert.schedule) {
    schedule.push_back({{"h", coefficient_json(h)}, {"quotient", coefficient_json(q)}});
  }
  json pairs = json::array();
  for (const auto& p : cert.eps_delta_pairs) {
    pairs.push_back({{"epsilon", float_to_string(p.epsilon)}, {"delta", coefficient_json(p.delta)}});
  }
  return {{"target", coefficient_json(cert.target)},
          {"richardson", coefficient_json(cert.richardson)},
          {"mode", mode_name(cert.mode)},
          {"schedule", schedule},
          {"eps_delta_pairs", pairs},
          {"semantics", "certificate by evaluation"}};
}

json track_comparison_json(const TrackComparison& cmp) {
  json out = {{"b_track", deriv_report_json(cmp.b_result)},
              {"a_symbolic_expr", to_string(cmp.a_symbolic_expr)},
              {"a_symbolic", coefficient_json(cmp.a_symbolic)},
              {"verdict", track_verdict_name(cmp.verdict)}};
  out["a_limit"] = cmp.a_limit ? limit_certificate_json(*cmp.a_limit) : json(nullptr);
  out["tolerance"] = cmp.tolerance == 0.0 ? json(nullptr) : json(float_to_string(cmp.tolerance));
  return out;
}

namespace {

json entry_json(const ReportEntry& e) {
  json out = {{"elements", e.elements}, {"kind", e.kind}};
  if (e.n) out["n"] = *e.n;
  if (e.extra) out["certifier"] = *e.extra;
  return out;
}

}  // namespace

json axiom_report_json(const AxiomReport& report) {
  json witnesses = json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(entry_json(w));
  json counterexamples = json::array();
  for (const auto& c : report.counterexamples) counterexamples.push_back(entry_json(c));
  return {{"axiom", axiom_name(report.axiom)},
          {"verdict", verdict_name(report.verdict)},
          {"bound", report.bound},
          {"checked", report.checked},
          {"witnesses", witnesses},
          {"counterexamples", counterexamples},
          {"note", report.note}};
}

json horn_demo_json(const HornDemoReport& demo) {
  return {{"sampled_acute", demo.sampled_acute},
          {"horn_below_all", demo.horn_below_all},
          {"shown", demo.shown},
          {"e1", axiom_report_json(demo.e1)},
          {"strict_y_less_y_plus_x", demo.strict_y_less_y_plus_x},
          {"lc_gen_equal_collapse", demo.lc_gen_equal_collapse}};
}

json expr_sexpr_json(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Const: return e->value.to_string();
    case Expr::Kind::Var: return "x";
    case Expr::Kind::Neg: return json::array({"neg", expr_sexpr_json(e->lhs)});
    case Expr::Kind::Add:
      return json::array({"+", expr_sexpr_json(e->lhs), expr_sexpr_json(e->rhs)});
    case Expr::Kind::Sub:
      return json::array({"-", expr_sexpr_json(e->lhs), expr_sexpr_json(e->rhs)});
    case Expr::Kind::Mul:
      return json::array({"*", expr_sexpr_json(e->lhs), expr_sexpr_json(e->rhs)});
    case Expr::Kind::Div:
      return json::array({"/", expr_sexpr_json(e->lhs), expr_sexpr_json(e->rhs)});
    case Expr::Kind::PowInt: return json::array({"^", expr_sexpr_json(e->lhs), e->exponent});
    case Expr::Kind::Call:
      return json::array({builtin_name(e->fn), expr_sexpr_json(e->lhs)});
  }
  return nullptr;
}

}  // namespace fictio
