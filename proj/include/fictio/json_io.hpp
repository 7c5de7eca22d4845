#pragma once

#include "json.hpp"

#include "fictio/a_track.hpp"
#include "fictio/magnitudes.hpp"

namespace fictio {

/// JSON renderings of the report types. Every numeric value is emitted in
/// its canonical text form (exact rationals, shortest round-trip decimals
/// for floats) so output is byte-stable.
nlohmann::json trace_json(const TlhTrace& trace);
nlohmann::json deriv_report_json(const DerivReport& report);
nlohmann::json tangent_json(const TangentLine& line, const ExprPtr& expr, Mode mode);
nlohmann::json limit_certificate_json(const LimitCertificate& cert);
nlohmann::json track_comparison_json(const TrackComparison& cmp);
nlohmann::json axiom_report_json(const AxiomReport& report);
nlohmann::json horn_demo_json(const HornDemoReport& demo);

/// S-expression rendering of an AST, e.g. ["+", ["^", "x", 2], "3"].
nlohmann::json expr_sexpr_json(const ExprPtr& e);

}  // namespace fictio
