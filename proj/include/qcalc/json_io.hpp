#pragma once

#include "json.hpp"
#include "qcalc/coef_expr.hpp"
#include "qcalc/identities.hpp"
#include "qcalc/mpoly.hpp"
#include "qcalc/qwave.hpp"

namespace qcalc {

using Json = nlohmann::ordered_json;

// CoefExpr:     {"num": [{"s": e, "re": "p/q", "im": "p/q"}, ...], "den": [...]}
// MPoly:        {"vars": [...], "terms": [{"deg": [...], "coef": CoefExpr}, ...]}
// series:       MPoly plus "order"
// WaveSolution: MPoly plus "c" (CoefExpr or "symbolic"), "order" (int or null), "provenance"
// Verdict:      {"id", "range": {"param", "min", "max"}, "status", "residual"?, "ms"}
// Readers throw QError(Parse) on malformed input.

Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const CoefExpr& c);
CoefExpr coef_from_json(const Json& j);

Json to_json(const MPoly& p);
MPoly mpoly_from_json(const Json& j);

Json series_to_json(const MPoly& body, int order);

Json to_json(const WaveSolution& u);
WaveSolution wave_from_json(const Json& j);

Json to_json(const Verdict& v);

/// Parses JSON text, converting parser errors to QError(Parse).
Json parse_json(const std::string& text);

}  // namespace qcalc
