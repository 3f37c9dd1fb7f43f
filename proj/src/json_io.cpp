#include "qcalc/json_io.hpp"

#include "qcalc/error.hpp"

namespace qcalc {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw QError(ErrorKind::Parse, "malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing \"") + key + "\"");
  return j.at(key);
}

mpq_class rational_field(const Json& j, const char* key) {
  if (!j.contains(key)) return 0;
  const Json& v = j.at(key);
  if (!v.is_string()) malformed(std::string("\"") + key + "\" must be a rational string");
  return parse_rational(v.get<std::string>());
}

int int_value(const Json& v, const char* what) {
  if (!v.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return v.get<int>();
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term = {{"s", e}, {"re", rational_to_string(c.re())}};
    if (!c.is_real()) term["im"] = rational_to_string(c.im());
    out.push_back(term);
  }
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) malformed("Laurent polynomial must be an array");
  LaurentPoly out;
  for (const auto& term : j) {
    if (!term.is_object()) malformed("Laurent term must be an object");
    int e = int_value(field(term, "s"), "\"s\"");
    out += LaurentPoly::monomial(GaussianRational(rational_field(term, "re"), rational_field(term, "im")), e);
  }
  return out;
}

Json to_json(const CoefExpr& c) { return {{"num", to_json(c.num())}, {"den", to_json(c.den())}}; }

CoefExpr coef_from_json(const Json& j) {
  LaurentPoly num = laurent_from_json(field(j, "num"));
  LaurentPoly den = j.contains("den") ? laurent_from_json(j.at("den")) : LaurentPoly(GaussianRational(1));
  if (den.is_zero()) malformed("zero denominator");
  return {num, den};
}

Json to_json(const MPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"deg", e}, {"coef", to_json(c)}});
  return {{"vars", p.vars()}, {"terms", terms}};
}

MPoly mpoly_from_json(const Json& j) {
  const Json& vars_json = field(j, "vars");
  if (!vars_json.is_array()) malformed("\"vars\" must be an array");
  std::vector<std::string> vars;
  for (const auto& v : vars_json) {
    if (!v.is_string()) malformed("variable names must be strings");
    vars.push_back(v.get<std::string>());
  }
  MPoly out(vars);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("\"terms\" must be an array");
  for (const auto& term : terms) {
    const Json& deg = field(term, "deg");
    if (!deg.is_array() || deg.size() != vars.size()) malformed("\"deg\" must list one exponent per variable");
    Exponents e;
    for (const auto& d : deg) e.push_back(int_value(d, "exponent"));
    try {
      out.add_term(e, coef_from_json(field(term, "coef")));
    } catch (const QError& err) {
      if (err.kind() == ErrorKind::Parse) throw;
      malformed(err.what());
    }
  }
  return out;
}

Json series_to_json(const MPoly& body, int order) {
  Json out = to_json(body);
  out["order"] = order;
  return out;
}

Json to_json(const WaveSolution& u) {
  Json out = to_json(u.body);
  out["c"] = u.c.is_symbolic() ? Json("symbolic") : to_json(*u.c.value());
  out["order"] = u.order ? Json(*u.order) : Json(nullptr);
  out["provenance"] = provenance_name(u.provenance);
  return out;
}

WaveSolution wave_from_json(const Json& j) {
  WaveSolution u;
  u.body = mpoly_from_json(j);
  const Json& c = field(j, "c");
  if (c.is_string()) {
    if (c.get<std::string>() != "symbolic") malformed("\"c\" must be \"symbolic\" or a coefficient");
    u.c = Speed::symbolic();
  } else {
    CoefExpr value = coef_from_json(c);
    if (value.is_zero()) malformed("\"c\" must be nonzero");
    u.c = Speed::exact(value);
  }
  if (j.contains("order") && !j.at("order").is_null()) u.order = int_value(j.at("order"), "\"order\"");
  if (j.contains("provenance")) {
    if (!j.at("provenance").is_string()) malformed("\"provenance\" must be a string");
    u.provenance = provenance_from_name(j.at("provenance").get<std::string>());
  }
  return u;
}

Json to_json(const Verdict& v) {
  Json out = {{"id", v.id},
              {"range", {{"param", v.range.param}, {"min", v.range.min}, {"max", v.range.max}}},
              {"status", v.verified() ? "verified" : "failed"}};
  if (v.failing_value) out["failing_value"] = *v.failing_value;
  if (v.failing_form) out["failing_form"] = *v.failing_form;
  if (v.residual) out["residual"] = to_json(*v.residual);
  out["ms"] = v.elapsed_ms;
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw QError(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace qcalc
