#include "knotclasp/json_io.hpp"

#include "knotclasp/errors.hpp"

namespace knotclasp {

namespace {

std::vector<Rational> rationals_from(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw PreconditionError(std::string("JSON object lacks array '") + key + "'");
  }
  std::vector<Rational> out;
  for (const auto& item : j.at(key)) out.push_back(rational_from_json(item));
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const StepFunction& f) {
  Json bps = Json::array();
  for (const auto& b : f.breakpoints()) bps.push_back(b.str());
  return Json{{"breakpoints", std::move(bps)}, {"values", f.values()}};
}

Json to_json(const PLFunction& u) {
  Json bps = Json::array();
  Json vals = Json::array();
  for (const auto& b : u.breakpoints()) bps.push_back(b.str());
  for (const auto& v : u.values()) vals.push_back(v.str());
  return Json{{"breakpoints", std::move(bps)}, {"values", std::move(vals)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw PreconditionError("rational must be a \"p/q\" string or an integer");
}

StepFunction step_function_from_json(const Json& j) {
  auto bps = rationals_from(j, "breakpoints");
  if (!j.contains("values") || !j.at("values").is_array()) throw PreconditionError("JSON object lacks 'values'");
  std::vector<long> values;
  for (const auto& v : j.at("values")) {
    if (!v.is_number_integer()) throw PreconditionError("step function values must be integers");
    values.push_back(v.get<long>());
  }
  return StepFunction(std::move(bps), std::move(values));
}

PLFunction pl_function_from_json(const Json& j) {
  return PLFunction(rationals_from(j, "breakpoints"), rationals_from(j, "values"));
}

}  // namespace knotclasp
