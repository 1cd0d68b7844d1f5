#pragma once

#include <json.hpp>

#include "knotclasp/pl_function.hpp"
#include "knotclasp/rational.hpp"
#include "knotclasp/step_function.hpp"

// JSON forms: {"breakpoints": ["1/6", ...], "values": [...]}, rationals as
// "p/q" strings. Step-function values are plain integers.
namespace knotclasp {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Json to_json(const StepFunction& f);
Json to_json(const PLFunction& u);

Rational rational_from_json(const Json& j);
StepFunction step_function_from_json(const Json& j);
PLFunction pl_function_from_json(const Json& j);

}  // namespace knotclasp
