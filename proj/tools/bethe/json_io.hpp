#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bethe/params.hpp"
#include "bethe/suite.hpp"
#include "bethe/verma.hpp"
#include "bethe/yangian.hpp"

namespace bethe::cli {

using nlohmann::json;

/// "a,b,c" → XiShape. Throws std::invalid_argument on malformed text.
XiShape parse_shape(const std::string& text);

/// Reads {"t1": [...], "t2": [...], "t3": [...], "x": "p/q", "lambda": [4 × "p/q"]}.
/// Missing groups are empty; rationals may be JSON strings or integers.
ParamPoint params_from_json(const json& doc, const XiShape& shape);

json to_json(const Rational& r);
json to_json(const ModuleVector& v);
json to_json(const ParamPoint& p);
json to_json(const CriterionResult& r);

}  // namespace bethe::cli
