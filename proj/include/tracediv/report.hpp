#pragma once

#include <string>

#include <json.hpp>

#include "tracediv/abelian.hpp"
#include "tracediv/artin_schreier.hpp"
#include "tracediv/criterion.hpp"
#include "tracediv/field_tower.hpp"
#include "tracediv/trace_code.hpp"
#include "tracediv/valuation.hpp"

namespace tracediv {

const char* tool_version();

nlohmann::json to_json(const Valuation& v);
nlohmann::json to_json(const FieldTower& tower);
nlohmann::json to_json(const ExponentTuple& t);
nlohmann::json to_json(const CriterionResult& r);
nlohmann::json to_json(const BruteforceResult& r);
nlohmann::json to_json(const McElieceResult& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const WeightDistribution& d);

std::string element_str(const FieldTower& tower, FieldElement a);

}  // namespace tracediv
