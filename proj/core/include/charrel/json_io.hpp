#pragma once

#include <json.hpp>

#include "charrel/groebner.hpp"
#include "charrel/relpoly.hpp"
#include "charrel/zero_cover.hpp"

namespace charrel {

using nlohmann::json;

/// Schema: {"terms":[{"monomial":[["(3)",1],...],"num":[...],"den":[...]}]}
/// with num/den coefficient strings in ascending degree.
json to_json(const RelationPoly& p);
RelationPoly relpoly_from_json(const json& j);

json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const json& j);

json to_json(const AnalysisReport& report);
json to_json(const CoverResult& result);
json to_json(const ScanReport& report);
json to_json(const FamilyEval& ev);

}  // namespace charrel
