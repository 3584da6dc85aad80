#pragma once

#include <json.hpp>

#include "eorlicz/catalog.hpp"
#include "eorlicz/norms.hpp"
#include "eorlicz/sobolev.hpp"

namespace eorlicz {

/// All report JSON uses ordered_json with fixed key insertion order, so a
/// given input always serializes to the same bytes.
using Json = nlohmann::ordered_json;

/// Finite values serialize as numbers, +inf as the string "inf" (JSON has no
/// infinity literal).
Json ext_json(ExtReal x);

Json json_of(const Verdict& v);
Json json_of(const CheckConfig& cfg);
Json json_of(const ClassificationReport& report);
Json json_of(const NormResult& result, const CheckConfig& cfg);
Json json_of(const SobolevResult& result, int order, const CheckConfig& cfg);
Json json_of(const FixtureReport& report, bool include_details);
Json json_of(const CatalogReport& report);
Json json_of(const ClosureReport& report);

/// dump(2) plus a trailing newline; the byte format every command emits.
std::string render(const Json& j);

}  // namespace eorlicz
