#pragma once

#include <string>

#include <json.hpp>

#include "univalent/analysis.hpp"
#include "univalent/classes.hpp"
#include "univalent/functionals.hpp"
#include "univalent/optimize.hpp"
#include "univalent/schwarzian.hpp"

namespace univalent {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "v1";

/// Complex numbers are [re, im] pairs; series are arrays of them.
Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const TaylorSeries& s);
/// Accepts a bare array of pairs or an object carrying one under "series".
TaylorSeries series_from_json(const Json& j);

Json to_json(const ExteriorFunction& f);
ExteriorFunction exterior_from_json(const Json& j);

Json to_json(const FunctionalSpec& spec);
FunctionalSpec functional_from_json(const Json& j);

Json to_json(const NormPair& n);
Json to_json(const CoveringReport& r);
Json to_json(const EnclosureReport& r);
Json to_json(const SymmetryReport& r);
Json to_json(const NormalizedSolution& s);

Json to_json(const BallSpec& b);
BallSpec ball_from_json(const Json& j);

Json to_json(const Target& t);
Target target_from_json(const Json& j);

Json to_json(const MaximizeConfig& c);
MaximizeConfig maximize_config_from_json(const Json& j);

Json to_json(const ExtremalRun& r);
ExtremalRun extremal_run_from_json(const Json& j);

Json to_json(const ConsistencyReport& r);

/// Parse text; malformed input becomes InvalidArgument.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// Shortest representation that reads back to the same double.
std::string format_double(double v);

}  // namespace univalent
