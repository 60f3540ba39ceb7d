#pragma once

#include "svet/density_operator.hpp"
#include "svet/oracle.hpp"
#include "svet/svetlichny.hpp"
#include "svet/sweep.hpp"

#include <json.hpp>

#include <string>

namespace svet {

// Density operators serialize as {"dim": 16, "re": [[...]], "im": [[...]]}.
nlohmann::json to_json(const DensityOperator& rho);
// Throws DimensionMismatch when dim != 16 or the arrays are not 16x16, and
// ParseError when fields are missing or non-numeric.
DensityOperator density_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MeasurementSettings& s);
MeasurementSettings settings_from_json(const nlohmann::json& j);

// {"value": ..., "measure": ..., "branch": "coherence|diagonal|numeric"}
// plus "certificate" when present.
nlohmann::json to_json(const SvetlichnyResult& result);

nlohmann::json to_json(const OracleConfig& cfg);
OracleConfig oracle_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OracleOutcome& outcome);

// "name:min:max:steps", e.g. "T:0.001:3:101".
AxisSpec axis_from_string(const std::string& text);
std::string to_string(const AxisSpec& axis);

// JSON mirror of the sweep CLI flags: scenario, n/p/q/m, mass, lambda, omega,
// alpha, T, axis1/axis2 (either "name:min:max:steps" or {name,min,max,steps}),
// audit, threshold, seed, out, workers, tag, oracle {...}. Unknown keys are
// rejected with ParseError so typos cannot silently change a run.
nlohmann::json to_json(const SweepConfig& cfg);
SweepConfig sweep_config_from_json(const nlohmann::json& j);

// File helpers (IoError on failure, ParseError on bad JSON).
nlohmann::json load_json(const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace svet
