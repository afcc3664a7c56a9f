#pragma once

// Batch scenario runner: parse scenario JSON, dispatch to the toolkit,
// emit a deterministic report. Every float in a report is rendered as a
// 17-significant-digit decimal string so reports round-trip and byte-match
// across runs.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bal/measure.hpp"

namespace bal {

struct RunOptions {
  std::optional<uint64_t> seed;  // overrides the scenario seed
  std::optional<double> eps;     // overrides the scenario tolerance
};

struct RunResult {
  // 0 = pass, 1 = fail verdict, 2 = invalid input
  int exit_code = 2;
  nlohmann::json report;
  std::optional<std::string> csv;  // plot data when the task produces any
};

RunResult run_scenario(const nlohmann::json& scenario, const RunOptions& opts = {});

// Accepts a bundled fixture name or a path to a scenario file.
RunResult run_scenario_ref(const std::string& path_or_name, const RunOptions& opts = {});

std::vector<std::string> fixture_names();
// nullptr when the name is not bundled.
const char* fixture_source(const std::string& name);

nlohmann::json scenario_schema();

// %.17g rendering used for every float in reports.
std::string format17(double v);
// Recursively replaces float values by their 17-digit decimal strings.
nlohmann::json stringify_floats(const nlohmann::json& j);
// Deterministic text form (sorted keys, stringified floats, indent 2).
std::string format_report(const nlohmann::json& report);

}  // namespace bal
