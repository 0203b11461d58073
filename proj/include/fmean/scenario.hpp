#ifndef FMEAN_SCENARIO_HPP
#define FMEAN_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fmean {

// Flag values layered on top of the config file's own options.
struct CliOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  std::optional<double> tol;
};

// One executed command: a machine-readable record (command, resolved config
// echo, result; no timestamps, so identical runs serialize identically), an
// aligned human table, and a CSV rendering.
struct RunResult {
  nlohmann::json structured;
  std::string table;
  std::string csv;
};

// The commands a scenario's "command" field accepts.
const std::vector<std::string>& scenario_commands();

// Executes the scenario described by `config`. Malformed configs and
// unresolved names raise validation_error; numerical failures propagate from
// the dispatched operation.
RunResult run_scenario(const nlohmann::json& config, const CliOverrides& overrides = {});

// Reads, parses, and runs a JSON scenario file.
RunResult run_scenario_file(const std::string& path, const CliOverrides& overrides = {});

// Diagnostics gated by FMEAN_LOG={error,info,debug}; written to stderr so
// stdout stays parseable.
void log_info(const std::string& message);
void log_debug(const std::string& message);

}  // namespace fmean

#endif  // FMEAN_SCENARIO_HPP
