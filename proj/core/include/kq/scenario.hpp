#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "kq/duality.hpp"
#include "kq/dynamics.hpp"
#include "kq/family.hpp"

namespace kq {

/// Log level taken from the KQ_LOG environment variable (error|info|debug).
enum class LogLevel { Error = 0, Info = 1, Debug = 2 };
LogLevel log_level();
void log(LogLevel level, const std::string& message);

/// Parses and validates one scenario object; throws ConfigParse with a
/// field path on any unknown field, bad type, or inconsistent dimension.
void validate_scenario(const nlohmann::json& scenario);

/// Runs one scenario to a JSON report. Numeric failures inside the run
/// surface as kq::Error; config problems as ConfigParse.
nlohmann::json run_scenario(const nlohmann::json& scenario,
                            std::optional<std::uint64_t> seed_override = {});

/// CLI entry points. Exit codes: 0 success, 1 any scenario error,
/// 2 config parse failure.
int run_configs(const std::string& config_path, const std::string& out_dir,
                const std::string& format, std::optional<std::uint64_t> seed_override = {});
int validate_config(const std::string& config_path);

}  // namespace kq
