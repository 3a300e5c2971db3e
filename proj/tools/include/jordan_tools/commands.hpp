#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace jordan::tools {

/// Exit codes of every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  std::string ring = "q";
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::string instance;
  std::string out;
};

struct RunResult {
  int exit_code = kExitPass;
  std::string json;   ///< the report, newline-terminated; empty on usage errors
  std::string error;  ///< message for usage errors
};

/// Runs one of validate, deform, group, grassmann, geometry on an instance
/// spec held in memory.
RunResult run_command(const RunConfig& config, const std::string& instance_json);

/// Same, reading the instance spec from config.instance.
RunResult run_command(const RunConfig& config);

}  // namespace jordan::tools
