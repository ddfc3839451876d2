#pragma once

// Batch driver: JSON config + command -> Report + exit code.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qalg::cli {

struct CheckEntry {
  std::string name;
  std::string status;  // pass | fail | skipped
  std::string detail;

  bool operator==(const CheckEntry&) const = default;
};

struct Report {
  nlohmann::json spec = nlohmann::json::object();
  std::vector<CheckEntry> checks;
  nlohmann::json values = nlohmann::json::object();
  long long elapsed_ms = 0;

  bool failed() const;
  bool operator==(const Report&) const = default;
};

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string to_text(const Report& r);

struct RunOptions {
  std::vector<std::string> args;
  int height = 3;
  std::optional<double> budget_seconds;
  std::uint64_t seed = 20240611;
};

struct RunResult {
  Report report;
  int exit_code = 0;  // 0 pass, 1 failure or indeterminate, 2 usage/config error
};

inline constexpr const char* kCommands[] = {"nf", "mul", "verify", "skew", "growth", "dim", "bound", "report"};

RunResult run(const nlohmann::json& config, const std::string& command, const RunOptions& options = {});

/// Parses config text first; malformed JSON is a config error (exit 2).
RunResult run_text(const std::string& config_text, const std::string& command, const RunOptions& options = {});

}  // namespace qalg::cli
