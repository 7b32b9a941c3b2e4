#pragma once

// Verification pipeline over a scenario and its JSON / text reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "paperlab/error.hpp"
#include "paperlab/scenario.hpp"

namespace paperlab {

inline constexpr int kReportSchemaVersion = 1;

// process exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResourceCap = 3;
inline constexpr int kExitOutput = 4;

struct VerifyOptions {
  std::optional<std::uint32_t> max_degree;  // default_degree_bound when unset
  bool stretch = false;                     // run the T^H pipeline beyond p = 2, d = 3
};

struct Check {
  std::string name;
  nlohmann::json expected;
  nlohmann::json computed;
  bool match = false;
};

enum class StageStatus { kOk, kError, kSkipped };

struct Stage {
  std::string name;
  StageStatus status = StageStatus::kOk;
  std::optional<ErrorCode> error;
  std::string message;
  std::vector<Check> checks;
  nlohmann::json facts = nlohmann::json::object();
  double seconds = 0.0;

  const Check* find(const std::string& check) const;
};

struct ScenarioReport {
  std::uint32_t p = 0;
  std::size_t d = 0;
  std::uint32_t max_degree = 0;
  bool stretch = false;
  nlohmann::json scenario;  // echo: parameters and group generators
  std::vector<Stage> stages;

  const Stage* stage(const std::string& name) const;
  std::size_t check_count() const;
  std::size_t mismatch_count() const;
  std::size_t error_count() const;
  /// Every check matched and no stage failed.
  bool all_match() const;
  int exit_code() const;
};

/// Runs the group, R and S stages in order. A failing stage is recorded with
/// its error code and does not stop later stages.
ScenarioReport run_verification(const Scenario& scenario, const VerifyOptions& options = {});

/// Timings sit under the top-level "timings" key.
nlohmann::json report_to_json(const ScenarioReport& report);
/// Copy of a JSON report without the "timings" key.
nlohmann::json without_timings(nlohmann::json report);

enum class ReportFormat { kJson, kText };

std::string render_report(const ScenarioReport& report, ReportFormat format);

/// Writes to `path`, or to stdout when the path is empty. Throws
/// Error(kIo) with the system message when the file cannot be written.
void emit_report(const ScenarioReport& report, ReportFormat format, const std::string& path);

}  // namespace paperlab
