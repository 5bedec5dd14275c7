#pragma once

#include <optional>
#include <string>

#include "tannaka/model.hpp"

namespace tannaka {

enum ExitCode : int { exit_pass = 0, exit_failure = 1, exit_parse = 2, exit_unsupported = 3 };

struct RunOptions {
  std::optional<std::string> export_path;
  std::size_t bound = default_search_bound;
  std::optional<unsigned long> p;
  std::optional<unsigned> n;
};

struct RunResult {
  int exit_code = exit_pass;
  // {"command", "verdict", "checks": [{"id", "verdict", "violations"}],
  //  "results", "timing"}; everything but "timing" is deterministic.
  json report;
};

// Commands: check, reconstruct, counit, recognize, fl, basechange.
RunResult run_command(const std::string& command, const ModelDocument& doc, const RunOptions& options);
// Parses the file first; parse and unsupported errors become reports too.
RunResult run_file(const std::string& command, const std::string& path, const RunOptions& options);

// A short human-readable rendering of a report.
std::string render_report(const json& report);

}  // namespace tannaka
