#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "signorini/config.hpp"

namespace signorini {

using Json = nlohmann::ordered_json;

enum class RunStatus { Pass = 0, CheckFailed = 1, ConfigError = 2, NotConverged = 3 };

struct Check {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double limit = 0.0;
  std::string detail;
};

/// Outcome of one command or experiment. `doc` is what report.json holds.
struct Report {
  Json doc;
  std::vector<Check> checks;
  bool all_converged = true;

  RunStatus status() const;
};

struct RunOptions {
  std::filesystem::path out = "out";
  bool quiet = true;
  /// Progress lines; unused when quiet.
  std::function<void(const std::string&)> log;
};

const std::vector<std::string>& experiment_names();
const std::vector<std::string>& command_names();

/// Runs "solve", "capacity", "frequency", "blowup" or "experiment" (the one
/// named in the config). Writes report.json and the CSV/SVG files into
/// opt.out. Throws ConfigError before any solve when the config is invalid.
Report run_command(const std::string& command, const Config& config, const RunOptions& opt);

/// One config path per line (relative to the batch file; '#' comments).
/// Every entry runs concurrently in opt.out/<config stem>/ with `overrides`
/// applied on top of its own keys.
Report run_batch(const std::filesystem::path& batch_file, const Config& overrides, const RunOptions& opt);

int exit_code(RunStatus s);
std::string to_string(RunStatus s);

}  // namespace signorini
