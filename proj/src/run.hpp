#pragma once

#include <chrono>
#include <string>

#include "signorini/csv.hpp"
#include "signorini/experiments.hpp"
#include "signorini/solver.hpp"

namespace signorini::detail {

/// Shared bookkeeping for one command: solves, checks, output files.
class Run {
 public:
  Run(std::string command, Config config, RunOptions opt);

  const Config& cfg() const { return cfg_; }
  const SolverParams& params() const { return params_; }
  Json& results() { return report_.doc["results"]; }

  Solution solve(const std::string& label, const GridPtr& grid, const NodeMask& region,
                 const PointFunction& boundary, const PointFunction& obstacle);
  /// Records a finished solve; every converged one enters the complementarity check.
  void record(const std::string& label, double h, const SolveReport& r, double seconds);
  void check(const std::string& name, bool pass, double value, double limit, const std::string& detail = {});
  void table(const std::string& name, const CsvTable& t);
  void plot(const std::string& name, const std::string& document);
  void log(const std::string& line) const;

  /// Appends the complementarity row, status and timings, writes report.json.
  Report finish();

 private:
  std::string command_;
  Config cfg_;
  RunOptions opt_;
  SolverParams params_;
  Report report_;
  std::chrono::steady_clock::time_point start_;
  double worst_complementarity_ = 0.0;
  int converged_solves_ = 0;
};

double seconds_since(std::chrono::steady_clock::time_point t0);
std::size_t origin_node(const Grid& g);
std::size_t nearest_node(const Grid& g, Vec2 x);
/// max |u - f| over the nodes carrying a value.
double max_error(const ScalarField& u, const PointFunction& f);
/// Smallest consecutive increment q[i+1] - q[i] over the defined entries.
double worst_drop(const std::vector<std::optional<double>>& q);
double worst_drop(const std::vector<double>& q);
std::string label_number(double v);

/// Named experiments, defined in experiments.cpp.
void run_experiment(Run& run);
/// Per-experiment defaults for keys the user did not set.
void apply_experiment_defaults(Config& cfg);

}  // namespace signorini::detail
