#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "signorini/signorini.h"

namespace {

struct Options {
  std::string config;
  std::string out;
  int resolution = 0;
  bool quiet = false;
  std::string experiment;
  std::string batch;
};

int status_exit(sg_status s) {
  switch (s) {
    case SG_OK: return 0;
    case SG_CHECK_FAILED: return 1;
    case SG_NOT_CONVERGED: return 3;
    default: return 2;
  }
}

int fail(sg_status s) {
  std::fprintf(stderr, "signorini: %s\n", sg_last_error());
  return status_exit(s);
}

void print_summary(const sg_report* report) {
  const size_t n = sg_report_check_count(report);
  for (size_t i = 0; i < n; ++i) {
    const char* name = nullptr;
    int pass = 0;
    sg_report_check(report, i, &name, &pass);
    std::printf("%s %s\n", pass ? "PASS" : "FAIL", name);
  }
}

int run(const std::string& command, const Options& o) {
  sg_config* cfg = nullptr;
  sg_status s = o.config.empty() ? sg_config_create(&cfg) : sg_config_load(o.config.c_str(), &cfg);
  if (s != SG_OK) return fail(s);
  if (o.resolution > 0) {
    const std::string r = std::to_string(o.resolution);
    s = sg_config_set(cfg, "resolution", r.c_str());
  }
  if (s == SG_OK && !o.experiment.empty()) s = sg_config_set(cfg, "experiment", o.experiment.c_str());
  if (s != SG_OK) {
    sg_config_destroy(cfg);
    return fail(s);
  }

  sg_report* report = nullptr;
  if (command == "batch") {
    s = sg_run_batch(o.batch.c_str(), cfg, o.out.empty() ? nullptr : o.out.c_str(), o.quiet ? 1 : 0, &report);
  } else {
    s = sg_run(command.c_str(), cfg, o.out.empty() ? nullptr : o.out.c_str(), o.quiet ? 1 : 0, &report);
  }
  sg_config_destroy(cfg);
  if (s != SG_OK) return fail(s);
  if (!o.quiet) print_summary(report);
  const int code = sg_report_exit_code(report);
  sg_report_destroy(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thin obstacle problems on the unit disk: solver, capacities, frequencies, blowups"};
  app.set_version_flag("--version", sg_version());
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config, "key = value configuration file");
  app.add_option("--out", o.out, "output directory (default: the config's out key)");
  app.add_option("--resolution", o.resolution, "grid nodes per axis (odd, >= 33)");
  app.add_flag("--quiet", o.quiet, "no progress or check lines");

  app.add_subcommand("solve", "solve the obstacle problem of the config");
  app.add_subcommand("capacity", "disk capacity and capacity density profile");
  app.add_subcommand("frequency", "Almgren and ACF frequency profiles");
  app.add_subcommand("blowup", "normalized rescaling and profile classification");
  auto* exp = app.add_subcommand("experiment", "run a named experiment");
  exp->add_option("name", o.experiment, "experiment name")->required();
  auto* batch = app.add_subcommand("batch", "run the configs listed in a file concurrently");
  batch->add_option("file", o.batch, "batch file")->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  return run(command, o);
}
