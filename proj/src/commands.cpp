#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <numbers>
#include <sstream>

#include "run.hpp"
#include "signorini/blowup.hpp"
#include "signorini/capacity.hpp"
#include "signorini/diagnostics.hpp"
#include "signorini/error.hpp"
#include "signorini/exact.hpp"
#include "signorini/svg.hpp"

namespace signorini {

namespace detail {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::size_t origin_node(const Grid& g) { return g.index(g.center(), g.center()); }

std::size_t nearest_node(const Grid& g, Vec2 x) {
  const double hw = g.spec().half_width;
  const int i = std::clamp(static_cast<int>(std::lround((x.x1 + hw) / g.h())), 0, g.n() - 1);
  const int j = std::clamp(static_cast<int>(std::lround((x.x2 + hw) / g.h())), 0, g.n() - 1);
  return g.index(i, j);
}

double max_error(const ScalarField& u, const PointFunction& f) {
  double e = 0.0;
  for (std::size_t k = 0; k < u.grid->size(); ++k) {
    if (u.valid(k)) e = std::max(e, std::abs(u[k] - f(u.grid->coord(k))));
  }
  return e;
}

double worst_drop(const std::vector<std::optional<double>>& q) {
  double worst = std::numeric_limits<double>::infinity();
  std::optional<double> prev;
  for (const auto& v : q) {
    if (!v) continue;
    if (prev) worst = std::min(worst, *v - *prev);
    prev = v;
  }
  return worst;
}

double worst_drop(const std::vector<double>& q) {
  std::vector<std::optional<double>> o(q.begin(), q.end());
  return worst_drop(o);
}

std::string label_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

Run::Run(std::string command, Config config, RunOptions opt)
    : command_(std::move(command)), cfg_(std::move(config)), opt_(std::move(opt)) {
  start_ = std::chrono::steady_clock::now();
  params_ = cfg_.solver();
  std::filesystem::create_directories(opt_.out);
  report_.doc["command"] = command_;
  if (command_ == "experiment") report_.doc["experiment"] = cfg_.experiment();
  Json c = Json::object();
  for (const auto& [k, v] : cfg_.entries()) c[k] = v;
  report_.doc["config"] = c;
  report_.doc["solves"] = Json::array();
  report_.doc["results"] = Json::object();
  report_.doc["outputs"] = Json::array();
  report_.doc["checks"] = Json::array();
}

void Run::log(const std::string& line) const {
  if (!opt_.quiet && opt_.log) opt_.log(line);
}

Solution Run::solve(const std::string& label, const GridPtr& grid, const NodeMask& region,
                    const PointFunction& boundary, const PointFunction& obstacle) {
  ObstacleProblem p;
  p.grid = grid;
  p.boundary = evaluate_on_boundary(grid, boundary);
  p.region = region;
  p.obstacle = make_obstacle(grid, region, obstacle);
  const auto t0 = std::chrono::steady_clock::now();
  Solution s = solve_obstacle(p, params_);
  record(label, grid->h(), s.report, seconds_since(t0));
  return s;
}

void Run::record(const std::string& label, double h, const SolveReport& r, double seconds) {
  const double limit = 10.0 * params_.tol / (h * h);
  Json j;
  j["label"] = label;
  j["h"] = h;
  j["iterations"] = r.iterations;
  j["final_update"] = r.final_update;
  j["energy"] = r.energy;
  j["converged"] = r.converged;
  j["complementarity_defect"] = r.complementarity_defect;
  j["complementarity_limit"] = limit;
  j["seconds"] = seconds;
  report_.doc["solves"].push_back(j);
  if (r.converged) {
    ++converged_solves_;
    worst_complementarity_ = std::max(worst_complementarity_, r.complementarity_defect / limit);
  } else {
    report_.all_converged = false;
  }
  log(label + ": " + std::to_string(r.iterations) + " sweeps, " + (r.converged ? "converged" : "NOT converged") +
      ", " + label_number(seconds) + " s");
}

void Run::check(const std::string& name, bool pass, double value, double limit, const std::string& detail) {
  report_.checks.push_back({name, pass, value, limit, detail});
  Json j;
  j["name"] = name;
  j["pass"] = pass;
  j["value"] = value;
  j["limit"] = limit;
  if (!detail.empty()) j["detail"] = detail;
  report_.doc["checks"].push_back(j);
}

void Run::table(const std::string& name, const CsvTable& t) {
  t.write(opt_.out / (name + ".csv"));
  report_.doc["outputs"].push_back(name + ".csv");
}

void Run::plot(const std::string& name, const std::string& document) {
  if (!cfg_.svg()) return;
  svg::write(opt_.out / (name + ".svg"), document);
  report_.doc["outputs"].push_back(name + ".svg");
}

Report Run::finish() {
  if (converged_solves_ > 0) {
    check("complementarity", worst_complementarity_ <= 1.0, worst_complementarity_, 1.0,
          "largest defect over 10 tol / h^2 across converged solves");
  }
  const RunStatus st = report_.status();
  report_.doc["status"] = to_string(st);
  report_.doc["exit_code"] = exit_code(st);
  report_.doc["timings"] = Json{{"total_seconds", seconds_since(start_)}};
  std::ofstream f(opt_.out / "report.json", std::ios::binary);
  if (!f) throw ConfigError("cannot write " + (opt_.out / "report.json").string());
  f << report_.doc.dump(2) << '\n';
  return report_;
}

}  // namespace detail

namespace {

using detail::Run;

svg::Series series_of(const std::string& label, const std::vector<double>& x,
                      const std::vector<std::optional<double>>& y) {
  svg::Series s{label, x, {}};
  for (const auto& v : y) s.y.push_back(v ? *v : std::nan(""));
  return s;
}

/// Solve from the config's region/boundary/obstacle at its resolution.
Solution configured_solve(Run& run, GridPtr& grid, NodeMask& region) {
  const Config& c = run.cfg();
  grid = make_grid(c.resolution());
  region = realize_region(*grid, c.region());
  const double psi = c.obstacle();
  Solution s = run.solve("solve", grid, region, c.boundary(), [psi](Vec2) { return psi; });
  Json& r = run.results();
  r["resolution"] = grid->n();
  r["h"] = grid->h();
  r["region"] = describe(c.region());
  r["region_nodes"] = count(region);
  const ScalarField psi_f = make_obstacle(grid, region, [psi](Vec2) { return psi; });
  r["contact_nodes"] = count(contact_set(s.u, psi_f, region));
  if (auto form = closed_form(c.get("boundary"))) {
    r["max_error_vs_closed_form"] = detail::max_error(s.u, exact::as_function(*form));
  }
  return s;
}

void frequency_outputs(Run& run, const ScalarField& u, const FrequencyProfile& p, std::size_t center_node,
                       const std::string& suffix) {
  run.table("profile" + suffix, profile_table(p));
  run.table("oscillation" + suffix, oscillation_table(u, center_node, p.radii));
  std::vector<std::optional<double>> beta(p.beta.begin(), p.beta.end());
  std::vector<std::optional<double>> osc;
  for (double r : p.radii) osc.push_back(oscillation(u, center_node, r));
  run.plot("N" + suffix, svg::curves("Almgren frequency N(r)", "r", {series_of("N", p.radii, p.N)}, true));
  run.plot("beta" + suffix, svg::curves("ACF frequency beta(r)", "r", {series_of("beta", p.radii, beta)}, true));
  run.plot("osc" + suffix, svg::curves("oscillation osc(r)", "r", {series_of("osc", p.radii, osc)}, true, true));
}

void cmd_solve(Run& run) {
  GridPtr g;
  NodeMask F;
  Solution s = configured_solve(run, g, F);
  run.table("field", field_table(s.u));
  run.plot("field", svg::heatmap(s.u, "u"));
}

void cmd_frequency(Run& run) {
  GridPtr g;
  NodeMask F;
  Solution s = configured_solve(run, g, F);
  const Config& c = run.cfg();
  const Vec2 x0 = c.center();
  const auto p = frequency_profile(s.u, c.radii(*g), x0);
  const std::size_t node = detail::nearest_node(*g, x0);
  frequency_outputs(run, s.u, p, node, "");
  run.plot("field", svg::heatmap(s.u, "u"));

  const double n_drop = detail::worst_drop(p.N);
  run.check("almgren_monotone", n_drop >= -5e-3, n_drop, -5e-3, "smallest consecutive change of N(r)");
  const double slack = 5e-3 * p.beta.back();
  const double b_drop = detail::worst_drop(p.beta);
  run.check("acf_monotone", b_drop >= -slack, b_drop, -slack, "smallest consecutive change of beta(r)");
  const double rmax = std::min(0.25, p.radii.back());
  const auto fit = holder_fit(s.u, node, 8.0 * g->h(), rmax);
  run.results()["holder"] = Json{{"exponent", fit.exponent}, {"constant", fit.constant}, {"r_min", fit.r_min},
                                 {"r_max", fit.r_max}, {"residual", fit.residual}};
}

void cmd_blowup(Run& run) {
  GridPtr g;
  NodeMask F;
  Solution s = configured_solve(run, g, F);
  const Config& c = run.cfg();
  const double r = c.blowup_radius(*g);
  const auto resc = rescale(s.u, r);
  const auto b = classify(resc.field);
  const auto p = frequency_profile(s.u, default_radii(*g));
  Json& j = run.results();
  j["rescaling_radius"] = r;
  j["normalization"] = resc.normalization;
  j["unit_circle_l2"] = resc.unit_circle_l2;
  const double r2 = companion_radius(*g, r);
  j["cauchy_radius"] = r2;
  j["cauchy_gap"] = r2 != r ? rescaling_gap(s.u, r, r2) : 0.0;
  j["kappa_hat"] = b.kappa_hat;
  j["kappa"] = b.kappa_admissible;
  j["amplitude"] = b.amplitude;
  j["profile_residual"] = b.profile_residual;
  j["branch"] = to_string(b.branch);
  j["sign"] = b.sign;
  try {
    j["kappa_from_frequency"] = kappa_from_frequency(p, g->h());
  } catch (const DomainError&) {
    j["kappa_from_frequency"] = nullptr;
  }
  CsvTable t({"kappa", "residual"});
  for (const auto& [k, res] : b.candidate_residuals) t.add({k, res});
  run.table("candidates", t);
  run.plot("rescaled", svg::heatmap(resc.field, "rescaled u_r"));
  run.check("blowup_classified", b.classified, b.profile_residual, 0.5, "best profile residual on the half circle");
  run.check("blowup_sign", b.sign_matches, b.sign, 0.0, "sign agrees with the profile family");
}

void cmd_capacity(Run& run) {
  const Config& c = run.cfg();
  const int res = c.capacity_resolution();
  const double r = c.capacity_radius();
  CapacityQuery q{{0.0, 0.0}, 1.0, disk_set({0.0, 0.0}, r), res};
  const auto t0 = std::chrono::steady_clock::now();
  const auto cap = capacity0(q, run.params().tol);
  run.record("disk", 2.0 / (res - 1), cap.report, detail::seconds_since(t0));
  const double oracle = 2.0 * std::numbers::pi / std::log(1.0 / r);
  const double rel = std::abs(cap.value - oracle) / oracle;
  run.results()["disk_capacity"] = cap.value;
  run.results()["disk_capacity_radial"] = oracle;
  run.check("capacity_disk", rel <= 0.02, rel, 0.02, "relative deviation from the radial minimizer energy");

  const auto g = make_grid(c.resolution());
  const NodeMask F = realize_region(*g, c.region());
  const auto prof = cdc_profile(*g, F, c.center(), c.cdc_radii(), res);
  run.table("cdc", cdc_table(prof));
  const double c0 = prof.empty() ? 0.0 : prof.back().running_min;
  run.results()["c0"] = c0;
  run.check("cdc_positive", c0 > 0.0, c0, 0.0, "smallest capacity over reliable radii");
}

RunStatus worst(RunStatus a, RunStatus b) {
  auto rank = [](RunStatus s) {
    switch (s) {
      case RunStatus::Pass: return 0;
      case RunStatus::CheckFailed: return 1;
      case RunStatus::NotConverged: return 2;
      case RunStatus::ConfigError: return 3;
    }
    return 3;
  };
  return rank(a) >= rank(b) ? a : b;
}

}  // namespace

RunStatus Report::status() const {
  if (doc.contains("status") && doc["status"] == "config-error") return RunStatus::ConfigError;
  if (!all_converged) return RunStatus::NotConverged;
  for (const auto& c : checks) {
    if (!c.pass) return RunStatus::CheckFailed;
  }
  return RunStatus::Pass;
}

int exit_code(RunStatus s) { return static_cast<int>(s); }

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Pass: return "pass";
    case RunStatus::CheckFailed: return "check-failed";
    case RunStatus::ConfigError: return "config-error";
    case RunStatus::NotConverged: return "not-converged";
  }
  return "unknown";
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"solve", "capacity", "frequency", "blowup", "experiment"};
  return names;
}

Report run_command(const std::string& command, const Config& config, const RunOptions& opt) {
  if (std::find(command_names().begin(), command_names().end(), command) == command_names().end()) {
    throw ConfigError("unknown command '" + command + "'");
  }
  Config cfg = config;
  if (command == "experiment") {
    const auto& names = experiment_names();
    if (std::find(names.begin(), names.end(), cfg.experiment()) == names.end()) {
      throw ConfigError("unknown experiment '" + cfg.experiment() + "'");
    }
    detail::apply_experiment_defaults(cfg);
  }
  cfg.validate();
  const Grid probe = Grid::build(GridSpec{cfg.resolution(), 1.0});
  if (command == "frequency" || command == "experiment") cfg.radii(probe);
  if (command == "blowup" && cfg.blowup_radius(probe) < 16.0 * probe.h() * (1.0 - 1e-9)) {
    throw ConfigError("blowup_radius must be at least 16h; raise the resolution");
  }

  Run run(command, cfg, opt);
  if (command == "solve") cmd_solve(run);
  else if (command == "capacity") cmd_capacity(run);
  else if (command == "frequency") cmd_frequency(run);
  else if (command == "blowup") cmd_blowup(run);
  else detail::run_experiment(run);
  return run.finish();
}

Report run_batch(const std::filesystem::path& batch_file, const Config& overrides, const RunOptions& opt) {
  std::ifstream in(batch_file);
  if (!in) throw ConfigError("cannot read batch file " + batch_file.string());
  struct Entry {
    std::string name;
    Config cfg;
  };
  std::vector<Entry> entries;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    const std::filesystem::path path = batch_file.parent_path() / line;
    Config c = Config::load(path);
    for (const auto& key : Config::keys()) {
      if (overrides.is_set(key)) c.set(key, overrides.get(key));
    }
    std::string name = path.stem().string();
    for (const auto& e : entries) {
      if (e.name == name) throw ConfigError("batch lists '" + name + "' twice");
    }
    entries.push_back({name, std::move(c)});
  }
  if (entries.empty()) throw ConfigError("batch file lists no configs");
  // Validate everything before the first solve.
  for (auto& e : entries) {
    Config probe = e.cfg;
    detail::apply_experiment_defaults(probe);
    probe.validate();
  }

  std::vector<std::future<Report>> jobs;
  for (const auto& e : entries) {
    RunOptions o = opt;
    o.out = opt.out / e.name;
    if (o.log) {
      auto log = opt.log;
      const std::string tag = e.name;
      o.log = [log, tag](const std::string& s) { log("[" + tag + "] " + s); };
    }
    jobs.push_back(std::async(std::launch::async, [cfg = e.cfg, o] { return run_command("experiment", cfg, o); }));
  }

  Report batch;
  batch.doc["command"] = "batch";
  batch.doc["runs"] = Json::array();
  RunStatus st = RunStatus::Pass;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Report r = jobs[i].get();
    st = worst(st, r.status());
    batch.doc["runs"].push_back(Json{{"name", entries[i].name}, {"status", to_string(r.status())}});
    for (auto c : r.checks) {
      c.name = entries[i].name + "/" + c.name;
      batch.checks.push_back(c);
    }
    batch.all_converged = batch.all_converged && r.all_converged;
  }
  batch.doc["status"] = to_string(st);
  batch.doc["exit_code"] = exit_code(st);
  std::filesystem::create_directories(opt.out);
  std::ofstream f(opt.out / "batch.json", std::ios::binary);
  f << batch.doc.dump(2) << '\n';
  return batch;
}

}  // namespace signorini
