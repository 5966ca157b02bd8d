#include "signorini/signorini.h"

#include <cstdio>
#include <mutex>
#include <string>

#include "signorini/capacity.hpp"
#include "signorini/config.hpp"
#include "signorini/diagnostics.hpp"
#include "signorini/error.hpp"
#include "signorini/experiments.hpp"
#include "signorini/region.hpp"
#include "signorini/solver.hpp"

struct sg_grid {
  signorini::GridPtr grid;
};

struct sg_field {
  signorini::Solution solution;
  signorini::NodeMask region;
  double obstacle = 0.0;
};

struct sg_config {
  signorini::Config config;
};

struct sg_report {
  signorini::Report report;
  std::string json;
};

namespace {

thread_local std::string last_error;

sg_status fail(sg_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
sg_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const signorini::ConfigError& e) {
    return fail(SG_CONFIG_ERROR, e.what());
  } catch (const signorini::DomainError& e) {
    return fail(SG_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SG_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(SG_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(SG_INTERNAL_ERROR, "unknown error");
  }
}

std::mutex log_mutex;

void log_line(const std::string& s) {
  std::lock_guard<std::mutex> lock(log_mutex);
  std::fprintf(stderr, "%s\n", s.c_str());
}

signorini::RunOptions options(const char* out_dir, const signorini::Config& config, int quiet) {
  signorini::RunOptions o;
  o.out = out_dir ? std::string(out_dir) : config.out();
  o.quiet = quiet != 0;
  o.log = log_line;
  return o;
}

}  // namespace

extern "C" {

const char* sg_version(void) { return "1.0.0"; }

const char* sg_last_error(void) { return last_error.c_str(); }

sg_status sg_grid_create(int resolution, sg_grid** out) {
  if (!out) return fail(SG_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  return guarded([&] {
    *out = new sg_grid{signorini::make_grid(resolution)};
    return SG_OK;
  });
}

void sg_grid_destroy(sg_grid* grid) { delete grid; }

int sg_grid_resolution(const sg_grid* grid) { return grid ? grid->grid->n() : 0; }

double sg_grid_spacing(const sg_grid* grid) { return grid ? grid->grid->h() : 0.0; }

size_t sg_grid_interior_count(const sg_grid* grid) { return grid ? grid->grid->report().interior : 0; }

size_t sg_grid_dirichlet_count(const sg_grid* grid) { return grid ? grid->grid->report().dirichlet : 0; }

sg_status sg_solve_obstacle(const sg_grid* grid, const char* region, const char* boundary, double obstacle,
                            const sg_solver_params* params, sg_field** out) {
  if (!grid || !region || !boundary || !out) return fail(SG_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    signorini::SolverParams p;
    if (params) {
      if (params->omega != 0.0) p.omega = params->omega;
      if (params->tol != 0.0) p.tol = params->tol;
      p.max_iter = params->max_iter;
    }
    const auto& g = grid->grid;
    signorini::ObstacleProblem prob;
    prob.grid = g;
    prob.boundary = signorini::evaluate_on_boundary(g, signorini::boundary_function(boundary));
    prob.region = signorini::realize_region(*g, signorini::parse_region(region));
    prob.obstacle = signorini::make_obstacle(g, prob.region, [obstacle](signorini::Vec2) { return obstacle; });
    auto* f = new sg_field{signorini::solve_obstacle(prob, p), prob.region, obstacle};
    *out = f;
    if (!f->solution.report.converged) return fail(SG_NOT_CONVERGED, "iteration limit reached");
    return SG_OK;
  });
}

void sg_field_destroy(sg_field* field) { delete field; }

sg_status sg_field_value(const sg_field* field, int i, int j, double* out) {
  if (!field || !out) return fail(SG_INVALID_ARGUMENT, "NULL argument");
  const auto& g = *field->solution.u.grid;
  if (i < 0 || j < 0 || i >= g.n() || j >= g.n()) return fail(SG_INVALID_ARGUMENT, "node index out of range");
  const std::size_t k = g.index(i, j);
  if (!field->solution.u.valid(k)) return fail(SG_INVALID_ARGUMENT, "node outside the disk");
  *out = field->solution.u[k];
  return SG_OK;
}

sg_status sg_field_solve_info(const sg_field* field, long* iterations, int* converged,
                              double* complementarity_defect) {
  if (!field) return fail(SG_INVALID_ARGUMENT, "NULL argument");
  const auto& r = field->solution.report;
  if (iterations) *iterations = r.iterations;
  if (converged) *converged = r.converged ? 1 : 0;
  if (complementarity_defect) *complementarity_defect = r.complementarity_defect;
  return SG_OK;
}

sg_status sg_field_contact_count(const sg_field* field, size_t* out) {
  if (!field || !out) return fail(SG_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    const auto& u = field->solution.u;
    const double c = field->obstacle;
    const auto psi = signorini::make_obstacle(u.grid, field->region, [c](signorini::Vec2) { return c; });
    *out = signorini::count(signorini::contact_set(u, psi, field->region));
    return SG_OK;
  });
}

sg_status sg_field_frequency(const sg_field* field, double r, double* out) {
  if (!field || !out) return fail(SG_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    const auto n = signorini::almgren_N(field->solution.u, r);
    if (!n) return fail(SG_INVALID_ARGUMENT, "frequency undefined: H(r) below the quadrature floor");
    *out = *n;
    return SG_OK;
  });
}

sg_status sg_field_acf(const sg_field* field, double r, double* out) {
  if (!field || !out) return fail(SG_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    *out = signorini::acf_beta(field->solution.u, r);
    return SG_OK;
  });
}

sg_status sg_field_holder(const sg_field* field, double r_min, double r_max, double* out) {
  if (!field || !out) return fail(SG_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    const auto& g = *field->solution.u.grid;
    *out = signorini::holder_fit(field->solution.u, g.index(g.center(), g.center()), r_min, r_max).exponent;
    return SG_OK;
  });
}

sg_status sg_capacity_disk(double inner, double outer, int resolution, double* out) {
  if (!out) return fail(SG_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] {
    if (!(inner > 0.0 && inner < outer)) throw signorini::ConfigError("need 0 < inner < outer");
    signorini::CapacityQuery q{{0.0, 0.0}, outer, signorini::disk_set({0.0, 0.0}, inner), resolution};
    const auto r = signorini::capacity0(q);
    *out = r.value;
    if (!r.report.converged) return fail(SG_NOT_CONVERGED, "iteration limit reached");
    return SG_OK;
  });
}

sg_status sg_config_create(sg_config** out) {
  if (!out) return fail(SG_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] {
    *out = new sg_config{};
    return SG_OK;
  });
}

sg_status sg_config_load(const char* path, sg_config** out) {
  if (!path || !out) return fail(SG_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    *out = new sg_config{signorini::Config::load(path)};
    return SG_OK;
  });
}

sg_status sg_config_set(sg_config* config, const char* key, const char* value) {
  if (!config || !key || !value) return fail(SG_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    config->config.set(key, value);
    return SG_OK;
  });
}

void sg_config_destroy(sg_config* config) { delete config; }

sg_status sg_run(const char* command, const sg_config* config, const char* out_dir, int quiet, sg_report** out) {
  if (!command || !config || !out) return fail(SG_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    auto* r = new sg_report{signorini::run_command(command, config->config, options(out_dir, config->config, quiet)), {}};
    r->json = r->report.doc.dump(2);
    *out = r;
    return SG_OK;
  });
}

sg_status sg_run_batch(const char* batch_file, const sg_config* overrides, const char* out_dir, int quiet,
                       sg_report** out) {
  if (!batch_file || !out) return fail(SG_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    const signorini::Config none;
    const signorini::Config& c = overrides ? overrides->config : none;
    auto* r = new sg_report{signorini::run_batch(batch_file, c, options(out_dir, c, quiet)), {}};
    r->json = r->report.doc.dump(2);
    *out = r;
    return SG_OK;
  });
}

const char* sg_report_json(const sg_report* report) { return report ? report->json.c_str() : ""; }

int sg_report_exit_code(const sg_report* report) {
  return report ? signorini::exit_code(report->report.status()) : SG_INTERNAL_ERROR;
}

size_t sg_report_check_count(const sg_report* report) { return report ? report->report.checks.size() : 0; }

sg_status sg_report_check(const sg_report* report, size_t i, const char** name, int* pass) {
  if (!report || i >= report->report.checks.size()) return fail(SG_INVALID_ARGUMENT, "check index out of range");
  const auto& c = report->report.checks[i];
  if (name) *name = c.name.c_str();
  if (pass) *pass = c.pass ? 1 : 0;
  return SG_OK;
}

void sg_report_destroy(sg_report* report) { delete report; }

}  // extern "C"
