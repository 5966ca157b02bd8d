#include "signorini/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "signorini/error.hpp"

namespace signorini {

namespace {

/// Linear complementarity system for the 5-point operator. Unknowns are
/// stored as contiguous runs along lattice rows and swept in lexicographic
/// order; row k reads 4 u_k - Σ u_nbr = rhs_k subject to u_k >= lower_k.
/// On a ghost-reflected run the node below is replaced by the node above.
struct System {
  struct Run {
    std::size_t begin = 0;
    std::size_t end = 0;
    bool ghost = false;
  };
  std::size_t stride = 0;
  std::vector<Run> runs;
  std::vector<double> rhs;    // h² f, per grid node
  std::vector<double> lower;  // kNoObstacle when unconstrained, per grid node
  std::vector<std::uint8_t> is_unknown;

  std::size_t below(std::size_t k, bool ghost) const { return ghost ? k + stride : k - stride; }
  std::size_t unknowns() const {
    std::size_t c = 0;
    for (const auto& r : runs) c += r.end - r.begin;
    return c;
  }
};

System make_system(const Grid& grid, const std::vector<std::uint8_t>& unknown, int ghost_row) {
  System sys;
  sys.stride = static_cast<std::size_t>(grid.n());
  sys.rhs.assign(grid.size(), 0.0);
  sys.lower.assign(grid.size(), kNoObstacle);
  sys.is_unknown = unknown;
  for (int j = 0; j < grid.n(); ++j) {
    int i = 0;
    while (i < grid.n()) {
      if (!unknown[grid.index(i, j)]) {
        ++i;
        continue;
      }
      const int start = i;
      while (i < grid.n() && unknown[grid.index(i, j)]) ++i;
      sys.runs.push_back({grid.index(start, j), grid.index(i, j), j == ghost_row});
    }
  }
  return sys;
}

double functional(const System& sys, const std::vector<double>& u, double* dirichlet_part) {
  double e = 0.0;
  double src = 0.0;
  const std::size_t n = sys.stride;
  for (const auto& run : sys.runs) {
    const double w = run.ghost ? 0.5 : 1.0;
    for (std::size_t k = run.begin; k < run.end; ++k) {
      double local = 0.0;
      // the ghost run lists the node above twice
      for (std::size_t m : {k - 1, k + 1, sys.below(k, run.ghost), k + n}) {
        const double d = u[k] - u[m];
        local += (sys.is_unknown[m] ? 0.5 : 1.0) * d * d;
      }
      e += w * local;
      src += w * sys.rhs[k] * u[k];
    }
  }
  if (dirichlet_part) *dirichlet_part = e;
  return e - 2.0 * src;
}

double complementarity(const System& sys, const std::vector<double>& u, double h) {
  double worst = 0.0;
  const double inv_h2 = 1.0 / (h * h);
  const std::size_t n = sys.stride;
  for (const auto& run : sys.runs) {
    for (std::size_t k = run.begin; k < run.end; ++k) {
      const double res =
          (4.0 * u[k] - u[k - 1] - u[k + 1] - u[sys.below(k, run.ghost)] - u[k + n] - sys.rhs[k]) * inv_h2;
      double m = res;
      if (sys.lower[k] > kNoObstacle) m = std::min(u[k] - sys.lower[k], res);
      worst = std::max(worst, std::abs(m));
    }
  }
  return worst;
}

SolveReport run_psor(const System& sys, std::vector<double>& u, const Grid& grid, const SolverParams& params) {
  params.validate();
  SolveReport rep;
  const long limit = params.iteration_limit(grid);
  const double omega = params.omega;
  const std::size_t n = sys.stride;
  const double* rhs = sys.rhs.data();
  const double* lower = sys.lower.data();
  double* v = u.data();

  for (const auto& run : sys.runs) {
    for (std::size_t k = run.begin; k < run.end; ++k) v[k] = std::max(v[k], lower[k]);
  }
  if (params.record_energy) rep.energy_history.push_back(functional(sys, u, nullptr));

  // Sweep in the same order over pieces that are uniformly constrained or
  // free, so the inner loops carry no per-node branching on the obstacle.
  struct Piece {
    std::size_t begin, end;
    std::ptrdiff_t down;
    bool constrained;
  };
  std::vector<Piece> pieces;
  bool has_source = false;
  for (const auto& run : sys.runs) {
    const std::ptrdiff_t down = run.ghost ? static_cast<std::ptrdiff_t>(n) : -static_cast<std::ptrdiff_t>(n);
    for (std::size_t k = run.begin; k < run.end; ++k) {
      has_source = has_source || rhs[k] != 0.0;
      const bool c = lower[k] > kNoObstacle;
      if (k == run.begin || pieces.back().constrained != c) {
        pieces.push_back({k, k + 1, down, c});
      } else {
        pieces.back().end = k + 1;
      }
    }
  }

  double update = sys.runs.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  long it = 0;
  while (it < limit && !sys.runs.empty()) {
    ++it;
    update = 0.0;
    for (const auto& p : pieces) {
      if (p.constrained) {
        for (std::size_t k = p.begin; k < p.end; ++k) {
          const double gs = 0.25 * (v[k - 1] + v[k + 1] + v[k + p.down] + v[k + n] + rhs[k]);
          const double old = v[k];
          const double next = std::max(old + omega * (gs - old), lower[k]);
          v[k] = next;
          update = std::max(update, std::abs(next - old));
        }
      } else if (has_source) {
        for (std::size_t k = p.begin; k < p.end; ++k) {
          const double delta = omega * (0.25 * (v[k - 1] + v[k + 1] + v[k + p.down] + v[k + n] + rhs[k]) - v[k]);
          v[k] += delta;
          update = std::max(update, std::abs(delta));
        }
      } else {
        for (std::size_t k = p.begin; k < p.end; ++k) {
          const double delta = omega * (0.25 * (v[k - 1] + v[k + 1] + v[k + p.down] + v[k + n]) - v[k]);
          v[k] += delta;
          update = std::max(update, std::abs(delta));
        }
      }
    }
    if (params.record_energy) rep.energy_history.push_back(functional(sys, u, nullptr));
    if (update <= params.tol) break;
  }
  rep.iterations = it;
  rep.final_update = update;
  rep.converged = update <= params.tol;
  functional(sys, u, &rep.energy);
  rep.complementarity_defect = complementarity(sys, u, grid.h());
  return rep;
}

void require_same_lattice(const Grid& grid, const ScalarField& f, const char* what) {
  if (!f.grid || !f.grid->same_lattice(grid) || f.values.size() != grid.size()) {
    throw ConfigError(std::string(what) + " is not defined on the problem grid");
  }
}

void require_mask(const Grid& grid, const NodeMask& mask, const char* what) {
  if (mask.size() != grid.size()) throw ConfigError(std::string(what) + " mask size does not match the grid");
}

// Unknowns are the interior nodes; every 4-neighbour is interior or Dirichlet.
System disk_system(const Grid& grid) { return make_system(grid, grid.interior_mask(), -1); }

}  // namespace

void SolverParams::validate() const {
  if (!(omega > 0.0 && omega < 2.0)) throw ConfigError("relaxation factor omega must lie in (0, 2)");
  if (!(tol > 0.0)) throw ConfigError("solver tolerance must be positive");
  if (max_iter < 0) throw ConfigError("max_iter must be positive (0 selects the default)");
}

double optimal_omega(const Grid& grid) {
  constexpr double kJ01 = 2.404825557695773;  // first zero of J0
  const double lambda = kJ01 * kJ01 / (grid.radius() * grid.radius());
  const double mu = 1.0 - 0.25 * grid.h() * grid.h() * lambda;
  return 2.0 / (1.0 + std::sqrt(1.0 - mu * mu));
}

ScalarField make_obstacle(const GridPtr& grid, const NodeMask& region, const PointFunction& psi) {
  require_mask(*grid, region, "region");
  ScalarField f(grid, kNoObstacle);
  for (std::size_t k = 0; k < grid->size(); ++k) {
    if (region[k]) f[k] = psi(grid->coord(k));
  }
  return f;
}

Solution solve_obstacle(const ObstacleProblem& p, const SolverParams& params) {
  if (!p.grid) throw ConfigError("obstacle problem has no grid");
  const Grid& grid = *p.grid;
  require_same_lattice(grid, p.boundary, "boundary data");
  require_same_lattice(grid, p.obstacle, "obstacle");
  require_mask(grid, p.region, "region");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (p.region[k] && !grid.interior(k)) throw ConfigError("obstacle region must lie in the interior");
    if (p.region[k] && !std::isfinite(p.obstacle[k])) throw ConfigError("obstacle must be finite on the region");
    if (!p.region[k] && p.obstacle[k] > kNoObstacle) throw ConfigError("obstacle set outside the region");
    if (grid.dirichlet(k) && !std::isfinite(p.boundary[k])) throw ConfigError("boundary data must be finite");
  }
  params.validate();

  System sys = disk_system(grid);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (p.region[k]) sys.lower[k] = p.obstacle[k];
  }
  Solution s{ScalarField(p.grid, 0.0), {}};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (grid.dirichlet(k)) s.u[k] = p.boundary[k];
  }
  s.report = run_psor(sys, s.u.values, grid, params);
  return s;
}

Solution solve_dirichlet(const GridPtr& grid, const ScalarField& boundary, const ScalarField& source,
                         const SolverParams& params) {
  if (!grid) throw ConfigError("dirichlet problem has no grid");
  require_same_lattice(*grid, boundary, "boundary data");
  require_same_lattice(*grid, source, "source");
  params.validate();
  System sys = disk_system(*grid);
  const double h2 = grid->h() * grid->h();
  for (std::size_t k = 0; k < grid->size(); ++k) {
    if (grid->interior(k)) sys.rhs[k] = h2 * source[k];
  }
  Solution s{ScalarField(grid, 0.0), {}};
  for (std::size_t k = 0; k < grid->size(); ++k) {
    if (grid->dirichlet(k)) s.u[k] = boundary[k];
  }
  s.report = run_psor(sys, s.u.values, *grid, params);
  return s;
}

Solution solve_mixed_bvp(const MixedBVPProblem& p, const SolverParams& params) {
  if (!p.grid) throw ConfigError("mixed problem has no grid");
  const Grid& grid = *p.grid;
  require_same_lattice(grid, p.boundary, "boundary data");
  require_same_lattice(grid, p.source, "source");
  require_mask(grid, p.dirichlet_line, "dirichlet line");
  params.validate();
  const int c = grid.center();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (p.dirichlet_line[k] && (grid.row(k) != c || !grid.interior(k))) {
      throw ConfigError("dirichlet line must consist of interior nodes on the row x2 = 0");
    }
  }

  std::vector<std::uint8_t> unknown(grid.size(), 0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (grid.row(k) >= c && grid.interior(k) && !p.dirichlet_line[k]) unknown[k] = 1;
  }
  System sys = make_system(grid, unknown, c);
  const double h2 = grid.h() * grid.h();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (unknown[k]) sys.rhs[k] = h2 * p.source[k];
  }

  Solution s{ScalarField(p.grid, 0.0), {}};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (grid.row(k) < c) continue;
    if (grid.dirichlet(k) || p.dirichlet_line[k]) {
      if (!std::isfinite(p.boundary[k])) throw ConfigError("mixed boundary data must be finite");
      s.u[k] = p.boundary[k];
    }
  }
  s.report = run_psor(sys, s.u.values, grid, params);
  for (int j = 0; j < c; ++j) {
    for (int i = 0; i < grid.n(); ++i) s.u[grid.index(i, j)] = s.u[grid.index(i, 2 * c - j)];
  }
  return s;
}

double smooth_cutoff(double r, double inner, double outer) {
  const double t = (r - inner) / (outer - inner);
  if (t <= 0.0) return 1.0;
  if (t >= 1.0) return 0.0;
  const auto f = [](double s) { return std::exp(-1.0 / s); };
  return f(1.0 - t) / (f(1.0 - t) + f(t));
}

Extension extend_obstacle(const ScalarField& u, const SolverParams& params,
                          const std::function<double(double)>& cutoff) {
  if (!u.grid) throw ConfigError("extension input has no grid");
  const Grid& grid = *u.grid;
  const auto eta = cutoff ? cutoff : [](double r) { return smooth_cutoff(r); };
  Extension ext;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (grid.active(k)) ext.sup_norm = std::max(ext.sup_norm, std::abs(u[k]));
  }
  MixedBVPProblem mp;
  mp.grid = u.grid;
  mp.dirichlet_line.assign(grid.size(), 0);
  mp.boundary = ScalarField(u.grid, 0.0);
  mp.source = ScalarField(u.grid, 0.0);
  const int c = grid.center();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Vec2 x = grid.coord(k);
    if (grid.row(k) == c && grid.interior(k) && x.x1 <= 0.0) mp.dirichlet_line[k] = 1;
    if (mp.dirichlet_line[k] || (grid.dirichlet(k) && grid.row(k) >= c)) {
      mp.boundary[k] = -ext.sup_norm * (1.0 - eta(norm(x)));
    }
  }
  Solution s = solve_mixed_bvp(mp, params);
  ext.psi_bar = std::move(s.u);
  ext.report = std::move(s.report);
  return ext;
}

double comparison_check(const ScalarField& a, const ScalarField& b) {
  if (!a.grid || !b.grid || !a.grid->same_lattice(*b.grid) || a.grid->radius() != b.grid->radius()) {
    throw ConfigError("comparison of fields on different grids");
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < a.grid->size(); ++k) {
    if (a.grid->active(k)) worst = std::max(worst, a[k] - b[k]);
  }
  return worst;
}

double discrete_laplacian(const ScalarField& u, std::size_t k) {
  const Grid& g = *u.grid;
  if (!g.interior(k)) throw DomainError("discrete Laplacian needs an interior node");
  const std::size_t n = static_cast<std::size_t>(g.n());
  return (u[k - 1] + u[k + 1] + u[k - n] + u[k + n] - 4.0 * u[k]) / (g.h() * g.h());
}

double dirichlet_energy_total(const ScalarField& u) {
  const Grid& g = *u.grid;
  double e = 0.0;
  for (int j = 0; j < g.n(); ++j) {
    for (int i = 0; i < g.n(); ++i) {
      const std::size_t k = g.index(i, j);
      if (!g.active(k)) continue;
      if (i + 1 < g.n()) {
        const std::size_t r = k + 1;
        if (g.active(r) && (g.interior(k) || g.interior(r))) e += (u[k] - u[r]) * (u[k] - u[r]);
      }
      if (j + 1 < g.n()) {
        const std::size_t t = k + g.n();
        if (g.active(t) && (g.interior(k) || g.interior(t))) e += (u[k] - u[t]) * (u[k] - u[t]);
      }
    }
  }
  return e;
}

}  // namespace signorini
