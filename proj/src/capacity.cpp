#include "signorini/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "signorini/diagnostics.hpp"
#include "signorini/error.hpp"

namespace signorini {

CapacityResult capacity0(const GridPtr& grid, const NodeMask& condenser, const SolverParams& params) {
  if (!grid) throw ConfigError("capacity query has no grid");
  const Grid& g = *grid;
  if (condenser.size() != g.size()) throw ConfigError("condenser mask size does not match the grid");
  const std::size_t n = static_cast<std::size_t>(g.n());
  bool any = false;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (!condenser[k]) continue;
    if (!g.interior(k)) throw ConfigError("condenser must lie in the interior of the shell");
    if (g.dirichlet(k - 1) || g.dirichlet(k + 1) || g.dirichlet(k - n) || g.dirichlet(k + n)) {
      throw ConfigError("condenser touches the boundary layer of the shell");
    }
    any = true;
  }
  CapacityResult res;
  if (!any) {
    res.empty_condenser = true;
    res.report.converged = true;
    return res;
  }
  ObstacleProblem p;
  p.grid = grid;
  p.boundary = ScalarField(grid, 0.0);
  p.region = condenser;
  p.obstacle = make_obstacle(grid, condenser, [](Vec2) { return 1.0; });
  Solution s = solve_obstacle(p, params);
  res.value = s.report.energy;
  res.report = std::move(s.report);
  return res;
}

SolverParams capacity_params(const Grid& subgrid, double tol) {
  SolverParams p;
  p.omega = optimal_omega(subgrid);
  p.tol = tol;
  return p;
}

CapacityResult capacity0(const CapacityQuery& q, double tol) {
  if (!(q.radius > 0.0)) throw ConfigError("capacity shell radius must be positive");
  if (!q.condenser) throw ConfigError("capacity query has no condenser");
  const GridPtr grid = make_grid(q.resolution);
  NodeMask mask(grid->size(), 0);
  for (std::size_t k = 0; k < grid->size(); ++k) {
    if (!grid->interior(k)) continue;
    const Vec2 z = grid->coord(k);
    if (q.condenser({q.center.x1 + q.radius * z.x1, q.center.x2 + q.radius * z.x2})) mask[k] = 1;
  }
  return capacity0(grid, mask, capacity_params(*grid, tol));
}

std::function<bool(Vec2)> disk_set(Vec2 center, double radius) {
  return [center, radius](Vec2 x) {
    return std::hypot(x.x1 - center.x1, x.x2 - center.x2) <= radius * (1.0 + 1e-12);
  };
}

std::function<bool(Vec2)> region_set(ObstacleRegion region) {
  return [member = RegionMembership(std::move(region))](Vec2 x) { return member(x); };
}

namespace {

double ball_capacity(const RegionMembership& member, Vec2 x0, double r, int sub_resolution) {
  CapacityQuery q;
  q.center = x0;
  q.radius = 2.0 * r;
  q.resolution = sub_resolution;
  q.condenser = [&member, x0, r](Vec2 y) {
    return std::hypot(y.x1 - x0.x1, y.x2 - x0.x2) <= r * (1.0 + 1e-12) && member(y);
  };
  return capacity0(q).value;
}

void require_shell_inside(Vec2 x0, double r) {
  if (!(2.0 * r < 1.0 - norm(x0))) throw DomainError("shell B_2r(x0) leaves the unit disk");
}

}  // namespace

std::vector<CdcSample> cdc_profile(const Grid& grid, const NodeMask& set, Vec2 x0,
                                   const std::vector<double>& radii, int sub_resolution) {
  if (set.size() != grid.size()) throw ConfigError("mask size does not match the grid");
  const RegionMembership member(region::Explicit{grid.spec(), set});
  std::vector<CdcSample> out;
  double running = std::numeric_limits<double>::infinity();
  for (double r : radii) {
    require_shell_inside(x0, r);
    CdcSample s;
    s.r = r;
    s.reliable = r >= 4.0 * grid.h();
    if (s.reliable) {
      s.capacity = ball_capacity(member, x0, r, sub_resolution);
      running = std::min(running, s.capacity);
    }
    s.running_min = std::isfinite(running) ? running : 0.0;
    out.push_back(s);
  }
  return out;
}

std::vector<MazyaSample> mazya_ratio(const ScalarField& u, const ScalarField& psi, const NodeMask& region,
                                     Vec2 x0, const std::vector<double>& radii, int sub_resolution) {
  const Grid& g = *u.grid;
  const NodeMask contact = contact_set(u, psi, region);
  const RegionMembership member(region::Explicit{g.spec(), contact});
  std::vector<MazyaSample> out;
  for (double r : radii) {
    require_shell_inside(x0, r);
    MazyaSample s;
    s.r = r;
    bool touches = false;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (!u.valid(k)) continue;
      const Vec2 x = g.coord(k);
      const double d = std::hypot(x.x1 - x0.x1, x.x2 - x0.x2);
      if (d <= 0.5 * r) s.sup_half = std::max(s.sup_half, std::abs(u[k]));
      if (contact[k] && d <= r) touches = true;
    }
    if (!touches) {
      s.defined = false;
      out.push_back(s);
      continue;
    }
    s.capacity = ball_capacity(member, x0, r, sub_resolution);
    s.ratio = s.sup_half * std::sqrt(s.capacity) / std::sqrt(r);
    out.push_back(s);
  }
  return out;
}

double mazya_log_slope(const std::vector<MazyaSample>& samples) {
  std::vector<double> lx, ly;
  for (const auto& s : samples) {
    if (!s.defined || !(s.ratio > 0.0)) continue;
    lx.push_back(std::log(s.r));
    ly.push_back(std::log(s.ratio));
  }
  return fit_line(lx, ly).slope;
}

}  // namespace signorini
