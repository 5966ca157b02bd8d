#pragma once

#include <functional>
#include <vector>

#include "signorini/grid.hpp"
#include "signorini/region.hpp"
#include "signorini/solver.hpp"

namespace signorini {

struct CapacityResult {
  double value = 0.0;
  bool empty_condenser = false;  ///< A was empty; value is 0
  SolveReport report;
};

/// cap₀(A; B) with B the grid's own disk: energy of the minimizer v with
/// v = 0 on the Dirichlet layer and v >= 1 on A. A may not touch the
/// Dirichlet layer (ConfigError).
CapacityResult capacity0(const GridPtr& grid, const NodeMask& condenser, const SolverParams& params);

/// Parameters for a capacity solve on the recentred sub-grid. A zero
/// omega/max_iter selects the sub-grid's optimal relaxation and default limit.
SolverParams capacity_params(const Grid& subgrid, double tol = 1e-9);

/// Condenser A given as a physical point set, shell B = B_radius(center).
/// Solved on a dedicated sub-grid of `resolution` nodes per axis mapped onto B.
struct CapacityQuery {
  Vec2 center;
  double radius = 1.0;
  std::function<bool(Vec2)> condenser;
  int resolution = 257;
};

CapacityResult capacity0(const CapacityQuery& query, double tol = 1e-9);

/// Point-set helpers for queries.
std::function<bool(Vec2)> disk_set(Vec2 center, double radius);
std::function<bool(Vec2)> region_set(ObstacleRegion region);

struct CdcSample {
  double r = 0.0;
  double capacity = 0.0;
  double running_min = 0.0;  ///< c₀ estimate over reliable radii so far
  bool reliable = true;      ///< false when r < 4h (excluded from c₀)
};

/// cap₀(Λ ∩ B_r(x0); B_2r(x0)) for each radius, Λ a mask on `grid`.
std::vector<CdcSample> cdc_profile(const Grid& grid, const NodeMask& set, Vec2 x0,
                                   const std::vector<double>& radii, int sub_resolution = 257);

struct MazyaSample {
  double r = 0.0;
  double sup_half = 0.0;   ///< sup over B_{r/2}(x0) of |u|
  double capacity = 0.0;   ///< cap₀(Λ ∩ B_r; B_2r)
  double ratio = 0.0;
  bool defined = true;     ///< false when Λ ∩ B_r is empty
};

/// sup_{B_{r/2}}|u| · cap₀(Λ(u) ∩ B_r; B_2r)^{1/2} / r^{1/2} with Λ(u) the
/// contact set of u against ψ on F.
std::vector<MazyaSample> mazya_ratio(const ScalarField& u, const ScalarField& psi, const NodeMask& region,
                                     Vec2 x0, const std::vector<double>& radii, int sub_resolution = 257);

/// Slope of log(ratio) against log(r) over the defined, positive samples.
double mazya_log_slope(const std::vector<MazyaSample>& samples);

}  // namespace signorini
