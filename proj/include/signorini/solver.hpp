#pragma once

#include <functional>
#include <vector>

#include "signorini/grid.hpp"

namespace signorini {

/// Obstacle value marking "no constraint" at nodes outside F.
inline constexpr double kNoObstacle = -1e30;

struct SolverParams {
  double omega = 1.8;
  double tol = 1e-9;     ///< stop once the largest nodal update of a sweep is <= tol
  long max_iter = 0;     ///< 0 selects 500 * N
  bool record_energy = false;

  void validate() const;
  long iteration_limit(const Grid& grid) const { return max_iter > 0 ? max_iter : 500L * grid.n(); }
};

/// Over-relaxation factor that is optimal for the plain Dirichlet problem on
/// the grid's disk.
double optimal_omega(const Grid& grid);

struct SolveReport {
  long iterations = 0;
  double final_update = 0.0;
  double energy = 0.0;  ///< discrete Dirichlet energy, sum of squared edge differences
  bool converged = false;
  double complementarity_defect = 0.0;
  /// Value of the minimized functional after every sweep when requested.
  std::vector<double> energy_history;
};

struct Solution {
  ScalarField u;
  SolveReport report;
};

/// Obstacle problem on the grid's disk: minimize the discrete Dirichlet energy
/// over fields equal to `boundary` on the Dirichlet layer and >= `obstacle`
/// at the nodes of `region`.
struct ObstacleProblem {
  GridPtr grid;
  ScalarField boundary;
  NodeMask region;
  ScalarField obstacle;  ///< finite on region nodes, kNoObstacle elsewhere
};

/// Builds ψ from a function on `region` and the sentinel elsewhere.
ScalarField make_obstacle(const GridPtr& grid, const NodeMask& region, const PointFunction& psi);

/// Projected SOR on the 5-point Laplacian, fixed lexicographic sweep.
/// Non-convergence is reported, not thrown; inconsistent input throws ConfigError.
Solution solve_obstacle(const ObstacleProblem& problem, const SolverParams& params);

/// -Δu = f in the disk, u = g on the Dirichlet layer.
Solution solve_dirichlet(const GridPtr& grid, const ScalarField& boundary, const ScalarField& source,
                         const SolverParams& params);

/// Mixed problem on the closed upper half-disk: Dirichlet data on the part of
/// the row x2 = 0 given by `dirichlet_line` and on the upper arc, homogeneous
/// Neumann condition (ghost reflection) on the rest of the row.
struct MixedBVPProblem {
  GridPtr grid;
  NodeMask dirichlet_line;  ///< subset of the interior nodes of row x2 = 0
  ScalarField boundary;     ///< data on the arc and on dirichlet_line nodes
  ScalarField source;
};

/// The returned field is the upper half-disk solution, reflected evenly to
/// the lower half.
Solution solve_mixed_bvp(const MixedBVPProblem& problem, const SolverParams& params);

/// Smooth radial cutoff: 1 on B_inner, 0 outside B_outer.
double smooth_cutoff(double r, double inner = 0.75, double outer = 0.95);

struct Extension {
  ScalarField psi_bar;  ///< even reflection of Ψ
  SolveReport report;
  double sup_norm = 0.0;  ///< ||u||_inf used in the boundary data
};

/// Builds the extended obstacle Ψ̄ of a symmetric half-line obstacle solution:
/// Ψ is harmonic in the upper half-disk, -||u||_inf (1 - η) on F and on the
/// arc, with zero normal derivative on the positive x1-axis.
Extension extend_obstacle(const ScalarField& u, const SolverParams& params,
                          const std::function<double(double)>& cutoff = {});

/// max over active nodes of (a - b). Throws ConfigError on a grid mismatch.
double comparison_check(const ScalarField& a, const ScalarField& b);

/// 5-point Laplacian (Σ neighbours - 4u)/h² at an interior node.
double discrete_laplacian(const ScalarField& u, std::size_t k);

/// Sum over grid edges with at least one interior endpoint of the squared difference.
double dirichlet_energy_total(const ScalarField& u);

}  // namespace signorini
