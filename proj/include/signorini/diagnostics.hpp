#pragma once

#include <optional>
#include <vector>

#include "signorini/grid.hpp"

namespace signorini {

inline constexpr int kCircleSamples = 1024;

/// Boundary integrals over the circle of radius r about a centre.
struct CircleIntegrals {
  double u2 = 0.0;       ///< ∫ u² dσ
  double dnu2 = 0.0;     ///< ∫ (∂_ν u)² dσ
  double grad2 = 0.0;    ///< ∫ |∇u|² dσ
  double u_dnu = 0.0;    ///< ∫ u ∂_ν u dσ
};

/// Bilinear interpolation at a physical point. Throws DomainError when the
/// enclosing cell leaves the grid or touches nodes without values.
double interpolate(const ScalarField& u, Vec2 x);

/// Trapezoidal rule on `samples` equi-angular points. No range check beyond
/// the stencil needing valid nodes; boundary_l2 and friends enforce the
/// documented radius range.
CircleIntegrals circle_integrals_unchecked(const ScalarField& u, Vec2 center, double r,
                                           int samples = kCircleSamples);

/// ∫ u² dσ only (no gradient stencil), same quadrature.
double circle_l2_unchecked(const ScalarField& u, Vec2 center, double r, int samples = kCircleSamples);

/// D(r): cell gradient energy over B_r(center). Cells cut by the circle are
/// weighted by their covered area. Requires r in [4h, 1 - 4h].
double dirichlet_energy(const ScalarField& u, double r, Vec2 center = {});

/// H(r) and the other circle integrals. Requires r in [8h, 1 - 8h].
CircleIntegrals boundary_integrals(const ScalarField& u, double r, Vec2 center = {});
double boundary_l2(const ScalarField& u, double r, Vec2 center = {});

/// N(r) = r D(r) / H(r); empty when H(r) is below the quadrature floor.
std::optional<double> almgren_N(const ScalarField& u, double r, Vec2 center = {});
/// β(r) = D(r) / r (two-dimensional form).
double acf_beta(const ScalarField& u, double r, Vec2 center = {});

/// (∫|∇u|² - 2∫(∂_ν u)²) / ∫|∇u|² on ∂B_r.
double rellich_defect(const ScalarField& u, double r, Vec2 center = {});
/// (D(r) - ∫ u ∂_ν u) / D(r).
double green_defect(const ScalarField& u, double r, Vec2 center = {});

struct FrequencyProfile {
  std::vector<double> radii;
  std::vector<double> D;
  std::vector<double> H;
  std::vector<std::optional<double>> N;
  std::vector<double> beta;
  std::vector<double> rellich_defect;
  std::vector<double> green_defect;
};

/// `count` log-spaced radii in [r_min, r_max].
std::vector<double> log_radii(double r_min, double r_max, int count);
/// 48 log-spaced radii in [8h, 0.5].
std::vector<double> default_radii(const Grid& grid);

FrequencyProfile frequency_profile(const ScalarField& u, const std::vector<double>& radii,
                                   Vec2 center = {});

struct HolderFit {
  double exponent = 0.0;
  double constant = 0.0;
  double r_min = 0.0;
  double r_max = 0.0;
  double residual = 0.0;  ///< RMS misfit in log-log
  int used = 0;           ///< radii that survived the oscillation floor
};

/// max |u - u(x0)| over active nodes in the closed ball B_r(x0) and over
/// kCircleSamples interpolated points on its boundary circle.
double oscillation(const ScalarField& u, std::size_t center_node, double r);

/// Least-squares slope of log osc(r) against log r on `samples` log-spaced
/// radii. Requires r_min >= 8h and r_max <= 0.5.
HolderFit holder_fit(const ScalarField& u, std::size_t center_node, double r_min, double r_max,
                     int samples = 24);

/// Nodes of F where u - ψ <= 1e-12.
NodeMask contact_set(const ScalarField& u, const ScalarField& psi, const NodeMask& region);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace signorini
