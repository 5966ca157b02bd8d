#pragma once

#include <string>
#include <vector>

#include "signorini/diagnostics.hpp"
#include "signorini/grid.hpp"

namespace signorini {

/// {1/2, 3/2, 2, 5/2, 7/2, 4, 9/2, 11/2, 6}
std::vector<double> admissible_kappas();

enum class Branch { HalfInteger, EvenInteger };

struct Rescaling {
  ScalarField field;
  double r = 0.0;
  double normalization = 0.0;  ///< (r^{-1} H(r))^{1/2}
  double unit_circle_l2 = 0.0; ///< ||u_r||²_{L²(∂B₁)} by quadrature on the rescaled field
};

/// u_r(x) = u(r x) / (r^{-1} ∫_{∂B_r} u²)^{1/2} on u's own grid.
/// Requires r in [16h, 0.25] and H(r) above the quadrature floor.
Rescaling rescale(const ScalarField& u, double r);

struct BlowupResult {
  double kappa_hat = 0.0;         ///< continuous fit on the ring 1/4 <= |x| <= 3/4
  double kappa_admissible = 0.0;  ///< best candidate by profile residual on ∂B_{1/2}
  double amplitude = 0.0;         ///< b in b r^κ cos(κθ)
  double profile_residual = 0.0;  ///< relative RMS misfit on ∂B_{1/2}
  Branch branch = Branch::HalfInteger;
  int sign = 1;
  bool sign_matches = true;       ///< sign agrees with the classified profile family
  bool classified = true;         ///< false when every residual exceeds 0.5
  std::vector<std::pair<double, double>> candidate_residuals;
};

/// Relative L² distance on ∂B_{1/2} between the even parts of the rescalings
/// at r1 and r2; small when the blowup has settled.
double rescaling_gap(const ScalarField& u, double r1, double r2);

/// Second radius for the gap: r/2 when that is still >= 16h, else 2r (<= 0.25).
double companion_radius(const Grid& grid, double r);

/// Classifies the even-in-x2 part of a normalized rescaling.
BlowupResult classify(const ScalarField& rescaled);

/// Relative RMS misfit of the even part against the best multiple of
/// r^κ cos(κθ) on ∂B_{1/2}; also returns that multiple.
std::pair<double, double> profile_residual(const ScalarField& rescaled, double kappa);

/// N(0+) estimate: mean of N over the three smallest reliable radii.
/// Throws DomainError when fewer than three are available.
double kappa_from_frequency(const FrequencyProfile& profile, double h);

/// Even part in x2: (u(x1,x2) + u(x1,-x2)) / 2.
ScalarField even_part(const ScalarField& u);
ScalarField odd_part(const ScalarField& u);

std::string to_string(Branch b);

}  // namespace signorini
