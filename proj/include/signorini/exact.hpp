#pragma once

#include <string>
#include <variant>

#include "signorini/grid.hpp"
#include "signorini/region.hpp"

namespace signorini::exact {

/// h_alpha = -r^alpha cos(alpha theta) on the mirrored angle, alpha in [1/2, 1].
struct HAlpha {
  double alpha = 0.5;
};
/// sign * r^kappa cos(kappa theta). A negative sign is only admitted for
/// kappa in 2N_0 + 1/2.
struct Homogeneous {
  double kappa = 0.5;
  int sign = 1;
};
/// r^(1/2 - eps) cos((1 - eps)/2 theta), eps in (0, 1/2).
struct Barrier {
  double eps = 0.05;
};
/// r^(1/2) cos(theta/2): harmonic in the upper half-disk, zero on the left
/// axis, zero normal derivative on the right axis.
struct MixedExact {};

using ClosedForm = std::variant<HAlpha, Homogeneous, Barrier, MixedExact>;

/// Throws ConfigError when parameters leave the admissible range.
void validate(const ClosedForm& form);
Homogeneous make_homogeneous(double kappa, int sign);

double evaluate(const ClosedForm& form, Vec2 x);

/// Pointwise Laplacian away from the origin. For the forms built on the
/// mirrored angle only the classical part is returned; the singular part
/// carried by the cut {x1 < 0, x2 = 0} is not represented.
/// Throws DomainError at the origin.
double laplacian(const ClosedForm& form, Vec2 x);

/// Cone with aperture pi (1 - 1/(2 alpha)); throws ConfigError outside [1/2, 1].
region::Cone cone_for_alpha(double alpha);

PointFunction as_function(const ClosedForm& form);

/// Restriction to the unit circle, extended to be constant along rays.
PointFunction angular_trace(const ClosedForm& form);

std::string describe(const ClosedForm& form);

}  // namespace signorini::exact
