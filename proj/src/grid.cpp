#include "signorini/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "signorini/error.hpp"

namespace signorini {

Grid::Grid(const GridSpec& spec, double radius)
    : spec_(spec), n_(spec.resolution), h_(2.0 * spec.half_width / (spec.resolution - 1)), radius_(radius) {
  const std::size_t total = size();
  interior_.assign(total, 0);
  dirichlet_.assign(total, 0);
  const double limit = radius_ - 0.5 * h_;
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < n_; ++i) {
      if (norm(coord(i, j)) < limit) interior_[index(i, j)] = 1;
    }
  }
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < n_; ++i) {
      const std::size_t k = index(i, j);
      if (interior_[k]) continue;
      const bool touches = (i > 0 && interior_[k - 1]) || (i + 1 < n_ && interior_[k + 1]) ||
                           (j > 0 && interior_[k - n_]) || (j + 1 < n_ && interior_[k + n_]);
      if (touches) dirichlet_[k] = 1;
    }
  }
  for (std::size_t k = 0; k < total; ++k) {
    if (interior_[k]) ++report_.interior;
    else if (dirichlet_[k]) ++report_.dirichlet;
    else ++report_.unused;
  }
}

Grid Grid::build(const GridSpec& spec) {
  if (spec.resolution < 33 || spec.resolution % 2 == 0) {
    throw ConfigError("grid resolution must be odd and at least 33, got " + std::to_string(spec.resolution));
  }
  if (spec.half_width != 1.0) throw ConfigError("grid half_width is fixed at 1.0");
  return Grid(spec, 1.0);
}

Grid Grid::restricted(double radius) const {
  if (!(radius > 4.0 * h_) || radius > 1.0) {
    throw ConfigError("restricted disk radius must lie in (4h, 1]");
  }
  return Grid(spec_, radius);
}

ScalarField evaluate_on_boundary(const GridPtr& grid, const PointFunction& g) {
  ScalarField f(grid, 0.0);
  for (std::size_t k = 0; k < grid->size(); ++k) {
    if (grid->dirichlet(k)) f[k] = g(grid->coord(k));
  }
  return f;
}

ScalarField sample(const GridPtr& grid, const PointFunction& g) {
  ScalarField f(grid, 0.0);
  for (std::size_t k = 0; k < grid->size(); ++k) {
    if (grid->active(k)) f[k] = g(grid->coord(k));
  }
  return f;
}

double mirrored_angle(Vec2 x) { return std::atan2(std::abs(x.x2), x.x1); }

}  // namespace signorini
