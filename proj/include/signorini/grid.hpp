#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace signorini {

struct Vec2 {
  double x1 = 0.0;
  double x2 = 0.0;
};

/// One byte per lattice node. Kept as a plain vector so masks compose with
/// std algorithms and can be handed through the C API without copies.
using NodeMask = std::vector<std::uint8_t>;

struct GridSpec {
  int resolution = 129;  ///< nodes per axis, odd and >= 33
  double half_width = 1.0;
};

struct GridBuildReport {
  std::size_t interior = 0;
  std::size_t dirichlet = 0;
  std::size_t unused = 0;
};

/// Uniform node lattice over [-1,1]^2 discretizing a disk B_R(0), R <= 1.
///
/// Interior nodes satisfy |x| < R - h/2; the Dirichlet layer is every
/// non-interior node with at least one interior 4-neighbour. Node (i, j)
/// sits at x1 = -1 + i h, x2 = -1 + j h and is stored at j * N + i.
class Grid {
 public:
  /// Throws ConfigError for even or too small resolution.
  static Grid build(const GridSpec& spec);

  /// Same lattice, disk shrunk to radius R (used for sub-disk problems).
  Grid restricted(double radius) const;

  int n() const { return n_; }
  int center() const { return (n_ - 1) / 2; }
  double h() const { return h_; }
  double radius() const { return radius_; }
  const GridSpec& spec() const { return spec_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * n_ + i;
  }
  int col(std::size_t k) const { return static_cast<int>(k % n_); }
  int row(std::size_t k) const { return static_cast<int>(k / n_); }
  Vec2 coord(int i, int j) const { return {-spec_.half_width + i * h_, -spec_.half_width + j * h_}; }
  Vec2 coord(std::size_t k) const { return coord(col(k), row(k)); }

  bool interior(std::size_t k) const { return interior_[k] != 0; }
  bool dirichlet(std::size_t k) const { return dirichlet_[k] != 0; }
  /// Interior or Dirichlet: nodes that carry a value.
  bool active(std::size_t k) const { return interior_[k] != 0 || dirichlet_[k] != 0; }

  const NodeMask& interior_mask() const { return interior_; }
  const NodeMask& dirichlet_mask() const { return dirichlet_; }
  const GridBuildReport& report() const { return report_; }

  bool same_lattice(const Grid& other) const {
    return n_ == other.n_ && spec_.half_width == other.spec_.half_width;
  }

 private:
  Grid(const GridSpec& spec, double radius);

  GridSpec spec_;
  int n_ = 0;
  double h_ = 0.0;
  double radius_ = 1.0;
  NodeMask interior_;
  NodeMask dirichlet_;
  GridBuildReport report_;
};

using GridPtr = std::shared_ptr<const Grid>;

inline GridPtr make_grid(int resolution) {
  return std::make_shared<const Grid>(Grid::build(GridSpec{resolution, 1.0}));
}

/// Node-indexed real values over a grid.
struct ScalarField {
  GridPtr grid;
  std::vector<double> values;
  /// Values are meaningful at every lattice node, not only on the disk
  /// (rescalings are sampled over the whole square).
  bool full = false;

  ScalarField() = default;
  explicit ScalarField(GridPtr g, double fill = 0.0)
      : grid(std::move(g)), values(grid->size(), fill) {}

  double& operator[](std::size_t k) { return values[k]; }
  double operator[](std::size_t k) const { return values[k]; }
  double at(int i, int j) const { return values[grid->index(i, j)]; }
  bool valid(std::size_t k) const { return full || grid->active(k); }
};

using PointFunction = std::function<double(Vec2)>;

/// Values of g at every Dirichlet node, zero elsewhere.
ScalarField evaluate_on_boundary(const GridPtr& grid, const PointFunction& g);

/// g sampled at every interior and Dirichlet node, zero elsewhere.
ScalarField sample(const GridPtr& grid, const PointFunction& g);

/// Mirrored polar angle of x1 + i|x2|, in [0, pi].
double mirrored_angle(Vec2 x);

inline double norm(Vec2 v) { return std::hypot(v.x1, v.x2); }

}  // namespace signorini

