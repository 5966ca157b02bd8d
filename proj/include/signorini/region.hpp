#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "signorini/grid.hpp"

namespace signorini {

namespace region {

/// The node row x2 = 0.
struct FullLine {};
/// {x1 <= 0, x2 = 0}.
struct HalfLine {};
/// Closed cone at the origin opening to the left: |theta - pi| <= half_angle.
struct Cone {
  double half_angle = 0.0;
};
/// Middle-thirds prefractal of [-3/4, -1/4] on the row x2 = 0.
struct CantorLine {
  int level = 5;
};
/// A node set given on some lattice; mapped to other lattices geometrically.
struct Explicit {
  GridSpec source;
  NodeMask mask;
};

}  // namespace region

using ObstacleRegion = std::variant<region::FullLine, region::HalfLine, region::Cone,
                                    region::CantorLine, region::Explicit>;

/// Closed intervals of the level-k middle-thirds prefractal of [a, b].
std::vector<std::pair<double, double>> cantor_intervals(double a, double b, int level);

/// Largest Cantor level whose intervals stay resolvable on spacing h.
int cantor_level_cap(double h);

/// Level actually realized on `grid` for a requested level.
int effective_cantor_level(const Grid& grid, int requested);

/// Node mask of the region on `grid`, restricted to interior nodes.
/// Throws ConfigError for invalid parameters.
NodeMask realize_region(const Grid& grid, const ObstacleRegion& region);

/// Membership of physical points in a region. Explicit masks that lie on a
/// single node row are read as unions of length-h segments along that row,
/// any other explicit mask as unions of h-by-h cells centred at its nodes.
/// Cantor levels are taken as given (no resolution cap).
class RegionMembership {
 public:
  explicit RegionMembership(ObstacleRegion region);
  bool operator()(Vec2 x) const;

 private:
  ObstacleRegion region_;
  bool single_row_ = false;
};

std::size_t count(const NodeMask& mask);

/// Parses "halfline", "fullline", "cone:<half_angle>", "cantor:<level>".
ObstacleRegion parse_region(const std::string& text);
std::string describe(const ObstacleRegion& region);

}  // namespace signorini
