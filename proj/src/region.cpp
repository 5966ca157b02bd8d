#include "signorini/region.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "signorini/error.hpp"

namespace signorini {

namespace {

constexpr double kCantorLeft = -0.75;
constexpr double kCantorRight = -0.25;
constexpr double kTol = 1e-12;

bool in_prefractal(double x, int level) {
  if (x < kCantorLeft - kTol || x > kCantorRight + kTol) return false;
  double t = (x - kCantorLeft) / (kCantorRight - kCantorLeft);
  const double eps = kTol / (kCantorRight - kCantorLeft);
  for (int l = 0; l < level; ++l) {
    t *= 3.0;
    if (t > 1.0 + eps * std::pow(3.0, l + 1) && t < 2.0 - eps * std::pow(3.0, l + 1)) return false;
    if (t >= 1.5) t -= 2.0;
    t = std::clamp(t, 0.0, 1.0);
  }
  return true;
}

bool on_row(double x2) { return std::abs(x2) <= kTol; }

struct ContainsVisitor {
  Vec2 x;
  bool explicit_single_row = false;

  bool operator()(const region::FullLine&) const { return on_row(x.x2); }
  bool operator()(const region::HalfLine&) const { return on_row(x.x2) && x.x1 <= kTol; }
  bool operator()(const region::Cone& c) const {
    if (norm(x) <= kTol) return true;
    return std::numbers::pi - mirrored_angle(x) <= c.half_angle + kTol;
  }
  bool operator()(const region::CantorLine& c) const { return on_row(x.x2) && in_prefractal(x.x1, c.level); }
  bool operator()(const region::Explicit& e) const {
    const int n = e.source.resolution;
    const double hs = 2.0 * e.source.half_width / (n - 1);
    const int i = static_cast<int>(std::lround((x.x1 + e.source.half_width) / hs));
    const int j = static_cast<int>(std::lround((x.x2 + e.source.half_width) / hs));
    if (i < 0 || j < 0 || i >= n || j >= n) return false;
    if (!e.mask[static_cast<std::size_t>(j) * n + i]) return false;
    const double p1 = -e.source.half_width + i * hs;
    const double p2 = -e.source.half_width + j * hs;
    if (std::abs(x.x1 - p1) > 0.5 * hs + kTol) return false;
    if (explicit_single_row) return std::abs(x.x2 - p2) <= kTol;
    return std::abs(x.x2 - p2) <= 0.5 * hs + kTol;
  }
};

bool single_row(const region::Explicit& e) {
  const int n = e.source.resolution;
  int found = -1;
  for (std::size_t k = 0; k < e.mask.size(); ++k) {
    if (!e.mask[k]) continue;
    const int r = static_cast<int>(k / n);
    if (found >= 0 && r != found) return false;
    found = r;
  }
  return true;
}

}  // namespace

std::vector<std::pair<double, double>> cantor_intervals(double a, double b, int level) {
  std::vector<std::pair<double, double>> out{{a, b}};
  for (int l = 0; l < level; ++l) {
    std::vector<std::pair<double, double>> next;
    next.reserve(out.size() * 2);
    for (auto [lo, hi] : out) {
      const double third = (hi - lo) / 3.0;
      next.emplace_back(lo, lo + third);
      next.emplace_back(hi - third, hi);
    }
    out = std::move(next);
  }
  return out;
}

int cantor_level_cap(double h) {
  // floor(log_3(1 / (2h))), guarded against round-off at exact powers of 3
  const double v = std::log(1.0 / (2.0 * h)) / std::log(3.0);
  return std::max(0, static_cast<int>(std::floor(v + 1e-9)));
}

int effective_cantor_level(const Grid& grid, int requested) {
  return std::min(requested, cantor_level_cap(grid.h()));
}

NodeMask realize_region(const Grid& grid, const ObstacleRegion& reg) {
  NodeMask mask(grid.size(), 0);
  ObstacleRegion effective = reg;
  if (const auto* c = std::get_if<region::Cone>(&reg)) {
    if (!(c->half_angle >= 0.0 && c->half_angle < std::numbers::pi)) {
      throw ConfigError("cone half_angle must lie in [0, pi)");
    }
  } else if (const auto* c = std::get_if<region::CantorLine>(&reg)) {
    if (c->level < 0) throw ConfigError("cantor level must be non-negative");
    effective = region::CantorLine{effective_cantor_level(grid, c->level)};
  } else if (const auto* e = std::get_if<region::Explicit>(&reg)) {
    const Grid src = Grid::build(e->source);
    if (e->mask.size() != src.size()) throw ConfigError("explicit mask size does not match its grid");
    if (src.same_lattice(grid)) {
      for (std::size_t k = 0; k < grid.size(); ++k) mask[k] = (e->mask[k] && grid.interior(k)) ? 1 : 0;
      return mask;
    }
  }
  const RegionMembership member(effective);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (grid.interior(k) && member(grid.coord(k))) mask[k] = 1;
  }
  return mask;
}

RegionMembership::RegionMembership(ObstacleRegion reg) : region_(std::move(reg)) {
  if (const auto* e = std::get_if<region::Explicit>(&region_)) {
    if (e->mask.size() != static_cast<std::size_t>(e->source.resolution) * e->source.resolution) {
      throw ConfigError("explicit mask size does not match its grid");
    }
    single_row_ = single_row(*e);
  }
}

bool RegionMembership::operator()(Vec2 x) const {
  return std::visit(ContainsVisitor{x, single_row_}, region_);
}

std::size_t count(const NodeMask& mask) {
  return static_cast<std::size_t>(std::count_if(mask.begin(), mask.end(), [](auto v) { return v != 0; }));
}

namespace {

double parse_number(const std::string& s, const std::string& what) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError("cannot parse " + what + " from '" + s + "'");
  return v;
}

}  // namespace

ObstacleRegion parse_region(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string{} : text.substr(colon + 1);
  if (kind == "halfline") return region::HalfLine{};
  if (kind == "fullline") return region::FullLine{};
  if (kind == "cone") {
    if (arg.empty()) throw ConfigError("cone region needs a half angle, e.g. cone:0.785");
    const double a = parse_number(arg, "cone half angle");
    if (!(a >= 0.0 && a < std::numbers::pi)) throw ConfigError("cone half_angle must lie in [0, pi)");
    return region::Cone{a};
  }
  if (kind == "cantor") {
    const int level = arg.empty() ? 5 : static_cast<int>(parse_number(arg, "cantor level"));
    if (level < 0) throw ConfigError("cantor level must be non-negative");
    return region::CantorLine{level};
  }
  throw ConfigError("unknown region '" + text + "'");
}

std::string describe(const ObstacleRegion& reg) {
  struct V {
    std::string operator()(const region::FullLine&) const { return "fullline"; }
    std::string operator()(const region::HalfLine&) const { return "halfline"; }
    std::string operator()(const region::Cone& c) const {
      std::ostringstream s;
      s.precision(17);
      s << "cone:" << c.half_angle;
      return s.str();
    }
    std::string operator()(const region::CantorLine& c) const { return "cantor:" + std::to_string(c.level); }
    std::string operator()(const region::Explicit& e) const {
      return "explicit:" + std::to_string(count(e.mask)) + "@" + std::to_string(e.source.resolution);
    }
  };
  return std::visit(V{}, reg);
}

}  // namespace signorini
