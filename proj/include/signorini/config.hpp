#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "signorini/exact.hpp"
#include "signorini/grid.hpp"
#include "signorini/region.hpp"
#include "signorini/solver.hpp"

namespace signorini {

PointFunction boundary_function(const std::string& selector);

/// Key/value experiment configuration.
///
///   # comment
///   include = defaults.cfg
///   resolution = 257
///
/// Includes are resolved relative to the including file and applied before
/// the lines that follow them. Every key must be known; values are checked
/// when the configuration is validated.
class Config {
 public:
  Config();

  static Config load(const std::filesystem::path& path);
  static Config parse(const std::string& text, const std::filesystem::path& base = {});

  /// Throws ConfigError for unknown keys.
  void set(const std::string& key, const std::string& value);
  /// Like set, but leaves explicitly set keys alone.
  void set_default(const std::string& key, const std::string& value);
  const std::string& get(const std::string& key) const;
  bool is_set(const std::string& key) const;

  /// Parses every value; throws ConfigError on the first bad one.
  void validate() const;

  std::string experiment() const { return get("experiment"); }
  int resolution() const;
  std::vector<int> resolutions() const;
  ObstacleRegion region() const;
  PointFunction boundary() const { return boundary_function(get("boundary")); }
  double obstacle() const;
  SolverParams solver() const;
  Vec2 center() const;
  /// Radii for profiles on a grid; a zero lower bound selects 8h.
  std::vector<double> radii(const Grid& grid) const;
  std::vector<double> cdc_radii() const;
  std::vector<double> alphas() const;
  int capacity_resolution() const;
  double capacity_radius() const;
  double blowup_radius(const Grid& grid) const;
  double epsilon() const;
  bool svg() const;
  std::string out() const { return get("out"); }

  /// Keys in declaration order with their current values.
  std::vector<std::pair<std::string, std::string>> entries() const;
  static const std::vector<std::string>& keys();

 private:
  void apply(const std::string& text, const std::filesystem::path& base, int depth);

  std::map<std::string, std::string> values_;
  std::map<std::string, bool> explicit_;
};

/// Boundary selectors: "halpha:<alpha>", "homogeneous:<kappa>[:<sign>]",
/// "barrier:<eps>", "mixed", "cos-shift:<c>" (cos θ - c), "quadratic"
/// (x1² - x2²). The first four name closed forms.
std::optional<exact::ClosedForm> closed_form(const std::string& selector);
PointFunction boundary_function(const std::string& selector);

double parse_real(const std::string& key, const std::string& text);
int parse_int(const std::string& key, const std::string& text);
std::vector<double> parse_reals(const std::string& key, const std::string& text);

}  // namespace signorini
