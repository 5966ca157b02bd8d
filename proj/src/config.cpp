#include "signorini/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "signorini/diagnostics.hpp"
#include "signorini/error.hpp"

namespace signorini {

namespace {

const std::vector<std::pair<std::string, std::string>>& defaults() {
  static const std::vector<std::pair<std::string, std::string>> d = {
      {"experiment", "halfline-optimal"},
      {"resolution", "257"},
      {"resolutions", "129,257"},  // halfline-optimal: (N+1)/2 and N unless set
      {"region", "halfline"},
      {"boundary", "halpha:0.5"},
      {"obstacle", "0"},
      {"omega", "1.8"},
      {"tol", "1e-9"},
      {"max_iter", "0"},
      {"radii_min", "0"},
      {"radii_max", "0.5"},
      {"radii_count", "48"},
      {"center_x1", "0"},
      {"center_x2", "0"},
      {"cdc_radii", "0.04,0.08,0.16,0.32,0.4"},
      {"alphas", "0.5,0.6666666666666666,0.75,1"},
      {"capacity_resolution", "257"},
      {"capacity_radius", "0.5"},
      {"blowup_radius", "0"},
      {"epsilon", "0.05"},
      {"svg", "true"},
      {"out", "out"},
  };
  return d;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

double parse_real(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw ConfigError(key + ": expected a number, got '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError(key + ": expected an integer, got '" + text + "'");
  }
  return v;
}

std::vector<double> parse_reals(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_real(key, item));
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

std::optional<exact::ClosedForm> closed_form(const std::string& selector) {
  const auto parts = split(selector, ':');
  const std::string& kind = parts.at(0);
  auto arg = [&](std::size_t i) {
    if (parts.size() <= i) throw ConfigError("boundary '" + selector + "': missing parameter");
    return parse_real("boundary", parts[i]);
  };
  std::optional<exact::ClosedForm> form;
  if (kind == "halpha" && parts.size() == 2) {
    form = exact::HAlpha{arg(1)};
  } else if (kind == "homogeneous" && (parts.size() == 2 || parts.size() == 3)) {
    const int sign = parts.size() == 3 ? parse_int("boundary", parts[2]) : 1;
    form = exact::make_homogeneous(arg(1), sign);
  } else if (kind == "barrier" && parts.size() == 2) {
    form = exact::Barrier{arg(1)};
  } else if (kind == "mixed" && parts.size() == 1) {
    form = exact::MixedExact{};
  }
  if (form) exact::validate(*form);
  return form;
}

PointFunction boundary_function(const std::string& selector) {
  if (auto form = closed_form(selector)) return exact::as_function(*form);
  const auto parts = split(selector, ':');
  if (parts.at(0) == "cos-shift" && parts.size() == 2) {
    const double c = parse_real("boundary", parts[1]);
    return [c](Vec2 x) {
      const double r = norm(x);
      return (r > 0.0 ? x.x1 / r : 1.0) - c;
    };
  }
  if (parts.at(0) == "quadratic" && parts.size() == 1) {
    return [](Vec2 x) { return x.x1 * x.x1 - x.x2 * x.x2; };
  }
  throw ConfigError("unknown boundary selector '" + selector + "'");
}

Config::Config() {
  for (const auto& [k, v] : defaults()) values_[k] = v;
}

const std::vector<std::string>& Config::keys() {
  static const std::vector<std::string> k = [] {
    std::vector<std::string> out;
    for (const auto& kv : defaults()) out.push_back(kv.first);
    return out;
  }();
  return k;
}

Config Config::load(const std::filesystem::path& path) {
  Config c;
  c.apply(read_file(path), path.parent_path(), 0);
  return c;
}

Config Config::parse(const std::string& text, const std::filesystem::path& base) {
  Config c;
  c.apply(text, base, 0);
  return c;
}

void Config::apply(const std::string& text, const std::filesystem::path& base, int depth) {
  if (depth > 8) throw ConfigError("config includes nested too deeply");
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "include") {
      const std::filesystem::path p = base / value;
      apply(read_file(p), p.parent_path(), depth + 1);
      continue;
    }
    if (!values_.count(key)) {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    set(key, value);
  }
}

void Config::set(const std::string& key, const std::string& value) {
  if (!values_.count(key)) throw ConfigError("unknown key '" + key + "'");
  values_[key] = value;
  explicit_[key] = true;
}

void Config::set_default(const std::string& key, const std::string& value) {
  if (!values_.count(key)) throw ConfigError("unknown key '" + key + "'");
  if (!is_set(key)) values_[key] = value;
}

const std::string& Config::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown key '" + key + "'");
  return it->second;
}

bool Config::is_set(const std::string& key) const { return explicit_.count(key) != 0; }

std::vector<std::pair<std::string, std::string>> Config::entries() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& k : keys()) out.emplace_back(k, values_.at(k));
  return out;
}

int Config::resolution() const {
  const int n = parse_int("resolution", get("resolution"));
  if (n < 33 || n % 2 == 0) throw ConfigError("resolution must be odd and >= 33");
  return n;
}

std::vector<int> Config::resolutions() const {
  std::vector<int> out;
  for (const auto& item : split(get("resolutions"), ',')) {
    const int n = parse_int("resolutions", item);
    if (n < 33 || n % 2 == 0) throw ConfigError("resolutions must be odd and >= 33");
    out.push_back(n);
  }
  if (out.empty()) throw ConfigError("resolutions: empty list");
  std::sort(out.begin(), out.end());
  return out;
}

ObstacleRegion Config::region() const { return parse_region(get("region")); }

double Config::obstacle() const { return parse_real("obstacle", get("obstacle")); }

SolverParams Config::solver() const {
  SolverParams p;
  p.omega = parse_real("omega", get("omega"));
  p.tol = parse_real("tol", get("tol"));
  p.max_iter = parse_int("max_iter", get("max_iter"));
  p.validate();
  return p;
}

Vec2 Config::center() const {
  return {parse_real("center_x1", get("center_x1")), parse_real("center_x2", get("center_x2"))};
}

std::vector<double> Config::radii(const Grid& grid) const {
  double lo = parse_real("radii_min", get("radii_min"));
  const double hi = parse_real("radii_max", get("radii_max"));
  const int count = parse_int("radii_count", get("radii_count"));
  if (lo == 0.0) lo = 8.0 * grid.h();
  if (lo <= 0.0 || hi <= lo || count < 2) {
    throw ConfigError("radii: need 0 < radii_min < radii_max and radii_count >= 2");
  }
  return log_radii(lo, hi, count);
}

std::vector<double> Config::cdc_radii() const {
  auto r = parse_reals("cdc_radii", get("cdc_radii"));
  for (double v : r) {
    if (v <= 0.0) throw ConfigError("cdc_radii must be positive");
  }
  return r;
}

std::vector<double> Config::alphas() const {
  auto a = parse_reals("alphas", get("alphas"));
  for (double v : a) exact::cone_for_alpha(v);
  return a;
}

int Config::capacity_resolution() const {
  const int n = parse_int("capacity_resolution", get("capacity_resolution"));
  if (n < 33 || n % 2 == 0) throw ConfigError("capacity_resolution must be odd and >= 33");
  return n;
}

double Config::capacity_radius() const {
  const double r = parse_real("capacity_radius", get("capacity_radius"));
  if (r <= 0.0 || r >= 1.0) throw ConfigError("capacity_radius must lie in (0, 1)");
  return r;
}

double Config::blowup_radius(const Grid& grid) const {
  const double r = parse_real("blowup_radius", get("blowup_radius"));
  if (r < 0.0) throw ConfigError("blowup_radius must be >= 0");
  return r == 0.0 ? std::min(0.25, 32.0 * grid.h()) : r;
}

double Config::epsilon() const {
  const double e = parse_real("epsilon", get("epsilon"));
  if (!(e > 0.0 && e < 0.5)) throw ConfigError("epsilon must lie in (0, 1/2)");
  return e;
}

bool Config::svg() const {
  const std::string& v = get("svg");
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("svg: expected true or false, got '" + v + "'");
}

void Config::validate() const {
  resolution();
  resolutions();
  region();
  boundary_function(get("boundary"));
  obstacle();
  solver();
  center();
  Grid probe = Grid::build(GridSpec{resolution(), 1.0});
  // the automatic range is empty on the coarsest grids; commands that need it check it themselves
  if (is_set("radii_min") || is_set("radii_max") || is_set("radii_count")) radii(probe);
  cdc_radii();
  alphas();
  capacity_resolution();
  capacity_radius();
  blowup_radius(probe);
  epsilon();
  svg();
  if (out().empty()) throw ConfigError("out must not be empty");
}

}  // namespace signorini
