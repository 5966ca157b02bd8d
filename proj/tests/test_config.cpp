#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "signorini/config.hpp"
#include "signorini/error.hpp"

using namespace signorini;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("signorini_test_config_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

void put(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("defaults validate") {
  const Config c;
  CHECK_NOTHROW(c.validate());
  CHECK(c.resolution() == 257);
  CHECK(c.experiment() == "halfline-optimal");
  CHECK(c.solver().omega == 1.8);
  CHECK(c.solver().tol == 1e-9);
  CHECK(c.svg());
  CHECK_FALSE(c.is_set("resolution"));
  CHECK(c.entries().size() == Config::keys().size());
}

TEST_CASE("parsing with comments and whitespace") {
  const Config c = Config::parse("# header\n  resolution =  129  # trailing\n\nregion = cone:0.5\n");
  CHECK(c.resolution() == 129);
  CHECK(c.is_set("resolution"));
  CHECK(std::holds_alternative<region::Cone>(c.region()));
  CHECK(std::get<region::Cone>(c.region()).half_angle == 0.5);
}

TEST_CASE("unknown keys and malformed lines are rejected") {
  CHECK_THROWS_AS(Config::parse("resoluton = 129\n"), ConfigError);
  CHECK_THROWS_AS(Config::parse("resolution 129\n"), ConfigError);
  Config c;
  CHECK_THROWS_AS(c.set("nope", "1"), ConfigError);
  CHECK_THROWS_AS(c.get("nope"), ConfigError);
}

TEST_CASE("bad values surface at validation") {
  auto bad = [](const std::string& line) {
    CAPTURE(line);
    const Config c = Config::parse(line + "\n");
    CHECK_THROWS_AS(c.validate(), ConfigError);
  };
  bad("resolution = 128");
  bad("resolution = 31");
  bad("resolution = 12x");
  bad("omega = 2.5");
  bad("tol = 0");
  bad("region = triangle");
  bad("region = cone:4");
  bad("boundary = halpha:0.2");
  bad("boundary = wobble");
  bad("epsilon = 0.5");
  bad("svg = maybe");
  bad("capacity_radius = 1");
  bad("cdc_radii = 0.1,-0.2");
  bad("alphas = ");
  bad("out = ");
}

TEST_CASE("includes resolve relative to the including file") {
  const fs::path d = scratch("include");
  fs::create_directories(d / "sub");
  put(d / "sub" / "base.cfg", "resolution = 65\nomega = 1.5\n");
  put(d / "main.cfg", "include = sub/base.cfg\nomega = 1.7\n");
  const Config c = Config::load(d / "main.cfg");
  CHECK(c.resolution() == 65);
  CHECK(c.solver().omega == 1.7);

  put(d / "loop.cfg", "include = loop.cfg\n");
  CHECK_THROWS_AS(Config::load(d / "loop.cfg"), ConfigError);
  CHECK_THROWS_AS(Config::load(d / "missing.cfg"), ConfigError);
  put(d / "bad_include.cfg", "include = sub/nothing.cfg\n");
  CHECK_THROWS_AS(Config::load(d / "bad_include.cfg"), ConfigError);
}

TEST_CASE("set_default leaves explicit keys alone") {
  Config c;
  c.set_default("resolution", "65");
  CHECK(c.resolution() == 65);
  CHECK_FALSE(c.is_set("resolution"));
  c.set("resolution", "129");
  c.set_default("resolution", "65");
  CHECK(c.resolution() == 129);
}

TEST_CASE("radii selection") {
  const Grid g = Grid::build({129, 1.0});
  Config c;
  const auto r = c.radii(g);
  CHECK(r.size() == 48);
  CHECK(r.front() == doctest::Approx(8 * g.h()));
  CHECK(r.back() == doctest::Approx(0.5));
  CHECK(c.blowup_radius(g) == doctest::Approx(std::min(0.25, 32 * g.h())));
  c.set("radii_min", "0.1");
  c.set("radii_count", "3");
  CHECK(c.radii(g).size() == 3);
  CHECK(c.radii(g).front() == doctest::Approx(0.1));
  const auto cdc = c.cdc_radii();
  CHECK(cdc.size() == 5);
  CHECK(cdc.front() == 0.04);
}

TEST_CASE("boundary selectors") {
  CHECK(closed_form("halpha:0.5").has_value());
  CHECK(closed_form("homogeneous:1.5").has_value());
  CHECK(closed_form("barrier:0.1").has_value());
  CHECK(closed_form("mixed").has_value());
  CHECK_FALSE(closed_form("quadratic").has_value());
  CHECK_FALSE(closed_form("cos-shift:0.3").has_value());

  const Vec2 x{0.6, 0.8};
  CHECK(boundary_function("quadratic")(x) == doctest::Approx(0.36 - 0.64));
  CHECK(boundary_function("cos-shift:0.3")(x) == doctest::Approx(0.6 - 0.3));
  CHECK(boundary_function("halpha:0.5")({0.0, 1.0}) == doctest::Approx(-std::cos(M_PI / 4)));
  CHECK(boundary_function("homogeneous:0.5:-1")({1.0, 0.0}) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(boundary_function("homogeneous:0.5:-2"), ConfigError);
  CHECK_THROWS_AS(boundary_function("homogeneous:1.5:-1"), ConfigError);
  CHECK_THROWS_AS(boundary_function("halpha"), ConfigError);
}

TEST_CASE("number parsing") {
  CHECK(parse_real("k", "1e-3") == 1e-3);
  CHECK(parse_int("k", "42") == 42);
  CHECK(parse_reals("k", "1, 2,3") == std::vector<double>{1, 2, 3});
  CHECK_THROWS_AS(parse_real("k", "abc"), ConfigError);
  CHECK_THROWS_AS(parse_int("k", "4.5"), ConfigError);
  CHECK_THROWS_AS(parse_reals("k", ""), ConfigError);
}
