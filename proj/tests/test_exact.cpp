#include <doctest.h>

#include <cmath>
#include <numbers>

#include "signorini/error.hpp"
#include "signorini/exact.hpp"

using namespace signorini;
using namespace signorini::exact;

namespace {

constexpr double kPi = std::numbers::pi;

double five_point(const ClosedForm& f, Vec2 x, double h) {
  auto u = [&](double a, double b) { return evaluate(f, {x.x1 + a, x.x2 + b}); };
  return (u(h, 0) + u(-h, 0) + u(0, h) + u(0, -h) - 4.0 * u(0, 0)) / (h * h);
}

// Observed order of the 5-point consistency error on h = 1/64, 1/128, 1/256.
double observed_order(const ClosedForm& f, Vec2 x) {
  double e[3];
  const double hs[3] = {1.0 / 64, 1.0 / 128, 1.0 / 256};
  for (int i = 0; i < 3; ++i) e[i] = std::abs(five_point(f, x, hs[i]) - laplacian(f, x));
  return std::log2(e[1] / e[2]);
}

}  // namespace

TEST_CASE("h_1/2 vanishes on the negative axis and equals -sqrt(r) on the positive one") {
  for (double r : {0.1, 0.5, 0.9}) {
    CHECK(evaluate(HAlpha{0.5}, {-r, 0.0}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(evaluate(HAlpha{0.5}, {r, 0.0}) == doctest::Approx(-std::sqrt(r)));
  }
}

TEST_CASE("cone aperture for alpha") {
  CHECK(cone_for_alpha(0.5).half_angle == doctest::Approx(0.0));
  CHECK(cone_for_alpha(1.0).half_angle == doctest::Approx(kPi / 2));
  CHECK(cone_for_alpha(2.0 / 3.0).half_angle == doctest::Approx(kPi / 4));
  CHECK_THROWS_AS(cone_for_alpha(0.4), ConfigError);
  CHECK_THROWS_AS(cone_for_alpha(1.1), ConfigError);
}

TEST_CASE("parameter ranges") {
  CHECK_THROWS_AS(validate(HAlpha{0.3}), ConfigError);
  CHECK_THROWS_AS(validate(Barrier{0.0}), ConfigError);
  CHECK_THROWS_AS(validate(Barrier{0.5}), ConfigError);
  CHECK_THROWS_AS(make_homogeneous(1.5, -1), ConfigError);
  CHECK_THROWS_AS(make_homogeneous(2.0, -1), ConfigError);
  CHECK_NOTHROW(make_homogeneous(0.5, -1));
  CHECK_NOTHROW(make_homogeneous(2.5, -1));
  CHECK_NOTHROW(make_homogeneous(1.5, 1));
}

TEST_CASE("laplacian at the origin is an error") {
  CHECK_THROWS_AS(laplacian(Barrier{0.1}, {0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(laplacian(HAlpha{0.5}, {0.0, 0.0}), DomainError);
}

TEST_CASE("barrier laplacian formula") {
  const double eps = 0.1;
  const Vec2 x{0.3 * std::cos(1.0), 0.3 * std::sin(1.0)};
  const double theta = 1.0;
  const double want = -(eps / 2 - 3 * eps * eps / 4) * std::pow(0.3, -1.5 - eps) * std::cos((1 - eps) / 2 * theta);
  CHECK(laplacian(Barrier{eps}, x) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("5-point consistency ladder for the barrier") {
  const Vec2 x{0.3 * std::cos(1.0), 0.3 * std::sin(1.0)};
  CHECK(observed_order(Barrier{0.1}, x) >= 1.8);
  const double e = std::abs(five_point(Barrier{0.1}, x, 1.0 / 256) - laplacian(Barrier{0.1}, x));
  CHECK(e / std::abs(laplacian(Barrier{0.1}, x)) < 1e-3);
}

TEST_CASE("closed forms are discretely harmonic away from the cut") {
  const std::vector<ClosedForm> forms = {HAlpha{0.5}, HAlpha{2.0 / 3.0}, HAlpha{1.0}, make_homogeneous(1.5, 1),
                                         make_homogeneous(2.0, 1), MixedExact{}};
  const std::vector<Vec2> points = {{0.4, 0.2}, {-0.3, 0.35}, {0.1, -0.5}, {0.5, 0.0}};
  for (const auto& f : forms) {
    for (const Vec2& x : points) {
      CHECK(laplacian(f, x) == 0.0);
      const double e1 = std::abs(five_point(f, x, 1.0 / 128)), e2 = std::abs(five_point(f, x, 1.0 / 256));
      if (e1 < 1e-9) continue;  // polynomial, exact up to rounding
      CHECK(std::log2(e1 / e2) >= 1.8);
    }
  }
}

TEST_CASE("h_alpha is nonnegative exactly on the realized cone") {
  const Grid g = Grid::build({129, 1.0});
  for (double alpha : {0.5, 2.0 / 3.0, 0.75, 1.0}) {
    const NodeMask cone = realize_region(g, cone_for_alpha(alpha));
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (!g.interior(k)) continue;
      const double v = evaluate(HAlpha{alpha}, g.coord(k));
      if (cone[k]) {
        CHECK(v >= -1e-12);
      } else {
        CHECK(v < 0.0);
      }
    }
  }
}

TEST_CASE("mirror symmetry") {
  const std::vector<ClosedForm> forms = {HAlpha{0.75}, make_homogeneous(0.5, -1), Barrier{0.05}, MixedExact{}};
  for (const auto& f : forms) {
    for (double a = 0.1; a < 6.2; a += 0.7) {
      const Vec2 x{0.6 * std::cos(a), 0.6 * std::sin(a)};
      CHECK(evaluate(f, x) == doctest::Approx(evaluate(f, {x.x1, -x.x2})).epsilon(1e-14));
    }
  }
}

TEST_CASE("homogeneous form matches r^k cos(k theta)") {
  const auto f = make_homogeneous(2.0, 1);
  for (double a = 0.1; a < 3.1; a += 0.5) {
    const double r = 0.7;
    CHECK(evaluate(f, {r * std::cos(a), r * std::sin(a)}) == doctest::Approx(r * r * std::cos(2 * a)));
  }
}
