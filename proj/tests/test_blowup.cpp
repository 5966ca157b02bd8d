#include <doctest.h>

#include <cmath>

#include "signorini/blowup.hpp"
#include "signorini/error.hpp"
#include "signorini/exact.hpp"
#include "signorini/region.hpp"
#include "signorini/solver.hpp"

using namespace signorini;

namespace {

const GridPtr& grid() {
  static const GridPtr g = make_grid(257);
  return g;
}

}  // namespace

TEST_CASE("admissible homogeneities") {
  const std::vector<double> want{0.5, 1.5, 2, 2.5, 3.5, 4, 4.5, 5.5, 6};
  CHECK(admissible_kappas() == want);
}

TEST_CASE("rescaling is normalized on the unit circle") {
  const auto u = sample(grid(), [](Vec2 x) { return 3.0 * x.x1 + x.x2 * x.x2; });
  for (double r : {0.15, 0.25}) {
    const Rescaling s = rescale(u, r);
    CHECK(s.unit_circle_l2 == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(s.field.full);
  }
  CHECK_THROWS_AS(rescale(u, 8 * grid()->h()), DomainError);
  CHECK_THROWS_AS(rescale(u, 0.3), DomainError);
  CHECK_THROWS_AS(rescale(ScalarField(grid(), 0.0), 0.2), DomainError);
}

TEST_CASE("homogeneous profiles are classified exactly") {
  struct Case {
    double kappa;
    int sign;
    Branch branch;
  };
  for (const Case c : {Case{0.5, -1, Branch::HalfInteger}, Case{1.5, 1, Branch::HalfInteger},
                       Case{2.0, 1, Branch::EvenInteger}}) {
    CAPTURE(c.kappa);
    const auto u = sample(grid(), exact::as_function(exact::make_homogeneous(c.kappa, c.sign)));
    const BlowupResult b = classify(rescale(u, 0.2).field);
    CHECK(b.classified);
    CHECK(b.kappa_admissible == c.kappa);
    CHECK(b.branch == c.branch);
    CHECK(b.sign == c.sign);
    CHECK(b.sign_matches);
    CHECK(b.profile_residual < 1e-3);
    CHECK(b.kappa_hat == doctest::Approx(c.kappa).epsilon(0.02));
    CHECK(b.candidate_residuals.size() == admissible_kappas().size());
  }
}

TEST_CASE("higher even profiles are classified") {
  const auto u = sample(grid(), exact::as_function(exact::make_homogeneous(4.0, 1)));
  const BlowupResult b = classify(rescale(u, 0.2).field);
  CHECK(b.kappa_admissible == 4.0);
  CHECK(b.branch == Branch::EvenInteger);
  CHECK(b.profile_residual < 1e-2);
}

TEST_CASE("a wrong sign is reported") {
  // +r^{1/2} cos(θ/2) is not the signed half-integer profile
  const auto u = sample(grid(), exact::as_function(exact::Homogeneous{0.5, 1}));
  const BlowupResult b = classify(rescale(u, 0.2).field);
  CHECK(b.kappa_admissible == 0.5);
  CHECK(b.sign == 1);
  CHECK_FALSE(b.sign_matches);
}

TEST_CASE("a linear function is not an admissible profile") {
  const auto u = sample(grid(), [](Vec2 x) { return x.x1; });
  const BlowupResult b = classify(rescale(u, 0.2).field);
  CHECK(b.kappa_hat == doctest::Approx(1.0).epsilon(0.02));
  CHECK(b.profile_residual > 1e-2);
}

TEST_CASE("profile residual of an exact multiple") {
  const auto u = sample(grid(), [](Vec2 x) { return 2.5 * (x.x1 * x.x1 - x.x2 * x.x2); });
  const auto [res, b] = profile_residual(u, 2.0);
  CHECK(res < 1e-3);
  CHECK(b == doctest::Approx(2.5).epsilon(1e-3));
}

TEST_CASE("even and odd parts") {
  const auto u = sample(grid(), [](Vec2 x) { return x.x1 + x.x2 + x.x2 * x.x2; });
  const auto e = even_part(u), o = odd_part(u);
  const Grid& g = *grid();
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (!g.active(k)) continue;
    const Vec2 x = g.coord(k);
    CHECK(e[k] == doctest::Approx(x.x1 + x.x2 * x.x2));
    CHECK(o[k] == doctest::Approx(x.x2));
    CHECK(e[k] + o[k] == doctest::Approx(u[k]));
  }
}

TEST_CASE("frequency estimate of the homogeneity") {
  const auto u = sample(grid(), exact::as_function(exact::make_homogeneous(1.5, 1)));
  const double h = grid()->h();
  const auto p = frequency_profile(u, log_radii(8 * h, 0.5, 12));
  CHECK(kappa_from_frequency(p, h) == doctest::Approx(1.5).epsilon(0.02));
  const auto few = frequency_profile(u, {0.2, 0.3});
  CHECK_THROWS_AS(kappa_from_frequency(few, h), DomainError);
}

TEST_CASE("branch names") {
  CHECK(to_string(Branch::HalfInteger) != to_string(Branch::EvenInteger));
}

TEST_CASE("exact inputs: the true homogeneity wins by a factor of ten") {
  for (auto [kappa, sign] : {std::pair{0.5, -1}, std::pair{1.5, 1}, std::pair{2.0, 1}}) {
    CAPTURE(kappa);
    const auto u = sample(grid(), exact::as_function(exact::make_homogeneous(kappa, sign)));
    const BlowupResult b = classify(rescale(u, 0.25).field);
    for (const auto& [k, res] : b.candidate_residuals) {
      if (k != kappa) CHECK(res >= 10 * b.profile_residual);
    }
  }
}

TEST_CASE("rescalings of a homogeneous field coincide") {
  const auto u = sample(grid(), exact::as_function(exact::make_homogeneous(1.5, 1)));
  CHECK(companion_radius(*grid(), 0.25) == doctest::Approx(0.125));
  CHECK(rescaling_gap(u, 0.25, 0.125) < 1e-3);
  const auto mixed = sample(grid(), [](Vec2 x) { return x.x1 + (x.x1 * x.x1 - x.x2 * x.x2); });
  CHECK(rescaling_gap(mixed, 0.25, 0.125) > 1e-2);
}

namespace {

Solution halfline_solve(const GridPtr& g, const PointFunction& data) {
  ObstacleProblem p;
  p.grid = g;
  p.boundary = evaluate_on_boundary(g, data);
  p.region = realize_region(*g, region::HalfLine{});
  p.obstacle = make_obstacle(g, p.region, [](Vec2) { return 0.0; });
  return solve_obstacle(p, {});
}

}  // namespace

TEST_CASE("frequency estimate on solved problems") {
  const auto g = make_grid(129);
  const auto radii = default_radii(*g);
  const Solution half = halfline_solve(g, exact::as_function(exact::HAlpha{0.5}));
  CHECK(kappa_from_frequency(frequency_profile(half.u, radii), g->h()) == doctest::Approx(0.5).epsilon(0.1));
  // no contact: the Dirichlet solution x1
  const Solution lin = halfline_solve(g, [](Vec2 x) { return x.x1 + 2.0; });
  ScalarField shifted = lin.u;
  for (double& v : shifted.values) v -= 2.0;
  CHECK(kappa_from_frequency(frequency_profile(shifted, radii), g->h()) == doctest::Approx(1.0).epsilon(0.05));
  // contact only at the origin
  const Solution iso = halfline_solve(g, [](Vec2 x) { return x.x1 * x.x1 - x.x2 * x.x2; });
  const double k = kappa_from_frequency(frequency_profile(iso.u, radii), g->h());
  CHECK(std::abs(k - 2.0) <= 0.1);
  const BlowupResult b = classify(rescale(iso.u, 0.25).field);
  CHECK(b.branch == Branch::EvenInteger);
  CHECK(std::abs(k - b.kappa_admissible) <= 0.1);
}
