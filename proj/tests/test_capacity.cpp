#include <doctest.h>

#include <cmath>
#include <numbers>

#include "signorini/capacity.hpp"
#include "signorini/error.hpp"
#include "signorini/region.hpp"

using namespace signorini;
using std::numbers::pi;

namespace {

NodeMask single_node(const Grid& g) {
  NodeMask m(g.size(), 0);
  m[g.index(g.center(), g.center())] = 1;
  return m;
}

double disk_cap(double inner, double outer, int resolution) {
  return capacity0(CapacityQuery{{0.0, 0.0}, outer, disk_set({0.0, 0.0}, inner), resolution}).value;
}

}  // namespace

TEST_CASE("capacity of a concentric disk") {
  CHECK(disk_cap(0.5, 1.0, 257) == doctest::Approx(2 * pi / std::log(2.0)).epsilon(0.02));
  CHECK(disk_cap(0.25, 1.0, 257) == doctest::Approx(2 * pi / std::log(4.0)).epsilon(0.02));
}

TEST_CASE("capacity of one lattice node against the lattice Green function") {
  // discrete Green function at the pole: (ln(R/h) + γ + 3/2 ln 2) / 2π
  double previous = 1e300;
  for (int n : {129, 257}) {
    const auto g = make_grid(n);
    const double got = capacity0(g, single_node(*g), capacity_params(*g)).value;
    const double oracle = 2 * pi / (std::log(1.0 / g->h()) + std::numbers::egamma + 1.5 * std::log(2.0));
    CHECK(got == doctest::Approx(oracle).epsilon(0.01));
    CHECK(got < previous);
    previous = got;
  }
}

TEST_CASE("capacity grows with the condenser and shrinks with the shell") {
  const double small = disk_cap(0.2, 1.0, 129);
  const double large = disk_cap(0.3, 1.0, 129);
  const double tight = disk_cap(0.3, 0.8, 129);
  CHECK(small < large);
  CHECK(large < tight);

  const auto g = make_grid(129);
  NodeMask a = single_node(*g), b = a;
  b[g->index(g->center() + 3, g->center())] = 1;
  CHECK(capacity0(g, a, {}).value < capacity0(g, b, {}).value);
}

TEST_CASE("the capacitary potential lies between 0 and 1") {
  const auto g = make_grid(65);
  ObstacleProblem p;
  p.grid = g;
  p.boundary = ScalarField(g, 0.0);
  p.region = realize_region(*g, region::Cone{0.4});
  for (std::size_t k = 0; k < g->size(); ++k) {
    if (p.region[k] && norm(g->coord(k)) > 0.5) p.region[k] = 0;
  }
  p.obstacle = make_obstacle(g, p.region, [](Vec2) { return 1.0; });
  const Solution s = solve_obstacle(p, {});
  REQUIRE(s.report.converged);
  for (std::size_t k = 0; k < g->size(); ++k) {
    if (!g->active(k)) continue;
    CHECK(s.u[k] >= -1e-9);
    CHECK(s.u[k] <= 1.0 + 1e-9);
    if (p.region[k]) CHECK(s.u[k] == 1.0);
  }
}

TEST_CASE("degenerate condensers") {
  const auto g = make_grid(65);
  const auto empty = capacity0(g, NodeMask(g->size(), 0), {});
  CHECK(empty.empty_condenser);
  CHECK(empty.value == 0.0);

  NodeMask edge(g->size(), 0);
  for (std::size_t k = 0; k < g->size(); ++k) {
    const std::size_t n = g->n();
    if (g->interior(k) && (g->dirichlet(k + 1) || g->dirichlet(k - 1) || g->dirichlet(k + n) || g->dirichlet(k - n))) {
      edge[k] = 1;
      break;
    }
  }
  CHECK_THROWS_AS(capacity0(g, edge, {}), ConfigError);
  CHECK_THROWS_AS(capacity0(g, NodeMask(3, 0), {}), ConfigError);
  CHECK_THROWS_AS(disk_cap(0.5, 0.0, 65), ConfigError);
}

TEST_CASE("capacity density profile") {
  const auto g = make_grid(129);
  const NodeMask line = realize_region(*g, region::HalfLine{});
  const auto prof = cdc_profile(*g, line, {0.0, 0.0}, {2 * g->h(), 0.1, 0.2}, 129);
  REQUIRE(prof.size() == 3);
  CHECK_FALSE(prof[0].reliable);
  CHECK(prof[0].running_min == 0.0);
  CHECK(prof[1].reliable);
  CHECK(prof[1].capacity > 0.0);
  CHECK(prof[2].running_min == std::min(prof[1].capacity, prof[2].capacity));
  // segment [-r, 0] inside B_2r: scale invariant up to lattice effects
  CHECK(prof[1].capacity == doctest::Approx(prof[2].capacity).epsilon(0.05));
  CHECK_THROWS_AS(cdc_profile(*g, line, {0.5, 0.0}, {0.3}, 129), DomainError);
}

TEST_CASE("a single node has vanishing density under refinement") {
  double previous = 1e300;
  for (int n : {65, 129, 257}) {
    const auto g = make_grid(n);
    const auto prof = cdc_profile(*g, single_node(*g), {0.0, 0.0}, {0.2}, 257);
    CHECK(prof[0].capacity < previous);
    previous = prof[0].capacity;
  }
}

TEST_CASE("Maz'ya ratio of the zero solution") {
  const auto g = make_grid(65);
  const ScalarField u(g, 0.0);
  const NodeMask F = realize_region(*g, region::HalfLine{});
  const ScalarField psi = make_obstacle(g, F, [](Vec2) { return 0.0; });
  const auto m = mazya_ratio(u, psi, F, {0.0, 0.0}, {0.1, 0.2}, 65);
  REQUIRE(m.size() == 2);
  for (const auto& s : m) {
    CHECK(s.defined);
    CHECK(s.capacity > 0.0);
    CHECK(s.ratio == 0.0);
  }
  const auto off = mazya_ratio(u, psi, F, {0.3, 0.3}, {0.1}, 65);
  CHECK_FALSE(off[0].defined);
}

TEST_CASE("log slope of Maz'ya samples") {
  std::vector<MazyaSample> s;
  for (double r : {0.1, 0.2, 0.4}) s.push_back({r, 1.0, 1.0, std::pow(r, 0.3), true});
  s.push_back({0.05, 0.0, 0.0, 0.0, false});
  CHECK(mazya_log_slope(s) == doctest::Approx(0.3));
}
