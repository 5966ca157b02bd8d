#include <doctest.h>

#include <cmath>

#include "signorini/error.hpp"
#include "signorini/grid.hpp"

using namespace signorini;

namespace {

// Independent node scan: interior iff |x| < R - h/2.
std::size_t brute_interior(int n, double R) {
  const double h = 2.0 / (n - 1);
  std::size_t c = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (std::hypot(-1.0 + i * h, -1.0 + j * h) < R - h / 2) ++c;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("resolution must be odd and at least 33") {
  CHECK_THROWS_AS(Grid::build({32, 1.0}), ConfigError);
  CHECK_THROWS_AS(Grid::build({31, 1.0}), ConfigError);
  CHECK_THROWS_AS(Grid::build({64, 1.0}), ConfigError);
  CHECK_NOTHROW(Grid::build({33, 1.0}));
}

TEST_CASE("interior count matches a brute-force scan") {
  for (int n : {33, 65, 129, 257}) {
    const Grid g = Grid::build({n, 1.0});
    CHECK(g.report().interior == brute_interior(n, 1.0));
    CHECK(g.h() == doctest::Approx(2.0 / (n - 1)));
  }
  const Grid g = Grid::build({129, 1.0});
  CHECK(g.restricted(0.75).report().interior == brute_interior(129, 0.75));
}

TEST_CASE("dirichlet layer is the non-interior nodes next to the interior") {
  const Grid g = Grid::build({65, 1.0});
  std::size_t expected = 0;
  for (int j = 0; j < g.n(); ++j) {
    for (int i = 0; i < g.n(); ++i) {
      const std::size_t k = g.index(i, j);
      bool next = false;
      const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
      for (int m = 0; m < 4; ++m) {
        const int a = i + di[m], b = j + dj[m];
        if (a >= 0 && b >= 0 && a < g.n() && b < g.n() && g.interior(g.index(a, b))) next = true;
      }
      const bool want = !g.interior(k) && next;
      CHECK(g.dirichlet(k) == want);
      expected += want;
    }
  }
  CHECK(g.report().dirichlet == expected);
  CHECK(g.report().interior + g.report().dirichlet + g.report().unused == g.size());
}

TEST_CASE("index, coordinates and centre") {
  const Grid g = Grid::build({65, 1.0});
  const std::size_t k = g.index(10, 20);
  CHECK(k == 20u * 65u + 10u);
  CHECK(g.col(k) == 10);
  CHECK(g.row(k) == 20);
  CHECK(g.coord(k).x1 == doctest::Approx(-1.0 + 10 * g.h()));
  CHECK(g.coord(k).x2 == doctest::Approx(-1.0 + 20 * g.h()));
  const Vec2 c = g.coord(g.center(), g.center());
  CHECK(c.x1 == doctest::Approx(0.0));
  CHECK(c.x2 == doctest::Approx(0.0));
  CHECK(g.interior(g.index(g.center(), g.center())));
}

TEST_CASE("mirrored angle") {
  CHECK(mirrored_angle({1.0, 0.0}) == doctest::Approx(0.0));
  CHECK(mirrored_angle({-1.0, 0.0}) == doctest::Approx(M_PI));
  CHECK(mirrored_angle({0.0, 1.0}) == doctest::Approx(M_PI / 2));
  CHECK(mirrored_angle({0.3, -0.4}) == doctest::Approx(mirrored_angle({0.3, 0.4})));
}

TEST_CASE("boundary evaluation touches only the Dirichlet layer") {
  const auto g = make_grid(65);
  const ScalarField b = evaluate_on_boundary(g, [](Vec2 x) { return 1.0 + x.x1; });
  for (std::size_t k = 0; k < g->size(); ++k) {
    if (g->dirichlet(k)) {
      CHECK(b[k] == doctest::Approx(1.0 + g->coord(k).x1));
    } else {
      CHECK(b[k] == 0.0);
    }
  }
}

TEST_CASE("every node is interior, Dirichlet or unused") {
  for (int n : {33, 65, 129}) {
    const Grid g = Grid::build({n, 1.0});
    std::size_t i = 0, d = 0, u = 0;
    for (std::size_t k = 0; k < g.size(); ++k) {
      CHECK_FALSE((g.interior(k) && g.dirichlet(k)));
      if (g.interior(k)) ++i;
      else if (g.dirichlet(k)) ++d;
      else ++u;
    }
    CHECK(i == g.report().interior);
    CHECK(d == g.report().dirichlet);
    CHECK(u == g.report().unused);
    CHECK(i + d + u == g.size());
  }
}
