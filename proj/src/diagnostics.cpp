#include "signorini/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "signorini/error.hpp"

namespace signorini {

namespace {

constexpr double kOscFloor = 1e-12;
constexpr double kContactTol = 1e-12;
constexpr int kCoverageStrips = 16;

struct Cell {
  int i = 0;
  int j = 0;
  double s = 0.0;  // fraction along x1
  double t = 0.0;  // fraction along x2
};

Cell locate(const ScalarField& u, Vec2 x) {
  const Grid& g = *u.grid;
  const double hw = g.spec().half_width;
  const double fx = (x.x1 + hw) / g.h();
  const double fy = (x.x2 + hw) / g.h();
  Cell c;
  c.i = static_cast<int>(std::floor(fx));
  c.j = static_cast<int>(std::floor(fy));
  // points on the last lattice line fall into the cell below/left
  if (c.i == g.n() - 1) --c.i;
  if (c.j == g.n() - 1) --c.j;
  if (c.i < 0 || c.j < 0 || c.i + 1 >= g.n() || c.j + 1 >= g.n()) {
    throw DomainError("interpolation point outside the lattice");
  }
  c.s = fx - c.i;
  c.t = fy - c.j;
  return c;
}

void require_valid(const ScalarField& u, int i, int j) {
  const Grid& g = *u.grid;
  if (i < 0 || j < 0 || i >= g.n() || j >= g.n() || !u.valid(g.index(i, j))) {
    throw DomainError("stencil reaches nodes without values");
  }
}

double node(const ScalarField& u, int i, int j) {
  require_valid(u, i, j);
  return u.values[u.grid->index(i, j)];
}

// Central differences; on the row x2 = 0 the x2-derivative is one-sided
// towards `side` so that a kink across the line is not averaged away.
Vec2 node_gradient(const ScalarField& u, int i, int j, int side) {
  const Grid& g = *u.grid;
  const double h = g.h();
  Vec2 d;
  d.x1 = (node(u, i + 1, j) - node(u, i - 1, j)) / (2.0 * h);
  if (j == g.center()) {
    const int s = side >= 0 ? 1 : -1;
    d.x2 = s * (-3.0 * node(u, i, j) + 4.0 * node(u, i, j + s) - node(u, i, j + 2 * s)) / (2.0 * h);
  } else {
    d.x2 = (node(u, i, j + 1) - node(u, i, j - 1)) / (2.0 * h);
  }
  return d;
}

Vec2 interpolate_gradient(const ScalarField& u, Vec2 x) {
  const Cell c = locate(u, x);
  const int side = x.x2 >= 0.0 ? 1 : -1;
  const Vec2 g00 = node_gradient(u, c.i, c.j, side);
  const Vec2 g10 = node_gradient(u, c.i + 1, c.j, side);
  const Vec2 g01 = node_gradient(u, c.i, c.j + 1, side);
  const Vec2 g11 = node_gradient(u, c.i + 1, c.j + 1, side);
  const auto mix = [&](double a, double b, double cc, double d) {
    return (1 - c.s) * (1 - c.t) * a + c.s * (1 - c.t) * b + (1 - c.s) * c.t * cc + c.s * c.t * d;
  };
  return {mix(g00.x1, g10.x1, g01.x1, g11.x1), mix(g00.x2, g10.x2, g01.x2, g11.x2)};
}

void require_radius(const Grid& g, double r, Vec2 center, double margin, const char* what) {
  const double h = g.h();
  if (!(r >= margin * h * (1.0 - 1e-12)) || norm(center) + r > 1.0 - margin * h + 1e-12) {
    throw DomainError(std::string(what) + ": radius " + std::to_string(r) + " outside the admissible range");
  }
}

// Area fraction of the cell [x0, x0+h] x [y0, y0+h] inside the disk, by a
// midpoint rule in x with the exact chord length in y.
double coverage(double x0, double y0, double h, Vec2 c, double r) {
  double acc = 0.0;
  for (int s = 0; s < kCoverageStrips; ++s) {
    const double x = x0 + (s + 0.5) * h / kCoverageStrips - c.x1;
    const double half = r * r - x * x;
    if (half <= 0.0) continue;
    const double w = std::sqrt(half);
    const double lo = std::max(y0 - c.x2, -w);
    const double hi = std::min(y0 + h - c.x2, w);
    if (hi > lo) acc += (hi - lo) / h;
  }
  return acc / kCoverageStrips;
}

}  // namespace

double interpolate(const ScalarField& u, Vec2 x) {
  const Cell c = locate(u, x);
  const double v00 = node(u, c.i, c.j);
  const double v10 = node(u, c.i + 1, c.j);
  const double v01 = node(u, c.i, c.j + 1);
  const double v11 = node(u, c.i + 1, c.j + 1);
  return (1 - c.s) * (1 - c.t) * v00 + c.s * (1 - c.t) * v10 + (1 - c.s) * c.t * v01 + c.s * c.t * v11;
}

CircleIntegrals circle_integrals_unchecked(const ScalarField& u, Vec2 center, double r, int samples) {
  CircleIntegrals out;
  const double dtheta = 2.0 * std::numbers::pi / samples;
  for (int k = 0; k < samples; ++k) {
    const double th = (k + 0.5) * dtheta;
    const Vec2 nu{std::cos(th), std::sin(th)};
    const Vec2 x{center.x1 + r * nu.x1, center.x2 + r * nu.x2};
    const double v = interpolate(u, x);
    const Vec2 g = interpolate_gradient(u, x);
    const double dn = g.x1 * nu.x1 + g.x2 * nu.x2;
    out.u2 += v * v;
    out.dnu2 += dn * dn;
    out.grad2 += g.x1 * g.x1 + g.x2 * g.x2;
    out.u_dnu += v * dn;
  }
  const double ds = r * dtheta;
  out.u2 *= ds;
  out.dnu2 *= ds;
  out.grad2 *= ds;
  out.u_dnu *= ds;
  return out;
}

double circle_l2_unchecked(const ScalarField& u, Vec2 center, double r, int samples) {
  const double dtheta = 2.0 * std::numbers::pi / samples;
  double acc = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double th = (k + 0.5) * dtheta;
    const double v = interpolate(u, {center.x1 + r * std::cos(th), center.x2 + r * std::sin(th)});
    acc += v * v;
  }
  return acc * r * dtheta;
}

double dirichlet_energy(const ScalarField& u, double r, Vec2 center) {
  const Grid& g = *u.grid;
  require_radius(g, r, center, 4.0, "dirichlet_energy");
  const double h = g.h();
  const double hw = g.spec().half_width;
  const int i_lo = std::max(0, static_cast<int>(std::floor((center.x1 - r + hw) / h)) - 1);
  const int i_hi = std::min(g.n() - 2, static_cast<int>(std::ceil((center.x1 + r + hw) / h)) + 1);
  const int j_lo = std::max(0, static_cast<int>(std::floor((center.x2 - r + hw) / h)) - 1);
  const int j_hi = std::min(g.n() - 2, static_cast<int>(std::ceil((center.x2 + r + hw) / h)) + 1);
  double total = 0.0;
  for (int j = j_lo; j <= j_hi; ++j) {
    for (int i = i_lo; i <= i_hi; ++i) {
      const Vec2 p = g.coord(i, j);
      const double dx = std::max({p.x1 - center.x1, center.x1 - p.x1 - h, 0.0});
      const double dy = std::max({p.x2 - center.x2, center.x2 - p.x2 - h, 0.0});
      if (dx * dx + dy * dy >= r * r) continue;
      const double fx = std::max(std::abs(p.x1 - center.x1), std::abs(p.x1 + h - center.x1));
      const double fy = std::max(std::abs(p.x2 - center.x2), std::abs(p.x2 + h - center.x2));
      const double w = (fx * fx + fy * fy <= r * r) ? 1.0 : coverage(p.x1, p.x2, h, center, r);
      if (w == 0.0) continue;
      const double u00 = node(u, i, j), u10 = node(u, i + 1, j);
      const double u01 = node(u, i, j + 1), u11 = node(u, i + 1, j + 1);
      const double e = 0.5 * ((u10 - u00) * (u10 - u00) + (u11 - u01) * (u11 - u01) +
                              (u01 - u00) * (u01 - u00) + (u11 - u10) * (u11 - u10));
      total += w * e;
    }
  }
  return total;
}

CircleIntegrals boundary_integrals(const ScalarField& u, double r, Vec2 center) {
  require_radius(*u.grid, r, center, 8.0, "boundary_l2");
  return circle_integrals_unchecked(u, center, r);
}

double boundary_l2(const ScalarField& u, double r, Vec2 center) { return boundary_integrals(u, r, center).u2; }

namespace {

bool below_floor(double H, double r) { return H <= 1e-24 * 2.0 * std::numbers::pi * r; }

}  // namespace

std::optional<double> almgren_N(const ScalarField& u, double r, Vec2 center) {
  const double H = boundary_l2(u, r, center);
  if (below_floor(H, r)) return std::nullopt;
  return r * dirichlet_energy(u, r, center) / H;
}

double acf_beta(const ScalarField& u, double r, Vec2 center) { return dirichlet_energy(u, r, center) / r; }

double rellich_defect(const ScalarField& u, double r, Vec2 center) {
  const CircleIntegrals ci = boundary_integrals(u, r, center);
  if (ci.grad2 == 0.0) return 0.0;
  return (ci.grad2 - 2.0 * ci.dnu2) / ci.grad2;
}

double green_defect(const ScalarField& u, double r, Vec2 center) {
  const double D = dirichlet_energy(u, r, center);
  const CircleIntegrals ci = boundary_integrals(u, r, center);
  if (D == 0.0) return 0.0;
  return (D - ci.u_dnu) / D;
}

std::vector<double> log_radii(double r_min, double r_max, int count) {
  if (count < 1 || !(r_min > 0.0) || r_max < r_min) throw ConfigError("invalid radius range");
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 1) {
    out[0] = r_min;
    return out;
  }
  const double a = std::log(r_min), b = std::log(r_max);
  for (int k = 0; k < count; ++k) out[k] = std::exp(a + (b - a) * k / (count - 1));
  out.back() = r_max;
  out.front() = r_min;
  return out;
}

std::vector<double> default_radii(const Grid& grid) { return log_radii(8.0 * grid.h(), 0.5, 48); }

FrequencyProfile frequency_profile(const ScalarField& u, const std::vector<double>& radii, Vec2 center) {
  FrequencyProfile p;
  for (double r : radii) {
    const double D = dirichlet_energy(u, r, center);
    const CircleIntegrals ci = boundary_integrals(u, r, center);
    p.radii.push_back(r);
    p.D.push_back(D);
    p.H.push_back(ci.u2);
    p.N.push_back(below_floor(ci.u2, r) ? std::nullopt : std::optional<double>(r * D / ci.u2));
    p.beta.push_back(D / r);
    p.rellich_defect.push_back(ci.grad2 == 0.0 ? 0.0 : (ci.grad2 - 2.0 * ci.dnu2) / ci.grad2);
    p.green_defect.push_back(D == 0.0 ? 0.0 : (D - ci.u_dnu) / D);
  }
  return p;
}

double oscillation(const ScalarField& u, std::size_t center_node, double r) {
  const Grid& g = *u.grid;
  const int ci = g.col(center_node), cj = g.row(center_node);
  const double u0 = u[center_node];
  const int reach = static_cast<int>(std::floor(r / g.h() + 1e-9));
  double osc = 0.0;
  for (int dj = -reach; dj <= reach; ++dj) {
    for (int di = -reach; di <= reach; ++di) {
      const int i = ci + di, j = cj + dj;
      if (i < 0 || j < 0 || i >= g.n() || j >= g.n()) continue;
      if (std::hypot(di * g.h(), dj * g.h()) > r * (1.0 + 1e-12)) continue;
      const std::size_t k = g.index(i, j);
      if (!u.valid(k)) continue;
      osc = std::max(osc, std::abs(u[k] - u0));
    }
  }
  // The circle itself, where harmonic fields take their extremes.
  const Vec2 x0 = g.coord(center_node);
  if (norm(x0) + r <= g.radius() - 2.0 * g.h()) {
    for (int q = 0; q < kCircleSamples; ++q) {
      const double t = 2.0 * std::numbers::pi * q / kCircleSamples;
      osc = std::max(osc, std::abs(interpolate(u, {x0.x1 + r * std::cos(t), x0.x2 + r * std::sin(t)}) - u0));
    }
  }
  return osc;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw DomainError("line fit needs at least two points");
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  if (sxx == 0.0) throw DomainError("line fit needs distinct abscissae");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double e = y[k] - (f.intercept + f.slope * x[k]);
    ss += e * e;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

HolderFit holder_fit(const ScalarField& u, std::size_t center_node, double r_min, double r_max, int samples) {
  const Grid& g = *u.grid;
  if (r_min < 8.0 * g.h() * (1.0 - 1e-9) || r_max > 0.5 + 1e-12 || r_max <= r_min) {
    throw DomainError("holder_fit radii must satisfy 8h <= r_min < r_max <= 0.5");
  }
  std::vector<double> lx, ly;
  for (double r : log_radii(r_min, r_max, samples)) {
    const double osc = oscillation(u, center_node, r);
    if (osc < kOscFloor) continue;
    lx.push_back(std::log(r));
    ly.push_back(std::log(osc));
  }
  HolderFit fit;
  fit.r_min = r_min;
  fit.r_max = r_max;
  fit.used = static_cast<int>(lx.size());
  if (lx.size() < 2) return fit;
  const LineFit lf = fit_line(lx, ly);
  fit.exponent = lf.slope;
  fit.constant = std::exp(lf.intercept);
  fit.residual = lf.rms;
  return fit;
}

NodeMask contact_set(const ScalarField& u, const ScalarField& psi, const NodeMask& region) {
  NodeMask out(region.size(), 0);
  for (std::size_t k = 0; k < region.size(); ++k) {
    if (region[k] && u[k] - psi[k] <= kContactTol) out[k] = 1;
  }
  return out;
}

}  // namespace signorini
