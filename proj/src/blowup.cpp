#include "signorini/blowup.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "signorini/error.hpp"

namespace signorini {

namespace {

constexpr double kFitRingInner = 0.25;
constexpr double kFitRingOuter = 0.75;
constexpr double kProfileRadius = 0.5;
constexpr double kUnclassified = 0.5;

bool is_even_integer(double k) { return std::abs(k - std::round(k)) < 1e-9; }

int expected_sign(double kappa) {
  // -r^κ cos(κθ) for κ in 2N_0 + 1/2, +r^κ cos(κθ) otherwise
  const double t = (kappa - 0.5) / 2.0;
  return std::abs(t - std::round(t)) < 1e-9 ? -1 : 1;
}

struct RingSamples {
  std::vector<double> r, theta, v;
};

RingSamples ring_nodes(const ScalarField& ue) {
  const Grid& g = *ue.grid;
  RingSamples s;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (!ue.valid(k)) continue;
    const Vec2 x = g.coord(k);
    const double r = norm(x);
    if (r < kFitRingInner || r > kFitRingOuter) continue;
    s.r.push_back(r);
    s.theta.push_back(mirrored_angle(x));
    s.v.push_back(ue[k]);
  }
  return s;
}

// Least-squares misfit of v against b r^κ cos(κθ) after eliminating b.
double ring_misfit(const RingSamples& s, double kappa) {
  double vv = 0.0, vp = 0.0, pp = 0.0;
  for (std::size_t q = 0; q < s.v.size(); ++q) {
    const double phi = std::pow(s.r[q], kappa) * std::cos(kappa * s.theta[q]);
    vv += s.v[q] * s.v[q];
    vp += s.v[q] * phi;
    pp += phi * phi;
  }
  return pp > 0.0 ? vv - vp * vp / pp : vv;
}

double fit_kappa(const RingSamples& s) {
  constexpr double lo = 0.05, hi = 6.5, step = 0.01;
  double best = lo, best_val = ring_misfit(s, lo);
  for (double k = lo + step; k <= hi + 1e-12; k += step) {
    const double v = ring_misfit(s, k);
    if (v < best_val) {
      best_val = v;
      best = k;
    }
  }
  // golden-section refinement on the bracketing interval
  double a = std::max(lo, best - step), b = std::min(hi, best + step);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = ring_misfit(s, c), fd = ring_misfit(s, d);
  for (int it = 0; it < 60; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = ring_misfit(s, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = ring_misfit(s, d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> admissible_kappas() { return {0.5, 1.5, 2.0, 2.5, 3.5, 4.0, 4.5, 5.5, 6.0}; }

std::string to_string(Branch b) { return b == Branch::EvenInteger ? "even-integer" : "half-integer"; }

ScalarField even_part(const ScalarField& u) {
  const Grid& g = *u.grid;
  ScalarField out = u;
  const int c = g.center();
  for (int j = 0; j < g.n(); ++j) {
    for (int i = 0; i < g.n(); ++i) {
      out[g.index(i, j)] = 0.5 * (u.at(i, j) + u.at(i, 2 * c - j));
    }
  }
  return out;
}

ScalarField odd_part(const ScalarField& u) {
  const Grid& g = *u.grid;
  ScalarField out = u;
  const int c = g.center();
  for (int j = 0; j < g.n(); ++j) {
    for (int i = 0; i < g.n(); ++i) {
      out[g.index(i, j)] = 0.5 * (u.at(i, j) - u.at(i, 2 * c - j));
    }
  }
  return out;
}

Rescaling rescale(const ScalarField& u, double r) {
  const Grid& g = *u.grid;
  if (r < 16.0 * g.h() * (1.0 - 1e-9) || r > 0.25 + 1e-12) {
    throw DomainError("rescaling radius must lie in [16h, 0.25]");
  }
  const double H = boundary_l2(u, r);
  if (H <= 1e-24 * 2.0 * std::numbers::pi * r) throw DomainError("rescaling undefined: H(r) vanishes");
  Rescaling out;
  out.r = r;
  out.normalization = std::sqrt(H / r);
  out.field = ScalarField(u.grid, 0.0);
  out.field.full = true;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Vec2 z = g.coord(k);
    out.field[k] = interpolate(u, {r * z.x1, r * z.x2}) / out.normalization;
  }
  out.unit_circle_l2 = circle_l2_unchecked(out.field, {}, 1.0);
  return out;
}

std::pair<double, double> profile_residual(const ScalarField& rescaled, double kappa) {
  const ScalarField ue = even_part(rescaled);
  const int m = kCircleSamples;
  double vv = 0.0, vp = 0.0, pp = 0.0;
  std::vector<double> v(m), p(m);
  for (int k = 0; k < m; ++k) {
    const double th = (k + 0.5) * 2.0 * std::numbers::pi / m;
    const Vec2 x{kProfileRadius * std::cos(th), kProfileRadius * std::sin(th)};
    v[k] = interpolate(ue, x);
    p[k] = std::pow(kProfileRadius, kappa) * std::cos(kappa * mirrored_angle(x));
    vv += v[k] * v[k];
    vp += v[k] * p[k];
    pp += p[k] * p[k];
  }
  if (vv == 0.0 || pp == 0.0) return {1.0, 0.0};
  const double b = vp / pp;
  double rr = 0.0;
  for (int k = 0; k < m; ++k) rr += (v[k] - b * p[k]) * (v[k] - b * p[k]);
  return {std::sqrt(rr / vv), b};
}

double rescaling_gap(const ScalarField& u, double r1, double r2) {
  const ScalarField a = even_part(rescale(u, r1).field), b = even_part(rescale(u, r2).field);
  double num = 0.0, den = 0.0;
  for (int k = 0; k < kCircleSamples; ++k) {
    const double th = (k + 0.5) * 2.0 * std::numbers::pi / kCircleSamples;
    const Vec2 x{kProfileRadius * std::cos(th), kProfileRadius * std::sin(th)};
    const double va = interpolate(a, x), vb = interpolate(b, x);
    num += (va - vb) * (va - vb);
    den += va * va;
  }
  return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

double companion_radius(const Grid& grid, double r) {
  return 0.5 * r >= 16.0 * grid.h() * (1.0 - 1e-9) ? 0.5 * r : std::min(0.25, 2.0 * r);
}

BlowupResult classify(const ScalarField& rescaled) {
  BlowupResult res;
  const ScalarField ue = even_part(rescaled);
  res.kappa_hat = fit_kappa(ring_nodes(ue));
  double best = std::numeric_limits<double>::infinity();
  for (double kappa : admissible_kappas()) {
    const auto [resid, b] = profile_residual(rescaled, kappa);
    res.candidate_residuals.emplace_back(kappa, resid);
    if (resid < best) {
      best = resid;
      res.kappa_admissible = kappa;
      res.amplitude = b;
    }
  }
  res.profile_residual = best;
  res.classified = best <= kUnclassified;
  res.branch = is_even_integer(res.kappa_admissible) ? Branch::EvenInteger : Branch::HalfInteger;
  res.sign = res.amplitude >= 0.0 ? 1 : -1;
  res.sign_matches = res.sign == expected_sign(res.kappa_admissible);
  return res;
}

double kappa_from_frequency(const FrequencyProfile& profile, double h) {
  std::vector<std::pair<double, double>> reliable;
  for (std::size_t k = 0; k < profile.radii.size(); ++k) {
    if (profile.N[k] && profile.radii[k] >= 8.0 * h * (1.0 - 1e-9)) reliable.emplace_back(profile.radii[k], *profile.N[k]);
  }
  if (reliable.size() < 3) throw DomainError("kappa_from_frequency needs at least three reliable radii");
  std::sort(reliable.begin(), reliable.end());
  return (reliable[0].second + reliable[1].second + reliable[2].second) / 3.0;
}

}  // namespace signorini
