#include "signorini/exact.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "signorini/error.hpp"

namespace signorini::exact {

namespace {

bool is_quarter_mod_two(double kappa) {
  // kappa in 2N_0 + 1/2
  const double t = (kappa - 0.5) / 2.0;
  return t >= -1e-12 && std::abs(t - std::round(t)) < 1e-12;
}

// r^a cos(b θ) with θ the mirrored angle; Δ = (a² - b²) r^{a-2} cos(bθ)
double power_cos(Vec2 x, double a, double b) {
  const double r = norm(x);
  if (r == 0.0) return a > 0.0 ? 0.0 : 1.0;
  return std::pow(r, a) * std::cos(b * mirrored_angle(x));
}

double power_cos_laplacian(Vec2 x, double a, double b) {
  const double r = norm(x);
  if (r == 0.0) throw DomainError("laplacian undefined at the origin");
  return (a * a - b * b) * std::pow(r, a - 2.0) * std::cos(b * mirrored_angle(x));
}

}  // namespace

void validate(const ClosedForm& form) {
  if (const auto* f = std::get_if<HAlpha>(&form)) {
    if (!(f->alpha >= 0.5 && f->alpha <= 1.0)) throw ConfigError("h_alpha needs alpha in [1/2, 1]");
  } else if (const auto* f = std::get_if<Homogeneous>(&form)) {
    if (!(f->kappa > 0.0)) throw ConfigError("homogeneous degree must be positive");
    if (f->sign != 1 && f->sign != -1) throw ConfigError("homogeneous sign must be +1 or -1");
    if (f->sign < 0 && !is_quarter_mod_two(f->kappa)) {
      throw ConfigError("negative homogeneous profile requires kappa in 2N_0 + 1/2");
    }
  } else if (const auto* f = std::get_if<Barrier>(&form)) {
    if (!(f->eps > 0.0 && f->eps < 0.5)) throw ConfigError("barrier needs eps in (0, 1/2)");
  }
}

Homogeneous make_homogeneous(double kappa, int sign) {
  Homogeneous h{kappa, sign};
  validate(h);
  return h;
}

double evaluate(const ClosedForm& form, Vec2 x) {
  struct V {
    Vec2 x;
    double operator()(const HAlpha& f) const { return -power_cos(x, f.alpha, f.alpha); }
    double operator()(const Homogeneous& f) const { return f.sign * power_cos(x, f.kappa, f.kappa); }
    double operator()(const Barrier& f) const { return power_cos(x, 0.5 - f.eps, 0.5 * (1.0 - f.eps)); }
    double operator()(const MixedExact&) const { return power_cos(x, 0.5, 0.5); }
  };
  return std::visit(V{x}, form);
}

double laplacian(const ClosedForm& form, Vec2 x) {
  struct V {
    Vec2 x;
    double operator()(const HAlpha& f) const { return -power_cos_laplacian(x, f.alpha, f.alpha); }
    double operator()(const Homogeneous& f) const { return f.sign * power_cos_laplacian(x, f.kappa, f.kappa); }
    double operator()(const Barrier& f) const {
      // -Δh = (ε/2 - 3ε²/4) r^{-3/2-ε} cos((1-ε)θ/2)
      const double r = norm(x);
      if (r == 0.0) throw DomainError("laplacian undefined at the origin");
      const double c = 0.5 * f.eps - 0.75 * f.eps * f.eps;
      return -c * std::pow(r, -1.5 - f.eps) * std::cos(0.5 * (1.0 - f.eps) * mirrored_angle(x));
    }
    double operator()(const MixedExact&) const { return power_cos_laplacian(x, 0.5, 0.5); }
  };
  return std::visit(V{x}, form);
}

region::Cone cone_for_alpha(double alpha) {
  if (!(alpha >= 0.5 && alpha <= 1.0)) throw ConfigError("cone_for_alpha needs alpha in [1/2, 1]");
  return region::Cone{std::numbers::pi * (1.0 - 1.0 / (2.0 * alpha))};
}

PointFunction as_function(const ClosedForm& form) {
  validate(form);
  return [form](Vec2 x) { return evaluate(form, x); };
}

PointFunction angular_trace(const ClosedForm& form) {
  validate(form);
  return [form](Vec2 x) {
    const double r = norm(x);
    if (r == 0.0) return evaluate(form, {1.0, 0.0});
    return evaluate(form, {x.x1 / r, x.x2 / r});
  };
}

std::string describe(const ClosedForm& form) {
  struct V {
    std::string operator()(const HAlpha& f) const { return "h_alpha(" + num(f.alpha) + ")"; }
    std::string operator()(const Homogeneous& f) const {
      return std::string(f.sign < 0 ? "-" : "") + "r^k cos(k theta), k=" + num(f.kappa);
    }
    std::string operator()(const Barrier& f) const { return "barrier(eps=" + num(f.eps) + ")"; }
    std::string operator()(const MixedExact&) const { return "r^1/2 cos(theta/2)"; }
    static std::string num(double v) {
      std::ostringstream s;
      s.precision(6);
      s << v;
      return s.str();
    }
  };
  return std::visit(V{}, form);
}

}  // namespace signorini::exact
