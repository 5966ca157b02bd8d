#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "run.hpp"
#include "signorini/blowup.hpp"
#include "signorini/capacity.hpp"
#include "signorini/diagnostics.hpp"
#include "signorini/error.hpp"
#include "signorini/exact.hpp"
#include "signorini/svg.hpp"

namespace signorini {

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "halfline-optimal",   "cone-sweep",        "cantor-cdc",            "capacity-scaling",
      "frequency-monotonicity", "rellich-check", "mixed-bvp-barrier",     "extension-equivalence",
      "jump-obstacle",      "isolated-contact"};
  return names;
}

namespace detail {

namespace {

constexpr double kPi = std::numbers::pi;

PointFunction constant(double c) {
  return [c](Vec2) { return c; };
}

const PointFunction& h_half() {
  static const PointFunction f = exact::as_function(exact::HAlpha{0.5});
  return f;
}

int cantor_level(const Config& c) {
  const auto r = c.region();
  if (const auto* cl = std::get_if<region::CantorLine>(&r)) return cl->level;
  return 5;
}

svg::Series series(const std::string& label, const std::vector<double>& x, const std::vector<double>& y) {
  return {label, x, y};
}

std::vector<double> oscillations(const ScalarField& u, std::size_t node, const std::vector<double>& radii) {
  std::vector<double> out;
  for (double r : radii) out.push_back(oscillation(u, node, r));
  return out;
}

Json fit_json(const HolderFit& f) {
  return Json{{"exponent", f.exponent}, {"constant", f.constant}, {"r_min", f.r_min},
              {"r_max", f.r_max},       {"residual", f.residual}, {"radii_used", f.used}};
}

Json profile_summary(const FrequencyProfile& p) {
  const double n_drop = worst_drop(p.N);
  const double b_drop = worst_drop(p.beta);
  return Json{{"radii", p.radii.size()}, {"worst_N_drop", n_drop}, {"worst_beta_drop", b_drop}};
}

void halfline_optimal(Run& run) {
  const Config& c = run.cfg();
  const auto form = closed_form(c.get("boundary"));
  const PointFunction g = c.boundary();
  const double psi = c.obstacle();
  Json levels = Json::array();
  std::vector<double> hs, errs;
  Solution fine;
  GridPtr grid;
  NodeMask F;
  std::string first_csv;
  for (int n : c.resolutions()) {
    grid = make_grid(n);
    F = realize_region(*grid, c.region());
    fine = run.solve("N=" + std::to_string(n), grid, F, g, constant(psi));
    Json l{{"resolution", n}, {"h", grid->h()}, {"iterations", fine.report.iterations}};
    if (form) {
      errs.push_back(max_error(fine.u, exact::as_function(*form)));
      hs.push_back(grid->h());
      l["max_error"] = errs.back();
    }
    if (first_csv.empty()) first_csv = field_table(fine.u).str();
    levels.push_back(l);
  }
  run.results()["levels"] = levels;

  if (errs.size() >= 2) {
    bool decreasing = true;
    for (std::size_t i = 1; i < errs.size(); ++i) decreasing = decreasing && errs[i] < errs[i - 1];
    const std::size_t a = errs.size() - 2, b = errs.size() - 1;
    const double order = std::log(errs[a] / errs[b]) / std::log(hs[a] / hs[b]);
    run.results()["error_order"] = order;
    run.check("exact_recovery_order", decreasing && order >= 0.4, order, 0.4,
              "max-norm error decreases; estimated order in h between the two finest grids");
  }

  // Contact: the whole region except its two outermost node layers.
  const Grid& G = *grid;
  const ScalarField psi_f = make_obstacle(grid, F, constant(psi));
  const NodeMask contact = contact_set(fine.u, psi_f, F);
  std::size_t mismatched = 0;
  for (std::size_t k = 0; k < G.size(); ++k) {
    const bool expected = F[k] && std::abs(G.coord(k).x1) <= 1.0 - 3.0 * G.h() + 1e-12;
    if ((expected && !contact[k]) || (contact[k] && !F[k])) ++mismatched;
  }
  run.results()["contact_nodes"] = count(contact);
  run.check("contact_set", mismatched == 0, static_cast<double>(mismatched), 0.0,
            "nodes where contact differs from the region minus its outer two layers");

  const std::size_t o = origin_node(G);
  const auto fit = holder_fit(fine.u, o, 8.0 * G.h(), 0.25);
  run.results()["holder"] = fit_json(fit);
  run.check("optimal_exponent", std::abs(fit.exponent - 0.5) <= 0.05, fit.exponent, 0.05, "|kappa_hat - 1/2|");

  const auto resc = rescale(fine.u, c.blowup_radius(G));
  const auto b = classify(resc.field);
  run.results()["blowup"] = Json{{"radius", resc.r},
                                 {"kappa", b.kappa_admissible},
                                 {"kappa_hat", b.kappa_hat},
                                 {"residual", b.profile_residual},
                                 {"sign", b.sign},
                                 {"cauchy_gap", rescaling_gap(fine.u, resc.r, companion_radius(G, resc.r))}};
  run.check("blowup_solved", b.kappa_admissible == 0.5 && b.profile_residual <= 5e-2, b.profile_residual, 5e-2,
            "classified kappa " + label_number(b.kappa_admissible));

  const auto p = frequency_profile(fine.u, c.radii(G));
  run.results()["profile"] = profile_summary(p);
  run.table("field", field_table(fine.u));
  run.table("profile", profile_table(p));
  run.table("oscillation", oscillation_table(fine.u, o, p.radii));
  std::vector<double> n_values;
  for (const auto& v : p.N) n_values.push_back(v ? *v : std::nan(""));
  run.plot("field", svg::heatmap(fine.u, "u, half-line obstacle"));
  run.plot("N", svg::curves("Almgren frequency N(r)", "r", {series("N", p.radii, n_values)}, true));
  run.plot("beta", svg::curves("ACF frequency beta(r)", "r", {series("beta", p.radii, p.beta)}, true));
  run.plot("osc", svg::curves("oscillation osc(r)", "r", {series("osc", p.radii, oscillations(fine.u, o, p.radii))},
                              true, true));

  // Same input, same bytes.
  const int n0 = c.resolutions().front();
  const auto g0 = make_grid(n0);
  Solution again = run.solve("repeat N=" + std::to_string(n0), g0, realize_region(*g0, c.region()), g, constant(psi));
  const bool same = field_table(again.u).str() == first_csv;
  run.check("determinism", same, same ? 0.0 : 1.0, 0.0, "field CSV of a repeated solve is byte-identical");
}

void cone_sweep(Run& run) {
  const Config& c = run.cfg();
  const auto grid = make_grid(c.resolution());
  const std::size_t o = origin_node(*grid);
  const auto radii = log_radii(8.0 * grid->h(), 0.25, 24);
  CsvTable t({"alpha", "half_angle", "kappa_hat", "fit_residual", "max_error"});
  std::vector<svg::Series> curves;
  Json rows = Json::array();
  for (double alpha : c.alphas()) {
    const auto cone = exact::cone_for_alpha(alpha);
    const NodeMask F = realize_region(*grid, cone);
    const auto form = exact::HAlpha{alpha};
    const auto s = run.solve("alpha=" + label_number(alpha), grid, F, exact::as_function(form), constant(0.0));
    const double err = max_error(s.u, exact::as_function(form));
    const auto fit = holder_fit(s.u, o, 8.0 * grid->h(), 0.25);
    t.add({alpha, cone.half_angle, fit.exponent, fit.residual, err});
    rows.push_back(Json{{"alpha", alpha}, {"kappa_hat", fit.exponent}, {"max_error", err}});
    curves.push_back(series("alpha " + label_number(alpha), radii, oscillations(s.u, o, radii)));
    run.check("cone_exponent[alpha=" + label_number(alpha) + "]", std::abs(fit.exponent - alpha) <= 0.05,
              fit.exponent - alpha, 0.05, "kappa_hat - alpha");
  }
  run.results()["cones"] = rows;
  run.table("cone_sweep", t);
  run.plot("osc", svg::curves("oscillation osc(r) per cone", "r", curves, true, true));
}

void frequency_monotonicity(Run& run) {
  const Config& c = run.cfg();
  const auto grid = make_grid(c.resolution());
  const Grid& G = *grid;
  const auto radii = c.radii(G);
  struct Problem {
    std::string name;
    ObstacleRegion region;
    PointFunction boundary;
  };
  const std::vector<Problem> problems = {
      {"halfline", region::HalfLine{}, h_half()},
      {"generic", region::HalfLine{}, boundary_function("cos-shift:0.3")},
      {"cantor", region::CantorLine{cantor_level(c)}, h_half()},
  };
  std::vector<svg::Series> n_curves, b_curves;
  for (const auto& pr : problems) {
    const NodeMask F = realize_region(G, pr.region);
    const auto s = run.solve(pr.name, grid, F, pr.boundary, constant(0.0));
    const auto p = frequency_profile(s.u, radii);
    run.results()[pr.name] = profile_summary(p);
    run.table("profile_" + pr.name, profile_table(p));
    const double n_drop = worst_drop(p.N);
    run.check("almgren_monotone[" + pr.name + "]", n_drop >= -5e-3, n_drop, -5e-3,
              "smallest consecutive change of N(r)");
    const double slack = 5e-3 * p.beta.back();
    const double b_drop = worst_drop(p.beta);
    run.check("acf_monotone[" + pr.name + "]", b_drop >= -slack, b_drop, -slack,
              "smallest consecutive change of beta(r)");
    std::vector<double> nv;
    for (const auto& v : p.N) nv.push_back(v ? *v : std::nan(""));
    n_curves.push_back(series(pr.name, radii, nv));
    b_curves.push_back(series(pr.name, radii, p.beta));

    if (pr.name == "generic") {
      // Free boundary point on the half-line, compared with the next coarser grid.
      auto tip = [](const ScalarField& u, const NodeMask& mask) {
        const NodeMask cs = contact_set(u, make_obstacle(u.grid, mask, constant(0.0)), mask);
        double x = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < cs.size(); ++k) {
          if (cs[k]) x = std::max(x, u.grid->coord(k).x1);
        }
        return std::make_pair(count(cs), x);
      };
      const auto [nc, x_fine] = tip(s.u, F);
      const auto coarse = make_grid((G.n() + 1) / 2);
      const NodeMask Fc = realize_region(*coarse, pr.region);
      const auto sc = run.solve("generic coarse", coarse, Fc, pr.boundary, constant(0.0));
      const auto [ncc, x_coarse] = tip(sc.u, Fc);
      const bool proper = nc > 0 && nc < count(F);
      const double shift = std::abs(x_fine - x_coarse);
      run.results()["generic"]["contact_tip"] = x_fine;
      run.results()["generic"]["contact_tip_coarse"] = x_coarse;
      run.check("generic_contact", proper && ncc > 0 && shift <= 2.0 * coarse->h(), shift, 2.0 * coarse->h(),
                "proper non-empty contact; tip shift under refinement");
    }
  }

  // β of u = x1 is πr.
  const ScalarField lin = sample(grid, [](Vec2 x) { return x.x1; });
  double worst_lin = 0.0;
  for (double r : radii) {
    if (r < 16.0 * G.h()) continue;
    worst_lin = std::max(worst_lin, std::abs(acf_beta(lin, r) - kPi * r) / (kPi * r));
  }
  run.check("acf_linear_field", worst_lin <= 0.02, worst_lin, 0.02, "relative deviation of beta(r; x1) from pi r");

  // N is constant on homogeneous fields.
  CsvTable ht({"kappa", "mean_N", "stdev_N"});
  for (double kappa : {0.5, 1.0, 1.5, 2.0}) {
    const ScalarField u = sample(grid, exact::as_function(exact::make_homogeneous(kappa, 1)));
    std::vector<double> vals;
    for (double r : radii) {
      if (auto n = almgren_N(u, r)) vals.push_back(*n);
    }
    const double mean = std::accumulate(vals.begin(), vals.end(), 0.0) / vals.size();
    double var = 0.0;
    for (double v : vals) var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var / vals.size());
    ht.add({kappa, mean, sd});
    run.check("homogeneity[kappa=" + label_number(kappa) + "]", sd <= 1e-2, sd, 1e-2, "stdev of N(r)");
  }
  run.table("homogeneity", ht);
  run.plot("N", svg::curves("Almgren frequency N(r)", "r", n_curves, true));
  run.plot("beta", svg::curves("ACF frequency beta(r)", "r", b_curves, true));
}

void rellich_check(Run& run) {
  const Config& c = run.cfg();
  const auto grid = make_grid(c.resolution());
  const NodeMask F = realize_region(*grid, region::HalfLine{});
  const auto s = run.solve("halfline", grid, F, h_half(), constant(0.0));
  const auto radii = log_radii(std::max(0.1, 8.0 * grid->h()), 0.5, 12);
  CsvTable t({"r", "rellich_solved", "green_solved", "rellich_kappa_0.5", "rellich_kappa_2", "rellich_r2"});
  const ScalarField e1 = sample(grid, exact::as_function(exact::make_homogeneous(0.5, 1)));
  const ScalarField e2 = sample(grid, exact::as_function(exact::make_homogeneous(2.0, 1)));
  const ScalarField neg = sample(grid, [](Vec2 x) { return x.x1 * x.x1 + x.x2 * x.x2; });
  double ws = 0.0, wg = 0.0, w1 = 0.0, w2 = 0.0, wn = std::numeric_limits<double>::infinity();
  for (double r : radii) {
    const double ds = rellich_defect(s.u, r), dg = green_defect(s.u, r);
    const double d1 = rellich_defect(e1, r), d2 = rellich_defect(e2, r), dn = rellich_defect(neg, r);
    ws = std::max(ws, std::abs(ds));
    wg = std::max(wg, std::abs(dg));
    w1 = std::max(w1, std::abs(d1));
    w2 = std::max(w2, std::abs(d2));
    wn = std::min(wn, std::abs(dn));
    t.add({r, ds, dg, d1, d2, dn});
  }
  run.table("rellich", t);
  run.check("rellich_solved", ws <= 5e-2, ws, 5e-2, "largest relative defect for r in [0.1, 0.5]");
  run.check("green_solved", wg <= 5e-2, wg, 5e-2, "largest relative Green defect for r in [0.1, 0.5]");
  run.check("rellich_exact[kappa=0.5]", w1 <= 1e-3, w1, 1e-3, "largest relative defect");
  run.check("rellich_exact[kappa=2]", w2 <= 1e-3, w2, 1e-3, "largest relative defect");
  run.results()["negative_control_min_defect"] = wn;
  run.check("rellich_negative_control", wn >= 0.5, wn, 0.5, "|x|^2 is not harmonic; defect must stay large");
}

void mixed_bvp_barrier(Run& run) {
  const Config& c = run.cfg();
  const auto grid = make_grid(c.resolution());
  const Grid& G = *grid;
  const NodeMask line = realize_region(G, region::HalfLine{});
  auto solve = [&](const std::string& label, const exact::ClosedForm& form) {
    MixedBVPProblem p;
    p.grid = grid;
    p.dirichlet_line = line;
    p.boundary = ScalarField(grid);
    p.source = ScalarField(grid);
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (G.row(k) < G.center()) continue;
      const Vec2 x = G.coord(k);
      if (line[k] || G.dirichlet(k)) p.boundary[k] = exact::evaluate(form, x);
      if (G.interior(k) && !line[k]) p.source[k] = -exact::laplacian(form, x);
    }
    const auto t0 = std::chrono::steady_clock::now();
    Solution s = solve_mixed_bvp(p, run.params());
    run.record(label, G.h(), s.report, seconds_since(t0));
    return s;
  };

  const auto se = solve("mixed exact", exact::MixedExact{});
  const double err = max_error(se.u, exact::as_function(exact::MixedExact{}));
  run.results()["mixed_exact_error"] = err;
  run.check("mixed_exact_recovery", err <= 3e-2, err, 3e-2, "max-norm error against r^(1/2) cos(theta/2)");

  const double eps = c.epsilon();
  const auto sb = solve("barrier", exact::Barrier{eps});
  const std::size_t o = origin_node(G);
  const auto fit = holder_fit(sb.u, o, 8.0 * G.h(), 0.25);
  const double target = 0.5 - eps;
  run.results()["barrier"] = fit_json(fit);
  run.results()["barrier"]["max_error"] = max_error(sb.u, exact::as_function(exact::Barrier{eps}));
  run.check("barrier_growth", std::abs(fit.exponent - target) <= 0.05, fit.exponent - target, 0.05,
            "fitted growth exponent minus 1/2 - eps");
  run.table("barrier_field", field_table(sb.u));
  const auto radii = log_radii(8.0 * G.h(), 0.25, 24);
  run.table("barrier_oscillation", oscillation_table(sb.u, o, radii));
  run.plot("barrier", svg::heatmap(sb.u, "mixed problem, barrier data"));
}

void extension_equivalence(Run& run) {
  const Config& c = run.cfg();
  const auto grid = make_grid(c.resolution());
  const Grid& G = *grid;
  const NodeMask F = realize_region(G, region::HalfLine{});
  const auto s = run.solve("halfline", grid, F, h_half(), constant(0.0));
  auto t0 = std::chrono::steady_clock::now();
  const auto ext = extend_obstacle(s.u, run.params());
  run.record("extension", G.h(), ext.report, seconds_since(t0));

  double above = -std::numeric_limits<double>::infinity(), on_f = 0.0;
  for (std::size_t k = 0; k < G.size(); ++k) {
    if (!G.active(k) || norm(G.coord(k)) >= 0.75) continue;
    above = std::max(above, ext.psi_bar[k] - s.u[k]);
    if (F[k]) on_f = std::max(on_f, std::abs(ext.psi_bar[k]));
  }
  run.check("extension_below_solution", above <= 1e-9, above, 1e-9, "max of extended obstacle minus u on B_3/4");
  run.check("extension_on_region", on_f <= 1e-9, on_f, 1e-9, "|extended obstacle| on the region inside B_3/4");

  const auto sub = std::make_shared<const Grid>(G.restricted(0.75));
  ObstacleProblem p;
  p.grid = sub;
  p.boundary = ScalarField(sub);
  p.region = sub->interior_mask();
  p.obstacle = ScalarField(sub, kNoObstacle);
  for (std::size_t k = 0; k < G.size(); ++k) {
    if (sub->dirichlet(k)) p.boundary[k] = s.u[k];
    if (sub->interior(k)) p.obstacle[k] = ext.psi_bar[k];
  }
  t0 = std::chrono::steady_clock::now();
  const auto s2 = solve_obstacle(p, run.params());
  run.record("classical on B_3/4", sub->h(), s2.report, seconds_since(t0));
  double diff = 0.0;
  for (std::size_t k = 0; k < G.size(); ++k) {
    if (sub->interior(k)) diff = std::max(diff, std::abs(s2.u[k] - s.u[k]));
  }
  run.results()["sup_norm"] = ext.sup_norm;
  run.results()["resolve_difference"] = diff;
  run.check("extension_resolve", diff <= 1e-2, diff, 1e-2, "max |classical solution - u| on B_3/4");
  run.table("extended_obstacle", field_table(ext.psi_bar));
  run.plot("extended_obstacle", svg::heatmap(ext.psi_bar, "extended obstacle"));
}

void jump_obstacle(Run& run) {
  const Config& c = run.cfg();
  const auto grid = make_grid(c.resolution());
  const Grid& G = *grid;
  const PointFunction g = [](Vec2 x) { return 1.0 + h_half()(x) - 0.2 * (x.x1 * x.x1 - x.x2 * x.x2); };
  const auto su = run.solve("jump", grid, realize_region(G, region::FullLine{}), g,
                            [](Vec2 x) { return x.x1 <= 0.0 ? 1.0 : 0.0; });
  const auto sv = run.solve("half-line reference", grid, realize_region(G, region::HalfLine{}),
                            [g](Vec2 x) { return g(x) - 1.0; }, constant(0.0));
  double near = 0.0;
  for (std::size_t k = 0; k < G.size(); ++k) {
    if (G.active(k) && norm(G.coord(k)) <= 0.1) near = std::max(near, std::abs(su.u[k] - 1.0 - sv.u[k]));
  }
  const double limit = 10.0 * std::sqrt(G.h());
  run.results()["near_origin_difference"] = near;
  run.check("jump_near_origin", near <= limit, near, limit, "max |u - (1 + v)| on B_0.1");
  ScalarField shifted = su.u;
  for (auto& v : shifted.values) v -= 1.0;
  const auto fit = holder_fit(shifted, origin_node(G), 8.0 * G.h(), 0.25);
  run.results()["holder"] = fit_json(fit);
  run.check("jump_exponent", std::abs(fit.exponent - 0.5) <= 0.05, fit.exponent, 0.05, "|kappa_hat - 1/2| for u - 1");
  run.table("field", field_table(su.u));
  run.plot("field", svg::heatmap(shifted, "u - 1, jump obstacle"));
}

void isolated_contact(Run& run) {
  const Config& c = run.cfg();
  const auto grid = make_grid(c.resolution());
  const Grid& G = *grid;
  const double r = c.blowup_radius(G);
  CsvTable t({"input_kappa", "kappa", "kappa_hat", "residual", "sign"});
  for (auto [kappa, sign] : {std::pair{0.5, -1}, std::pair{1.5, 1}, std::pair{2.0, 1}}) {
    const ScalarField u = sample(grid, exact::as_function(exact::make_homogeneous(kappa, sign)));
    const auto b = classify(rescale(u, r).field);
    t.add({kappa, b.kappa_admissible, b.kappa_hat, b.profile_residual, double(b.sign)});
    run.check("blowup_exact[kappa=" + label_number(kappa) + "]",
              b.kappa_admissible == kappa && b.sign == sign && b.profile_residual <= 1e-3, b.profile_residual, 1e-3,
              "classified kappa " + label_number(b.kappa_admissible));
  }
  const NodeMask F = realize_region(G, region::HalfLine{});
  const auto s = run.solve("quadratic data", grid, F, boundary_function("quadratic"), constant(0.0));
  const auto b = classify(rescale(s.u, r).field);
  const auto p = frequency_profile(s.u, default_radii(G));
  double kf = std::nan("");
  try {
    kf = kappa_from_frequency(p, G.h());
  } catch (const DomainError&) {
  }
  t.add({std::nullopt, b.kappa_admissible, b.kappa_hat, b.profile_residual, double(b.sign)});
  run.results()["solved"] = Json{{"kappa", b.kappa_admissible}, {"kappa_hat", b.kappa_hat},
                                 {"cauchy_gap", rescaling_gap(s.u, r, companion_radius(G, r))},
                                 {"kappa_from_frequency", kf},  {"residual", b.profile_residual},
                                 {"branch", to_string(b.branch)}, {"sign", b.sign}};
  run.check("isolated_contact_classification",
            b.kappa_admissible == 2.0 && b.branch == Branch::EvenInteger && b.sign == 1 && b.profile_residual <= 5e-2,
            b.profile_residual, 5e-2, "classified kappa " + label_number(b.kappa_admissible));
  run.table("classification", t);
  run.table("profile", profile_table(p));
  run.plot("field", svg::heatmap(s.u, "u, quadratic data"));
}

void capacity_scaling(Run& run) {
  const Config& c = run.cfg();
  const int res = c.capacity_resolution();
  const double tol = run.params().tol;
  auto disk = [&](const std::string& label, double inner, double outer) {
    CapacityQuery q{{0.0, 0.0}, outer, disk_set({0.0, 0.0}, inner), res};
    const auto t0 = std::chrono::steady_clock::now();
    const auto cap = capacity0(q, tol);
    run.record(label, 2.0 * outer / (res - 1), cap.report, seconds_since(t0));
    return cap.value;
  };
  const double r = c.capacity_radius();
  const double value = disk("B_r in B_1", r, 1.0);
  const double radial = 2.0 * kPi / std::log(1.0 / r);
  const double rel = std::abs(value - radial) / radial;
  run.results()["disk_capacity"] = value;
  run.results()["disk_capacity_radial"] = radial;
  run.check("capacity_disk", rel <= 0.02, rel, 0.02, "relative deviation from 2 pi / ln(1/r)");

  CsvTable t({"r", "capacity"});
  std::vector<double> caps;
  for (double s : {0.1, 0.2, 0.4}) {
    caps.push_back(disk("B_r in B_2r, r=" + label_number(s), s, 2.0 * s));
    t.add({s, caps.back()});
  }
  const auto [lo, hi] = std::minmax_element(caps.begin(), caps.end());
  const double spread = (*hi - *lo) / *lo;
  run.check("capacity_scale_invariance", spread <= 0.03, spread, 0.03, "relative spread of cap(B_r; B_2r)");
  run.table("capacity_scaling", t);
}

void cantor_cdc(Run& run) {
  const Config& c = run.cfg();
  const auto grid = make_grid(c.resolution());
  const Grid& G = *grid;
  const int sub = c.capacity_resolution();
  struct Problem {
    std::string name;
    ObstacleRegion region;
    Vec2 x0;
    double radius_scale;
  };
  // -1/4 is the right end of the Cantor interval; its balls must stay inside B_1.
  const std::vector<Problem> problems = {{"halfline", region::HalfLine{}, {0.0, 0.0}, 1.0},
                                         {"cantor", region::CantorLine{cantor_level(c)}, {-0.25, 0.0}, 0.875}};
  for (const auto& pr : problems) {
    const NodeMask F = realize_region(G, pr.region);
    const auto s = run.solve(pr.name, grid, F, h_half(), constant(0.0));
    const ScalarField psi = make_obstacle(grid, F, constant(0.0));
    const NodeMask contact = contact_set(s.u, psi, F);
    std::vector<double> radii;
    for (double r : c.cdc_radii()) radii.push_back(r * pr.radius_scale);

    const auto prof = cdc_profile(G, contact, pr.x0, radii, sub);
    run.table("cdc_" + pr.name, cdc_table(prof));
    double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
    for (const auto& p : prof) {
      if (!p.reliable) continue;
      rmin = std::min(rmin, p.r);
      rmax = std::max(rmax, p.r);
    }
    const double c0 = prof.empty() ? 0.0 : prof.back().running_min;
    const bool decade = rmax >= 10.0 * rmin * (1.0 - 1e-9);
    run.check("cdc_lower_bound[" + pr.name + "]", c0 > 0.0 && decade, c0, 0.0,
              "smallest capacity over a decade of reliable radii");

    const auto mz = mazya_ratio(s.u, psi, F, pr.x0, radii, sub);
    const double slope = mazya_log_slope(mz);
    run.table("mazya_" + pr.name, mazya_table(mz));
    run.check("mazya_slope[" + pr.name + "]", std::abs(slope) <= 0.1, slope, 0.1,
              "slope of log ratio against log r");
    Json j{{"c0", c0}, {"mazya_slope", slope}};
    if (pr.name == "cantor") j["cantor_level"] = effective_cantor_level(G, cantor_level(c));
    run.results()[pr.name] = j;
  }
}

}  // namespace

void apply_experiment_defaults(Config& cfg) {
  const std::string name = cfg.experiment();
  if (name == "halfline-optimal") {
    const int n = cfg.resolution();
    cfg.set_default("resolutions", std::to_string((n + 1) / 2 | 1) + "," + std::to_string(n));
  }
  if (name == "capacity-scaling") cfg.set_default("capacity_resolution", "513");
  if (name == "cantor-cdc" || name == "frequency-monotonicity") cfg.set_default("region", "cantor:5");
}

void run_experiment(Run& run) {
  const std::string name = run.cfg().experiment();
  run.log("experiment " + name);
  if (name == "halfline-optimal") halfline_optimal(run);
  else if (name == "cone-sweep") cone_sweep(run);
  else if (name == "cantor-cdc") cantor_cdc(run);
  else if (name == "capacity-scaling") capacity_scaling(run);
  else if (name == "frequency-monotonicity") frequency_monotonicity(run);
  else if (name == "rellich-check") rellich_check(run);
  else if (name == "mixed-bvp-barrier") mixed_bvp_barrier(run);
  else if (name == "extension-equivalence") extension_equivalence(run);
  else if (name == "jump-obstacle") jump_obstacle(run);
  else if (name == "isolated-contact") isolated_contact(run);
  else throw ConfigError("unknown experiment '" + name + "'");
}

}  // namespace detail

}  // namespace signorini
