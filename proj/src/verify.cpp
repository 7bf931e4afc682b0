#include "maxpcl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"
#include "maxpcl/analysis.hpp"
#include "maxpcl/errors.hpp"

namespace maxpcl {

using std::numbers::pi;

namespace {

constexpr double kRegularE = 0.25;  // H and axial checks stay this far from the singular set
constexpr double kDegenerateE = 1e-10;

CheckResult make_check(std::string name, std::string anchor, double value, double tol, int samples) {
  return {std::move(name), std::move(anchor), value, tol, samples, samples > 0 && value < tol};
}

bool wanted(const VerifyOptions& opt, const std::string& name) {
  return opt.checks.empty() || std::find(opt.checks.begin(), opt.checks.end(), name) != opt.checks.end();
}

struct GridPoint {
  double u, v;
  SurfacePoint p;
  FirstFundamentalForm I;
};

std::vector<GridPoint> sample_points(const SurfaceFamily& fam, const GridSpec& g) {
  std::vector<GridPoint> pts;
  for (int j = 0; j < g.nv; ++j) {
    for (int i = 0; i < g.nu; ++i) {
      const double u = g.u(i), v = g.v(j);
      try {
        const SurfacePoint p = closed_form_surface(fam, u, v);
        if (!is_finite(p.X) || !is_finite(p.X_u) || !is_finite(p.X_v)) continue;
        pts.push_back({u, v, p, fundamental_form(p)});
      } catch (const PoleError&) {
      }
    }
  }
  return pts;
}

double stddev(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double m = 0.0;
  for (double x : xs) m += x;
  m /= xs.size();
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / xs.size());
}

double component_stddev(const std::vector<LVec3>& vs) {
  std::vector<double> a, b, c;
  for (const auto& v : vs) {
    a.push_back(v.x1);
    b.push_back(v.x2);
    c.push_back(v.x0);
  }
  return std::max({stddev(a), stddev(b), stddev(c)});
}

LVec3 mean_of(const std::vector<LVec3>& vs) {
  LVec3 m{0, 0, 0};
  for (const auto& v : vs) m = m + v;
  return vs.empty() ? m : m / static_cast<double>(vs.size());
}

}  // namespace

Fault parse_fault(const std::string& name) {
  if (name.empty() || name == "none") return Fault::None;
  if (name == "flip-eta") return Fault::FlipEta;
  throw InvalidFamilyParameter("unknown fault '" + name + "' (flip-eta)");
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"weierstrass", "conformality", "mean_curvature", "planarity",
                                                 "gauss",       "ode",          "axial",          "singular",
                                                 "conjugate",   "metric_grid",  "deformation"};
  return names;
}

SingularCounts bonnet_expected_counts(double t) {
  if (!(t > 0)) throw InvalidFamilyParameter("Bonnet needs t > 0");
  const bool t_is_one = std::abs(t - 1.0) <= kEndpointTol;
  SingularCounts c;
  // Im phi = 0: sigma = 0, sigma = pi (lost at infinity when t = 1), cos sigma = -1/t.
  c.sw = 1 + (t_is_one ? 0 : 1) + (t > 1.0 && !t_is_one ? 2 : 0);
  // Re phi = 0: sqrt(2) t cos(sigma +- pi/4) = -1; double roots at t = 1/sqrt(2).
  const double r = std::numbers::sqrt2 * t;
  if (std::abs(r - 1.0) <= 1e-9) {
    c.cs = 2;
  } else if (r > 1.0) {
    c.ccr = t_is_one ? 2 : 4;
  }
  return c;
}

std::vector<MetricFamily> representative_metrics() {
  return {MetricFamily::case1(1, 1),     MetricFamily::case1(0, 1),      MetricFamily::case1(-1, 0.5),
          MetricFamily::case1(-1, 0),    MetricFamily::case1(2, 0.5),    MetricFamily::case1(0.5, 2),
          MetricFamily::case1(1, 0),     MetricFamily::case1(0, 0.25),   MetricFamily::case1(3, 1),
          MetricFamily::case1(-0.5, 2),  MetricFamily::case2(0.7),       MetricFamily::case2(pi / 2)};
}

MetricGridResult metric_grid_residuals(const MetricFamily& m, int n) {
  MetricGridResult r;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double u = -1.0 + 2.0 * i / (n - 1), v = -1.0 + 2.0 * j / (n - 1);
      const MetricSample s = eval_rho(m, u, v);
      if (!std::isfinite(s.rho) || std::abs(s.rho) > 1e3) continue;  // next to a pole of rho
      r.gauss = std::max(r.gauss, std::abs(gauss_residual(s)));
      if (m.kind == MetricFamily::Kind::Case1) {
        const OdeResiduals o = ode_residuals(m, u, v);
        r.ode = std::max({r.ode, std::abs(o.r1), std::abs(o.r2), std::abs(o.r3), std::abs(o.r4)});
      }
      ++r.samples;
    }
  }
  return r;
}

FamilyReport verify_family(const SurfaceFamily& fam, const VerifyOptions& opt) {
  opt.grid.validate();
  FamilyReport rep;
  rep.family = fam.describe();
  rep.tag = fam.tag();
  const auto pts = sample_points(fam, opt.grid);
  const int n = static_cast<int>(pts.size());

  if (wanted(opt, "weierstrass")) {
    double worst = 0.0;
    for (const auto& q : pts) {
      CVec3 w = weierstrass_integrand(fam, {q.u, q.v});
      if (opt.fault == Fault::FlipEta) w = Complex(-1.0) * w;
      const LVec3 re = real_part(w), im = imag_part(w);
      const double scale = std::max({1.0, euclidean_norm(re), euclidean_norm(im)});
      worst = std::max(worst, std::max(euclidean_norm(q.p.X_u - re), euclidean_norm(q.p.X_v + im)) / scale);
    }
    rep.checks.push_back(make_check("weierstrass", "X_u - i X_v = (1 + h^2, i(1 - h^2), -2h) eta", worst, 1e-8, n));
  }

  if (wanted(opt, "conformality")) {
    double worst = 0.0;
    for (const auto& q : pts)
      worst = std::max(worst, std::max(std::abs(q.I.E - q.I.G), std::abs(q.I.F)) / std::max(q.I.E, 1.0));
    rep.checks.push_back(make_check("conformality", "E = G, F = 0", worst, 1e-8, n));
  }

  if (wanted(opt, "mean_curvature")) {
    double worst = 0.0;
    int m = 0;
    for (const auto& q : pts) {
      if (q.I.E < kRegularE) continue;
      try {
        worst = std::max(worst, std::abs(mean_curvature_fd(fam, q.u, q.v, 1e-3)));
        ++m;
      } catch (const Error&) {
      }
    }
    rep.checks.push_back(make_check("mean_curvature", "H = 0 (central differences, step 1e-3)", worst, 1e-5, m));
  }

  if (wanted(opt, "planarity")) {
    double worst = 0.0;
    int m = 0;
    for (const auto& q : pts) {
      if (q.I.E < kDegenerateE) continue;  // X_s = 0 on the singular set
      ++m;
      const PlanarityResidual r = planarity_residual(fam, q.u, q.v);
      worst = std::max({worst, std::abs(r.ru), std::abs(r.rv)});
    }
    rep.checks.push_back(make_check("planarity", "det(X_s, X_ss, X_sss) = 0 along curvature lines", worst, 1e-6, m));
  }

  const auto pair = metric_pairing(fam);
  if (pair && (wanted(opt, "gauss") || wanted(opt, "ode"))) {
    double g = 0.0, o = 0.0;
    const double ca = std::cos(pair->rotation), sa = std::sin(pair->rotation);
    for (const auto& q : pts) {
      const double ut = ca * q.u + sa * q.v + pair->u_shift, vt = -sa * q.u + ca * q.v;
      g = std::max(g, std::abs(gauss_residual(paired_sample(*pair, q.u, q.v))));
      if (pair->metric.kind == MetricFamily::Kind::Case1) {
        const OdeResiduals r = ode_residuals(pair->metric, ut, vt);
        o = std::max({o, std::abs(r.r1), std::abs(r.r2), std::abs(r.r3), std::abs(r.r4)});
      }
    }
    if (wanted(opt, "gauss"))
      rep.checks.push_back(make_check("gauss", "rho (rho_uu + rho_vv) - (rho_u^2 + rho_v^2) + 1 = 0", g, 1e-10, n));
    if (wanted(opt, "ode") && pair->metric.kind == MetricFamily::Kind::Case1)
      rep.checks.push_back(make_check("ode", "f_u^2 = (d-c) f^2 + c, f_uu = (d-c) f, g_v^2 = -(d-c) g^2 + d, g_vv = -(d-c) g",
                                      o, 1e-10, n));
  }

  if (pair && wanted(opt, "axial")) {
    std::vector<LVec3> v1s, v2s;
    double worst = 0.0;
    AxialSummary ax;
    // Case2 axial directions are lightlike
    const bool c1 = pair->metric.kind == MetricFamily::Kind::Case1;
    ax.c = c1 ? pair->metric.c : 0.0;
    ax.d = c1 ? pair->metric.d : 0.0;
    for (const auto& q : pts) {
      if (q.I.E < kRegularE) continue;
      AxialData a;
      try {
        a = axial_directions(fam, q.u, q.v);
      } catch (const Error&) {
        continue;
      }
      if (a.v1) {
        v1s.push_back(*a.v1);
        worst = std::max(worst, std::abs(a.norm1 - ax.c));
      }
      if (a.v2) {
        v2s.push_back(*a.v2);
        worst = std::max(worst, std::abs(a.norm2 - ax.d));
      }
    }
    worst = std::max({worst, component_stddev(v1s), component_stddev(v2s)});
    if (!v1s.empty()) {
      const LVec3 m = mean_of(v1s);
      ax.norm1 = minkowski_inner(m, m);
      ax.causality1 = causality_of(m, 1e-7);
    }
    if (!v2s.empty()) {
      const LVec3 m = mean_of(v2s);
      ax.norm2 = minkowski_inner(m, m);
      ax.causality2 = causality_of(m, 1e-7);
    }
    rep.axial = ax;
    const int m = static_cast<int>(std::max(v1s.size(), v2s.size()));
    rep.checks.push_back(make_check("axial", "<v1, v1> = c, <v2, v2> = d, v1 and v2 constant", worst, 1e-7, m));
  }

  const bool bonnet = fam.kind == FamilyKind::Bonnet;
  if (bonnet && wanted(opt, "singular")) {
    const SingularCounts c1 = count_per_period(fam, 512), c2 = count_per_period(fam, 1024);
    rep.counts = c1;
    const bool ok = c1 == bonnet_expected_counts(fam.param) && c1 == c2;
    rep.checks.push_back(make_check("singular", "(sw, ccr, cs) per period from Im phi = 0, Re phi = 0 on |h| = 1",
                                    ok ? 0.0 : 1.0, 0.5, 1));
  }

  if (wanted(opt, "conjugate")) {
    const SurfaceFamily conj = conjugate_data(fam);
    double worst = 0.0;
    for (const auto& q : pts) {
      try {
        const FirstFundamentalForm J = fundamental_form(closed_form_surface(conj, q.u, q.v));
        const double s = std::max(q.I.E, 1.0);
        worst = std::max(worst, std::max({std::abs(J.E - q.I.E), std::abs(J.F - q.I.F), std::abs(J.G - q.I.G)}) / s);
      } catch (const PoleError&) {
      }
    }
    if (bonnet) {
      // the duality map must agree with classifying the conjugate data directly
      for (const auto& p : special_points(fam)) {
        const SingularityClass direct = classify_point(criteria_at(conj, {p.u, p.v}));
        const SingularityClass mapped = conjugate_classify(p.cls);
        const bool ok = direct == mapped ||
                        (mapped == SingularityClass::CuspidalButterfly && direct == SingularityClass::Degenerate);
        if (!ok) worst = std::max(worst, 1.0);
      }
    }
    rep.checks.push_back(make_check("conjugate", "I(conjugate) = I, SW <-> CCR, CS -> CB", worst, 1e-8, n));
  }
  return rep;
}

Report run_verify(const std::vector<SurfaceFamily>& families, const VerifyOptions& opt) {
  Report r;
  r.grid = opt.grid.str();
  r.fault = opt.fault == Fault::FlipEta ? "flip-eta" : "none";
  for (const auto& f : families) r.families.push_back(verify_family(f, opt));
  return r;
}

Report run_verify_all(const VerifyOptions& opt) {
  Report r = run_verify(default_catalog(), opt);

  if (wanted(opt, "metric_grid")) {
    double g = 0.0, o = 0.0;
    int n = 0;
    for (const auto& m : representative_metrics()) {
      const MetricGridResult res = metric_grid_residuals(m, 41);
      g = std::max(g, res.gauss);
      o = std::max(o, res.ode);
      n += res.samples;
    }
    r.suite.push_back(make_check("metric_gauss", "rho (rho_uu + rho_vv) - (rho_u^2 + rho_v^2) + 1 = 0", g, 1e-10, n));
    r.suite.push_back(make_check("metric_ode", "f_u^2 = (d-c) f^2 + c, g_v^2 = -(d-c) g^2 + d", o, 1e-10, n));
  }

  if (wanted(opt, "deformation")) {
    const GridSpec& g = opt.grid;
    const double j1 = sup_difference(deformation_family(DeformStage::PlaneToCs, 1.0),
                                     deformation_family(DeformStage::ThetaSweep, 0.0), g);
    const double j2 = sup_difference(deformation_family(DeformStage::ThetaSweep, 0.5),
                                     deformation_family(DeformStage::ToLightCat, 0.0), g);
    const double j3 = sup_difference(deformation_family(DeformStage::ToLightCat, 1.0),
                                     deformation_family(DeformStage::AssociatedLoop, 0.0), g);
    r.suite.push_back(make_check("deformation_junctions", "X_P(psi=0) = X(theta=pi/2), X_CL(delta=1) = X(theta=0)",
                                 std::max({j1, j2, j3}), 1e-9, 3 * g.nu * g.nv));

    const SurfaceFamily lim = SurfaceFamily::lambda_arg(0.0);
    const GridSpec near{-0.5, 0.5, -0.5, 0.5, 21, 21};
    const double d1 = sup_difference(SurfaceFamily::cat_light(1e-2), lim, near);
    const double d2 = sup_difference(SurfaceFamily::cat_light(5e-3), lim, near);
    // Richardson: 2 X(delta/2) - X(delta) removes the O(delta) term
    const GridSpec wide{-2, 2, -2, 2, 41, 41};
    double rich = 0.0;
    const SurfaceFamily a = SurfaceFamily::cat_light(1e-2), b = SurfaceFamily::cat_light(5e-3);
    for (int j = 0; j < wide.nv; ++j)
      for (int i = 0; i < wide.nu; ++i) {
        try {
          const double u = wide.u(i), v = wide.v(j);
          const LVec3 x = 2.0 * closed_form_position(b, u, v) - closed_form_position(a, u, v) -
                          closed_form_position(lim, u, v);
          if (is_finite(x)) rich = std::max(rich, euclidean_norm(x));
        } catch (const PoleError&) {
        }
      }
    CheckResult lc = make_check("light_cat_limit", "X_CL(delta) -> X_lambda(1) as delta -> 0", std::max(d1, rich), 1e-3,
                                near.nu * near.nv + wide.nu * wide.nv);
    lc.pass = lc.pass && d2 < d1;
    r.suite.push_back(lc);
  }
  return r;
}

bool Report::pass() const {
  for (const auto& f : families)
    for (const auto& c : f.checks)
      if (!c.pass) return false;
  for (const auto& c : suite)
    if (!c.pass) return false;
  return true;
}

namespace {

nlohmann::ordered_json check_json(const CheckResult& c) {
  return {{"name", c.name},     {"anchor", c.anchor}, {"value", c.value},
          {"tolerance", c.tolerance}, {"samples", c.samples}, {"pass", c.pass}};
}

}  // namespace

std::string Report::json() const {
  using J = nlohmann::ordered_json;
  J root;
  root["grid"] = grid;
  root["fault"] = fault;
  J fams = J::array();
  for (const auto& f : families) {
    J jf;
    jf["family"] = f.family;
    jf["tag"] = f.tag;
    J checks = J::array();
    for (const auto& c : f.checks) checks.push_back(check_json(c));
    jf["checks"] = checks;
    if (f.axial) {
      J ax;
      ax["c"] = f.axial->c;
      ax["d"] = f.axial->d;
      ax["v1_norm"] = f.axial->norm1 ? J(*f.axial->norm1) : J(nullptr);
      ax["v1_causality"] = f.axial->causality1 ? J(to_string(*f.axial->causality1)) : J(nullptr);
      ax["v2_norm"] = f.axial->norm2 ? J(*f.axial->norm2) : J(nullptr);
      ax["v2_causality"] = f.axial->causality2 ? J(to_string(*f.axial->causality2)) : J(nullptr);
      jf["axial"] = ax;
    }
    if (f.counts) jf["counts"] = {{"sw", f.counts->sw}, {"ccr", f.counts->ccr}, {"cs", f.counts->cs}};
    fams.push_back(jf);
  }
  root["families"] = fams;
  J suite_j = J::array();
  for (const auto& c : suite) suite_j.push_back(check_json(c));
  root["suite"] = suite_j;
  root["pass"] = pass();
  return root.dump(2) + "\n";
}

}  // namespace maxpcl
