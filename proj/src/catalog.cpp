#include "maxpcl/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "family_forms.hpp"
#include "maxpcl/errors.hpp"

namespace maxpcl {

using std::numbers::pi;

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

SurfaceFamily SurfaceFamily::theta(double theta) {
  if (!(theta >= -pi / 2 - kEndpointTol && theta <= pi / 2 + kEndpointTol))
    throw InvalidFamilyParameter("theta must lie in [-pi/2, pi/2], got " + fmt(theta));
  SurfaceFamily f;
  f.kind = FamilyKind::Theta;
  f.param = std::clamp(theta, -pi / 2, pi / 2);
  return f;
}

SurfaceFamily SurfaceFamily::lambda(Complex lambda) {
  if (!(std::abs(std::abs(lambda) - 1.0) <= 1e-12))
    throw NotUnitModulus("lambda must have modulus 1, got |lambda| = " + fmt(std::abs(lambda)));
  return lambda_arg(std::arg(lambda));
}

SurfaceFamily SurfaceFamily::lambda_arg(double arg) {
  if (!std::isfinite(arg)) throw InvalidFamilyParameter("lambda phase must be finite");
  SurfaceFamily f;
  f.kind = FamilyKind::Lambda;
  f.param = arg;
  return f;
}

SurfaceFamily SurfaceFamily::cat_light(double delta) {
  if (!(delta > 0.0 && delta <= 1.0))
    throw InvalidFamilyParameter("delta must lie in (0, 1], got " + fmt(delta));
  SurfaceFamily f;
  f.kind = FamilyKind::CatLight;
  f.param = delta;
  return f;
}

SurfaceFamily SurfaceFamily::plane_def(double psi) {
  if (!(psi >= -pi / 4 - kEndpointTol && psi <= kEndpointTol))
    throw InvalidFamilyParameter("psi must lie in [-pi/4, 0], got " + fmt(psi));
  SurfaceFamily f;
  f.kind = FamilyKind::PlaneDef;
  f.param = std::clamp(psi, -pi / 4, 0.0);
  return f;
}

SurfaceFamily SurfaceFamily::bonnet(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidFamilyParameter("t must be > 0, got " + fmt(t));
  SurfaceFamily f;
  f.kind = FamilyKind::Bonnet;
  f.param = t;
  return f;
}

Complex SurfaceFamily::mu() const {
  if (kind == FamilyKind::Lambda) return std::polar(1.0, -2.0 * param);
  return assoc;
}

Complex SurfaceFamily::hopf() const {
  const double base = kind == FamilyKind::PlaneDef ? -std::cos(2.0 * param) / 2.0 : -0.5;
  return base * mu();
}

double SurfaceFamily::curvature_rotation() const {
  double a;
  if (kind == FamilyKind::Lambda) {
    a = param;
  } else {
    const Complex q = hopf();
    if (std::abs(q) == 0.0) return 0.0;
    a = (pi - std::arg(q)) / 2.0;
  }
  // Directions are defined modulo pi/2 up to swapping u and v; keep the
  // representative modulo pi in (-pi/2, pi/2].
  a = std::remainder(a, pi);
  if (a <= -pi / 2) a += pi;
  return a;
}

bool SurfaceFamily::is_base() const { return kind == FamilyKind::Lambda || assoc == Complex(1.0, 0.0); }

ThetaChart SurfaceFamily::theta_chart() const {
  if (near(param, pi / 4, kEnneperTol)) return ThetaChart::Enneper;
  if (param > pi / 4) return ThetaChart::A;
  if (param <= -pi / 2 + kEndpointTol) return ThetaChart::TimelikeCatenoid;
  return ThetaChart::B;
}

std::string SurfaceFamily::kind_name() const {
  switch (kind) {
    case FamilyKind::Theta:
      return "theta";
    case FamilyKind::Lambda:
      return "lambda";
    case FamilyKind::CatLight:
      return "catlight";
    case FamilyKind::PlaneDef:
      return "planedef";
    case FamilyKind::Bonnet:
      return "bonnet";
  }
  return "?";
}

std::string SurfaceFamily::tag() const {
  switch (kind) {
    case FamilyKind::Theta:
      switch (theta_chart()) {
        case ThetaChart::Enneper:
          return "E";
        case ThetaChart::TimelikeCatenoid:
          return "C_T";
        case ThetaChart::A:
          return near(param, pi / 2, kEndpointTol) ? "C_S" : "B_S";
        case ThetaChart::B:
          if (near(param, 0.0, kEndpointTol)) return "B_L";
          return param > 0.0 ? "B_S" : "B_T";
      }
      break;
    case FamilyKind::Lambda:
      return "C_L";
    case FamilyKind::CatLight:
      return "B_L";
    case FamilyKind::PlaneDef:
      if (near(param, -pi / 4, kEndpointTol)) return "P";
      if (near(param, 0.0, kEndpointTol)) return "C_S";
      return "B_S";
    case FamilyKind::Bonnet: {
      const double t = param;
      const double r = 1.0 / std::numbers::sqrt2;
      if (near(t, r, kEndpointTol)) return "B_T2";
      if (near(t, 1.0, kEndpointTol)) return "B_L";
      if (t < r) return "B_T1";
      if (t < 1.0) return "B_T3";
      return "B_S";
    }
  }
  return "?";
}

std::string SurfaceFamily::describe() const {
  std::string s = kind_name() + "(";
  switch (kind) {
    case FamilyKind::Theta:
      s += "theta=";
      break;
    case FamilyKind::Lambda:
      s += "arg=";
      break;
    case FamilyKind::CatLight:
      s += "delta=";
      break;
    case FamilyKind::PlaneDef:
      s += "psi=";
      break;
    case FamilyKind::Bonnet:
      s += "t=";
      break;
  }
  s += fmt(param) + ")";
  if (!is_base()) s += "*assoc(" + fmt(assoc.real()) + "," + fmt(assoc.imag()) + ")";
  return s;
}

double SurfaceFamily::v_period() const {
  switch (kind) {
    case FamilyKind::Bonnet:
      return 2.0 * pi;
    case FamilyKind::CatLight:
      return 2.0 * pi / param;
    case FamilyKind::Theta:
      if (theta_chart() == ThetaChart::TimelikeCatenoid) return 2.0 * pi;
      if (theta_chart() == ThetaChart::B) return 2.0 * pi / detail::theta_b(param).b1;
      return 0.0;
    default:
      return 0.0;
  }
}

WSeries weierstrass_series(const SurfaceFamily& fam, Complex z) {
  using T = Taylor<Complex, 4>;
  const auto he = detail::base_h_eta(fam, T::variable(z));
  return {he.h, fam.mu() * he.eta};
}

WJet eval_weierstrass(const SurfaceFamily& fam, Complex z) {
  const WSeries s = weierstrass_series(fam, z);
  return {s.h.value(), s.h.derivative(1), s.h.derivative(2), s.eta.value(), s.eta.derivative(1)};
}

double modulus_h(const SurfaceFamily& fam, Complex z) {
  try {
    return std::abs(detail::base_h_eta(fam, z).h);
  } catch (const PoleError&) {
    return std::numeric_limits<double>::infinity();
  }
}

std::array<Complex, 3> integrand_parts(const SurfaceFamily& fam, Complex z) {
  const auto p = detail::base_parts(fam, z);
  const Complex m = fam.mu();
  return {m * p.e0, m * p.e1, m * p.e2};
}

CVec3 weierstrass_integrand(const SurfaceFamily& fam, Complex z) {
  return fam.mu() * detail::integrand_from_parts(detail::base_parts(fam, z));
}

CVec3 complex_antiderivative(const SurfaceFamily& fam, Complex z) {
  return fam.mu() * detail::base_antiderivative(fam, z);
}

LVec3 closed_form_position(const SurfaceFamily& fam, double u, double v) {
  if (fam.is_base()) return detail::real_closed_form(fam, u, v);
  return real_part(complex_antiderivative(fam, Complex(u, v)));
}

DirectionalJet directional_jet(const SurfaceFamily& fam, double u, double v, double a, double b) {
  DirectionalJet jet;
  if (fam.is_base()) {
    using T = Taylor<double, 3>;
    const auto X = detail::real_closed_form(fam, T::variable(u, a), T::variable(v, b));
    for (int k = 0; k <= 3; ++k) jet[k] = {X.x1.derivative(k), X.x2.derivative(k), X.x0.derivative(k)};
    return jet;
  }
  using T = Taylor<Complex, 3>;
  const auto F = detail::base_antiderivative(fam, T::variable(Complex(u, v), Complex(a, b)));
  const Complex m = fam.mu();
  for (int k = 0; k <= 3; ++k)
    jet[k] = {(m * F.x1.derivative(k)).real(), (m * F.x2.derivative(k)).real(),
              (m * F.x0.derivative(k)).real()};
  return jet;
}

SurfacePoint closed_form_surface(const SurfaceFamily& fam, double u, double v) {
  const auto ju = directional_jet(fam, u, v, 1.0, 0.0);
  const auto jv = directional_jet(fam, u, v, 0.0, 1.0);
  const auto jd = directional_jet(fam, u, v, 1.0, 1.0);
  SurfacePoint p;
  p.X = ju[0];
  p.X_u = ju[1];
  p.X_v = jv[1];
  p.X_uu = ju[2];
  p.X_vv = jv[2];
  p.X_uv = 0.5 * (jd[2] - ju[2] - jv[2]);
  return p;
}

std::vector<double> legendre_nodes(int n) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double r = std::cos(pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = r;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * r * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (r * p1 - p0) / (r * r - 1.0);
      const double step = p1 / dp;
      r -= step;
      if (std::abs(step) < 1e-16) break;
    }
    x[static_cast<std::size_t>(i)] = r;
  }
  std::sort(x.begin(), x.end());
  return x;
}

std::vector<double> legendre_weights(int n) {
  const auto x = legendre_nodes(n);
  std::vector<double> w(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double p0 = 1.0, p1 = x[i];
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x[i] * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = n * (x[i] * p1 - p0) / (x[i] * x[i] - 1.0);
    w[i] = 2.0 / ((1.0 - x[i] * x[i]) * dp * dp);
  }
  return w;
}

namespace {

struct Rule {
  std::vector<double> x, w;
};

CVec3 integrate_segment_panels(const SurfaceFamily& fam, Complex a, Complex b, int panels, const Rule& rule) {
  CVec3 acc;
  const Complex step = (b - a) / static_cast<double>(panels);
  for (int p = 0; p < panels; ++p) {
    const Complex mid = a + step * (p + 0.5);
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const Complex z = mid + step * (0.5 * rule.x[i]);
      const auto p3 = detail::base_parts(fam, z);
      const CVec3 f = detail::integrand_from_parts(p3);
      if (!std::isfinite(std::abs(f.x1)) || !std::isfinite(std::abs(f.x2)) || !std::isfinite(std::abs(f.x0)))
        throw PoleOnPathError("integrand is not finite on the path at z = (" + fmt(z.real()) + ", " +
                              fmt(z.imag()) + ")");
      acc += (0.5 * rule.w[i]) * f;
    }
  }
  return step * acc;
}

double cdist(const CVec3& a, const CVec3& b) {
  return std::max({std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2), std::abs(a.x0 - b.x0)});
}

double cnorm(const CVec3& a) { return std::max({std::abs(a.x1), std::abs(a.x2), std::abs(a.x0)}); }

}  // namespace

LVec3 integrate_path(const SurfaceFamily& fam, const std::vector<Complex>& path, int n_nodes,
                     const QuadratureOptions& opt) {
  if (n_nodes < 8) throw InvalidFamilyParameter("n_nodes must be >= 8");
  const Rule rule{legendre_nodes(n_nodes), legendre_weights(n_nodes)};
  CVec3 total;
  for (std::size_t s = 1; s < path.size(); ++s) {
    const Complex a = path[s - 1], b = path[s];
    const double len = std::abs(b - a);
    if (len == 0.0) continue;
    int panels = std::max(1, static_cast<int>(std::ceil(len)));
    CVec3 prev = integrate_segment_panels(fam, a, b, panels, rule);
    bool converged = false;
    for (int k = 0; k < opt.max_doublings; ++k) {
      panels *= 2;
      const CVec3 next = integrate_segment_panels(fam, a, b, panels, rule);
      const bool ok = cdist(next, prev) <= opt.tol * std::max(1.0, cnorm(next));
      prev = next;
      if (ok) {
        converged = true;
        break;
      }
    }
    if (!converged) throw QuadratureDivergence("quadrature did not converge on a path segment");
    total += prev;
  }
  return real_part(fam.mu() * total);
}

LVec3 integrate_surface(const SurfaceFamily& fam, Complex z0, Complex z, int n_nodes,
                        const QuadratureOptions& opt) {
  return integrate_path(fam, {z0, Complex(z.real(), z0.imag()), z}, n_nodes, opt);
}

SurfaceFamily associated_transform(const SurfaceFamily& fam, Complex lambda) {
  if (!(std::abs(std::abs(lambda) - 1.0) <= 1e-12))
    throw NotUnitModulus("lambda must have modulus 1, got |lambda| = " + fmt(std::abs(lambda)));
  SurfaceFamily r = fam;
  if (fam.kind == FamilyKind::Lambda) {
    r.param = fam.param + std::arg(lambda);
  } else {
    const Complex l2 = lambda * lambda;
    r.assoc = fam.assoc * (std::conj(l2) / std::norm(l2));
  }
  return r;
}

SurfaceFamily conjugate_data(const SurfaceFamily& fam) {
  // lambda^-2 = -i, applied exactly.
  SurfaceFamily r = fam;
  if (fam.kind == FamilyKind::Lambda)
    r.param = fam.param + pi / 4;
  else
    r.assoc = fam.assoc * Complex(0.0, -1.0);
  return r;
}

double stage_parameter(DeformStage stage, double s) {
  switch (stage) {
    case DeformStage::PlaneToCs:
      return -pi / 4 + s * pi / 4;
    case DeformStage::ThetaSweep:
      return pi / 2 - s * pi;
    case DeformStage::ToLightCat:
      return 1.0 - s;
    case DeformStage::AssociatedLoop:
      return pi * s;
  }
  return 0.0;
}

SurfaceFamily deformation_family(DeformStage stage, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw InvalidFamilyParameter("stage parameter s must lie in [0, 1]");
  const double p = stage_parameter(stage, s);
  switch (stage) {
    case DeformStage::PlaneToCs:
      return SurfaceFamily::plane_def(p);
    case DeformStage::ThetaSweep:
      return SurfaceFamily::theta(p);
    case DeformStage::ToLightCat:
      // The delta -> 0 limit is the lightlike catenoid.
      return p > 0.0 ? SurfaceFamily::cat_light(p) : SurfaceFamily::lambda_arg(0.0);
    case DeformStage::AssociatedLoop:
      return SurfaceFamily::lambda_arg(p);
  }
  throw InvalidFamilyParameter("unknown stage");
}

std::string to_string(DeformStage stage) {
  switch (stage) {
    case DeformStage::PlaneToCs:
      return "plane-to-cs";
    case DeformStage::ThetaSweep:
      return "theta-sweep";
    case DeformStage::ToLightCat:
      return "to-light-cat";
    case DeformStage::AssociatedLoop:
      return "associated-loop";
  }
  return "?";
}

DeformStage parse_stage(const std::string& name) {
  for (auto s : {DeformStage::PlaneToCs, DeformStage::ThetaSweep, DeformStage::ToLightCat,
                 DeformStage::AssociatedLoop})
    if (to_string(s) == name) return s;
  throw InvalidFamilyParameter("unknown deformation stage '" + name +
                               "' (plane-to-cs, theta-sweep, to-light-cat, associated-loop)");
}

std::vector<SurfaceFamily> default_catalog() {
  using F = SurfaceFamily;
  return {F::theta(pi / 2),       F::theta(1.2),          F::theta(pi / 4),      F::theta(0.5),
          F::theta(0.0),          F::theta(-0.7),         F::theta(-pi / 2),     F::lambda_arg(0.0),
          F::lambda_arg(pi / 4),  F::cat_light(0.5),      F::cat_light(1.0),     F::plane_def(-pi / 4),
          F::plane_def(-0.3),     F::plane_def(0.0),      F::bonnet(0.5),        F::bonnet(1.0 / std::numbers::sqrt2),
          F::bonnet(0.85),        F::bonnet(1.0),         F::bonnet(2.0)};
}

}  // namespace maxpcl
