#include "maxpcl/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "family_forms.hpp"
#include "maxpcl/errors.hpp"

namespace maxpcl {

using std::numbers::pi;

FirstFundamentalForm fundamental_form(const SurfacePoint& p) {
  return {minkowski_inner(p.X_u, p.X_u), minkowski_inner(p.X_u, p.X_v), minkowski_inner(p.X_v, p.X_v)};
}

LVec3 unit_normal(const LVec3& X_u, const LVec3& X_v, double tol) {
  const double E = minkowski_inner(X_u, X_u), F = minkowski_inner(X_u, X_v), G = minkowski_inner(X_v, X_v);
  const double W = E * G - F * F;
  if (E < tol || !(W > tol * tol)) throw SingularPointError("induced metric degenerates (singular point)");
  LVec3 n = lorentz_cross(X_u, X_v) / std::sqrt(W);
  if (n.x0 < 0.0) n = -n;
  return n;
}

LVec3 unit_normal(const SurfacePoint& p, double tol) { return unit_normal(p.X_u, p.X_v, tol); }

LVec3 normal_from_metric(const MetricFamily& fam, double u, double v) {
  if (fam.kind != MetricFamily::Kind::Case1) throw InvalidFamilyParameter("normal_from_metric needs Case1");
  if (fam.d == 0.0) throw DivisionBySqrtZero("d = 0: use the axial chart instead");
  if (fam.c < fam.d) throw InvalidFamilyParameter("normal_from_metric needs c >= d");
  const MetricSample s = eval_rho(fam, u, v);
  if (std::abs(s.rho) < 1e-12) throw SingularPointError("rho vanishes");
  const double a = s.rho_u / s.rho, b = s.rho_v / s.rho;
  return {-a / std::sqrt(fam.c), -b / std::sqrt(fam.d), std::sqrt(a * a / fam.c + b * b / fam.d + 1.0)};
}

double mean_curvature_fd(const SurfaceMap& X, double u, double v, double step) {
  if (!(step > 0.0)) throw InvalidFamilyParameter("step must be positive");
  const double h = step;
  const LVec3 x0 = X(u, v);
  const LVec3 xpu = X(u + h, v), xmu = X(u - h, v), xpv = X(u, v + h), xmv = X(u, v - h);
  const LVec3 Xu = (xpu - xmu) / (2 * h), Xv = (xpv - xmv) / (2 * h);
  const LVec3 Xuu = (xpu - 2.0 * x0 + xmu) / (h * h), Xvv = (xpv - 2.0 * x0 + xmv) / (h * h);
  const LVec3 Xuv = (X(u + h, v + h) - X(u + h, v - h) - X(u - h, v + h) + X(u - h, v - h)) / (4 * h * h);
  const LVec3 N = unit_normal(Xu, Xv, 1e-12);
  const double E = minkowski_inner(Xu, Xu), F = minkowski_inner(Xu, Xv), G = minkowski_inner(Xv, Xv);
  const double L = minkowski_inner(Xuu, N), M = minkowski_inner(Xuv, N), Nn = minkowski_inner(Xvv, N);
  return (G * L - 2 * F * M + E * Nn) / (2 * (E * G - F * F));
}

double mean_curvature_fd(const SurfaceFamily& fam, double u, double v, double step) {
  return mean_curvature_fd([&fam](double a, double b) { return closed_form_position(fam, a, b); }, u, v, step);
}

namespace {

double normalized_det(const LVec3& a, const LVec3& b, const LVec3& c) {
  const double n = euclidean_norm(a) * euclidean_norm(b) * euclidean_norm(c);
  if (n == 0.0) return 0.0;
  return det3(a, b, c) / n;
}

}  // namespace

PlanarityResidual planarity_residual(const SurfaceFamily& fam, double u, double v) {
  const double a = fam.curvature_rotation();
  const double ca = std::cos(a), sa = std::sin(a);
  const auto j1 = directional_jet(fam, u, v, ca, sa);
  const auto j2 = directional_jet(fam, u, v, -sa, ca);
  return {normalized_det(j1[1], j1[2], j1[3]), normalized_det(j2[1], j2[2], j2[3])};
}

PlanarityResidual planarity_residual(const SurfaceMap& X, double u, double v, double step) {
  const double h = step;
  auto derivs = [&](double du, double dv, LVec3& d1, LVec3& d2, LVec3& d3) {
    const LVec3 f0 = X(u, v);
    const LVec3 fp = X(u + h * du, v + h * dv), fm = X(u - h * du, v - h * dv);
    const LVec3 fp2 = X(u + 2 * h * du, v + 2 * h * dv), fm2 = X(u - 2 * h * du, v - 2 * h * dv);
    d1 = (fp - fm) / (2 * h);
    d2 = (fp - 2.0 * f0 + fm) / (h * h);
    d3 = (fp2 - 2.0 * fp + 2.0 * fm - fm2) / (2 * h * h * h);
  };
  LVec3 a1, a2, a3, b1, b2, b3;
  derivs(1, 0, a1, a2, a3);
  derivs(0, 1, b1, b2, b3);
  return {normalized_det(a1, a2, a3), normalized_det(b1, b2, b3)};
}

CurvatureFrame curvature_frame(const SurfaceFamily& fam, double u, double v) {
  const double a = fam.curvature_rotation();
  const double ca = std::cos(a), sa = std::sin(a);
  const auto j1 = directional_jet(fam, u, v, ca, sa);
  const auto j2 = directional_jet(fam, u, v, -sa, ca);
  const auto jd = directional_jet(fam, u, v, ca - sa, sa + ca);
  CurvatureFrame f;
  f.alpha = a;
  f.X = j1[0];
  f.X_u = j1[1];
  f.X_v = j2[1];
  f.X_uu = j1[2];
  f.X_vv = j2[2];
  f.X_uv = 0.5 * (jd[2] - j1[2] - j2[2]);
  return f;
}

LVec3 hopf_oriented_normal(const CurvatureFrame& fr) {
  LVec3 n = unit_normal(fr.X_u, fr.X_v);
  if (minkowski_inner(fr.X_uu, n) > 0.0) n = -n;
  return n;
}

std::optional<MetricPairing> metric_pairing(const SurfaceFamily& fam) {
  if (!fam.is_base()) return std::nullopt;
  switch (fam.kind) {
    case FamilyKind::Theta: {
      const double th = fam.param;
      if (fam.theta_chart() == ThetaChart::Enneper) {
        const double r = std::numbers::sqrt2 / 2;
        return MetricPairing{MetricFamily::case1(r, r)};
      }
      double c = std::sin(th), d = detail::clamped_cos(th);
      if (fam.theta_chart() == ThetaChart::TimelikeCatenoid) {
        c = -1.0;
        d = 0.0;
      }
      return MetricPairing{MetricFamily::case1(c, d)};
    }
    case FamilyKind::Lambda: {
      const double a = fam.curvature_rotation();
      double phi = std::fmod(-a, 2 * pi);
      if (phi < 0) phi += 2 * pi;
      if (phi >= 2 * pi) phi = 0.0;
      return MetricPairing{MetricFamily::case2(phi), 0.0, 1.0, a};
    }
    case FamilyKind::CatLight:
      return MetricPairing{MetricFamily::case1(0.0, fam.param * fam.param)};
    case FamilyKind::PlaneDef: {
      const double psi = fam.param;
      const double k2 = std::cos(2 * psi);
      if (psi <= -pi / 4 + kEndpointTol) return std::nullopt;  // the plane
      const double k = std::sqrt(k2);
      const double s = std::sin(psi), c = std::cos(psi);
      const double shift = 2 * psi + pi / 2 - (std::atan2(k, std::abs(s)) + pi) / k;
      return MetricPairing{MetricFamily::case1(c * c, s == 0.0 ? 0.0 : s * s), shift, k2, 0.0};
    }
    case FamilyKind::Bonnet: {
      const double t = fam.param;
      return MetricPairing{MetricFamily::case1(t * t - 1.0, t * t), -std::log(t + 1.0)};
    }
  }
  return std::nullopt;
}

MetricSample paired_sample(const MetricPairing& pair, double u, double v) {
  const double ca = std::cos(pair.rotation), sa = std::sin(pair.rotation);
  const double ut = ca * u + sa * v, vt = -sa * u + ca * v;
  return eval_rho(pair.metric, ut + pair.u_shift, vt);
}

AxialData axial_directions(const SurfaceFamily& fam, double u, double v) {
  const auto pair = metric_pairing(fam);
  if (!pair) throw InvalidFamilyParameter("no metric pairing for " + fam.describe());
  const CurvatureFrame fr = curvature_frame(fam, u, v);
  const MetricSample s = paired_sample(*pair, u, v);
  if (std::abs(s.rho) < 1e-12) throw SingularPointError("rho vanishes");
  const LVec3 N = hopf_oriented_normal(fr);
  // Undo the homothety so that rho is the metric of the surface at hand.
  const LVec3 Xu = fr.X_u / pair->scale, Xv = fr.X_v / pair->scale;
  const double r = s.rho, r2 = r * r;
  AxialData out;
  if (!pair->metric.f_vanishes()) {
    const LVec3 v1 = ((s.rho_u * s.rho_u - r * s.rho_uu) / r2) * Xu - (s.rho_u * s.rho_v / r2) * Xv + (s.rho_u / r) * N;
    out.v1 = v1;
    out.norm1 = minkowski_inner(v1, v1);
  }
  if (!pair->metric.g_vanishes()) {
    const LVec3 v2 = -(s.rho_u * s.rho_v / r2) * Xu + ((s.rho_v * s.rho_v - r * s.rho_vv) / r2) * Xv - (s.rho_v / r) * N;
    out.v2 = v2;
    out.norm2 = minkowski_inner(v2, v2);
  }
  return out;
}

double gauss_weingarten_residual(const SurfaceFamily& fam, double u, double v, double step) {
  const CurvatureFrame fr = curvature_frame(fam, u, v);
  const double a = fr.alpha, ca = std::cos(a), sa = std::sin(a);
  const double k = 2.0 * std::abs(fam.hopf());
  auto normal_at = [&](double du, double dv) {
    return hopf_oriented_normal(curvature_frame(fam, u + du, v + dv));
  };
  const LVec3 Nu = (normal_at(step * ca, step * sa) - normal_at(-step * ca, -step * sa)) / (2 * step);
  const LVec3 Nv = (normal_at(-step * sa, step * ca) - normal_at(step * sa, -step * ca)) / (2 * step);
  const double E = minkowski_inner(fr.X_u, fr.X_u);
  const double G = minkowski_inner(fr.X_v, fr.X_v);
  const double r1 = euclidean_norm(Nu - (k / E) * fr.X_u);
  const double r2 = euclidean_norm(Nv + (k / G) * fr.X_v);
  return std::max(r1, r2);
}

}  // namespace maxpcl
