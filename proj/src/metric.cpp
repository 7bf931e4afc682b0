#include "maxpcl/metric.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "maxpcl/errors.hpp"

namespace maxpcl {

namespace {

void require_case1(const MetricFamily& fam) {
  if (fam.kind != MetricFamily::Kind::Case1)
    throw InvalidFamilyParameter("operation needs a Case1 metric family");
}

}  // namespace

MetricFamily MetricFamily::case1(double c, double d) {
  if (!(d >= 0.0) || !std::isfinite(c) || !std::isfinite(d))
    throw InvalidFamilyParameter("Case1 requires finite c and d >= 0");
  if (c == 0.0 && d == 0.0) throw InvalidFamilyParameter("Case1 requires c^2 + d^2 != 0");
  MetricFamily m;
  m.kind = Kind::Case1;
  m.c = c;
  m.d = d;
  return m;
}

MetricFamily MetricFamily::case2(double phi) {
  if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi))
    throw InvalidFamilyParameter("Case2 requires phi in [0, 2pi)");
  MetricFamily m;
  m.kind = Kind::Case2;
  m.phi = phi;
  return m;
}

bool MetricFamily::g_vanishes() const {
  if (kind == Kind::Case1) return d == 0.0;
  return std::abs(std::sin(phi)) < 1e-15;
}

bool MetricFamily::f_vanishes() const {
  if (kind == Kind::Case1) return false;  // f(0) = 1
  return std::abs(std::cos(phi)) < 1e-15;
}

std::string MetricFamily::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (kind == Kind::Case1)
    os << "case1(c=" << c << ",d=" << d << ")";
  else
    os << "case2(phi=" << phi << ")";
  return os.str();
}

FJet eval_f(const MetricFamily& fam, double u) {
  require_case1(fam);
  const double sd = std::sqrt(fam.d);
  const double dc = fam.d - fam.c;
  if (dc == 0.0) return {sd * u + 1.0, sd, 0.0};
  if (dc > 0.0) {
    const double k = std::sqrt(dc);
    const double ch = std::cosh(k * u), sh = std::sinh(k * u);
    const double f = ch + sd / k * sh;
    return {f, k * sh + sd * ch, dc * f};
  }
  // c > d: cosh(i k u) = cos(k u), sinh(i k u)/i = sin(k u).
  const double k = std::sqrt(-dc);
  const double cs = std::cos(k * u), sn = std::sin(k * u);
  const double f = cs + sd / k * sn;
  return {f, -k * sn + sd * cs, dc * f};
}

GJet eval_g(const MetricFamily& fam, double v) {
  require_case1(fam);
  const double sd = std::sqrt(fam.d);
  const double dc = fam.d - fam.c;
  if (fam.d == 0.0) return {0.0, 0.0, 0.0};
  if (dc == 0.0) return {sd * v, sd, 0.0};
  if (dc > 0.0) {
    const double k = std::sqrt(dc);
    const double g = sd / k * std::sin(k * v);
    return {g, sd * std::cos(k * v), -dc * g};
  }
  const double k = std::sqrt(-dc);
  const double g = sd / k * std::sinh(k * v);
  return {g, sd * std::cosh(k * v), -dc * g};
}

MetricSample eval_rho(const MetricFamily& fam, double u, double v) {
  if (fam.kind == MetricFamily::Kind::Case2) {
    const double cp = std::cos(fam.phi), sp = std::sin(fam.phi);
    return {cp * u + sp * v, cp, sp, 0.0, 0.0};
  }
  const FJet f = eval_f(fam, u);
  const GJet g = eval_g(fam, v);
  const double dc = fam.d - fam.c;
  const double den = f.f_u + g.g_v;
  double rho;
  if (dc == 0.0) {
    rho = (f.f * f.f + g.g * g.g - 1.0) / den;
  } else {
    // Both quotients agree identically; take the one with the smaller
    // rounding bound (the first is 0/0 where f_u + g_v vanishes).
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double err_primary =
        std::abs(den) < 1e-12 ? std::numeric_limits<double>::infinity()
                              : eps * (f.f * f.f + g.g * g.g + 1.0) / std::abs(den);
    const double err_global = eps * (std::abs(f.f_u) + std::abs(g.g_v)) / std::abs(dc);
    rho = err_primary <= err_global ? (f.f * f.f + g.g * g.g - 1.0) / den
                                    : (f.f_u - g.g_v) / dc;
  }
  return {rho, f.f, g.g, f.f_u, g.g_v};
}

double gauss_residual(const MetricSample& s) {
  return s.rho * (s.rho_uu + s.rho_vv) - (s.rho_u * s.rho_u + s.rho_v * s.rho_v) + 1.0;
}

OdeResiduals ode_residuals(const MetricFamily& fam, const FJet& f, const GJet& g) {
  require_case1(fam);
  const double dc = fam.d - fam.c;
  return {f.f_u * f.f_u - dc * f.f * f.f - fam.c, f.f_uu - dc * f.f,
          g.g_v * g.g_v + dc * g.g * g.g - fam.d, g.g_vv + dc * g.g};
}

OdeResiduals ode_residuals(const MetricFamily& fam, double u, double v) {
  return ode_residuals(fam, eval_f(fam, u), eval_g(fam, v));
}

}  // namespace maxpcl
