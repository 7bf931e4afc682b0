#pragma once

// Closed-form metric functions rho(u,v) with planar curvature lines and the
// residual evaluators used to check them.

#include <string>

namespace maxpcl {

struct MetricFamily {
  enum class Kind { Case1, Case2 };
  Kind kind = Kind::Case1;
  double c = 0.0;
  double d = 1.0;
  double phi = 0.0;

  /// Throws InvalidFamilyParameter unless d >= 0 and (c, d) != (0, 0).
  static MetricFamily case1(double c, double d);
  /// Throws InvalidFamilyParameter unless phi in [0, 2pi).
  static MetricFamily case2(double phi);

  bool g_vanishes() const;  // v2 absent
  bool f_vanishes() const;  // v1 absent
  std::string describe() const;
};

struct FJet {
  double f, f_u, f_uu;
};
struct GJet {
  double g, g_v, g_vv;
};

struct MetricSample {
  double rho, rho_u, rho_v, rho_uu, rho_vv;
};

struct OdeResiduals {
  double r1, r2, r3, r4;
};

FJet eval_f(const MetricFamily& fam, double u);
GJet eval_g(const MetricFamily& fam, double v);
MetricSample eval_rho(const MetricFamily& fam, double u, double v);

double gauss_residual(const MetricSample& s);

OdeResiduals ode_residuals(const MetricFamily& fam, double u, double v);
/// Residuals for externally supplied f and g (perturbation checks).
OdeResiduals ode_residuals(const MetricFamily& fam, const FJet& f, const GJet& g);

}  // namespace maxpcl
