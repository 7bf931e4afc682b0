#pragma once

// Weierstrass data, closed-form parametrizations, the quadrature oracle and
// the deformation path through the catalog of maxfaces with planar
// curvature lines.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "maxpcl/lorentz.hpp"
#include "maxpcl/taylor.hpp"

namespace maxpcl {

enum class FamilyKind { Theta, Lambda, CatLight, PlaneDef, Bonnet };

/// Which formula serves a Theta member.
enum class ThetaChart { A, Enneper, B, TimelikeCatenoid };

inline constexpr double kEnneperTol = 1e-6;    // |theta - pi/4| selecting the Enneper chart
inline constexpr double kEndpointTol = 1e-12;  // snapping to theta = +-pi/2, t = 1, ...
inline constexpr double kPoleTol = 1e-8;

struct SurfaceFamily {
  FamilyKind kind = FamilyKind::Bonnet;
  double param = 1.0;  // theta, arg(lambda), delta, psi or t
  Complex assoc{1.0, 0.0};  // extra associated-family factor on eta (not used by Lambda)

  static SurfaceFamily theta(double theta);
  static SurfaceFamily lambda(Complex lambda);
  static SurfaceFamily lambda_arg(double arg);
  static SurfaceFamily cat_light(double delta);
  static SurfaceFamily plane_def(double psi);
  static SurfaceFamily bonnet(double t);

  /// Total factor multiplying the base eta (lambda^-2 for Lambda).
  Complex mu() const;
  /// Hopf differential factor Q = <X_zz, N>.
  Complex hopf() const;
  /// Angle alpha such that (cos a, sin a) and (-sin a, cos a) are the
  /// curvature-line directions in the (u,v)-plane.
  double curvature_rotation() const;
  bool is_base() const;  // assoc == 1
  ThetaChart theta_chart() const;
  std::string kind_name() const;
  std::string tag() const;
  std::string describe() const;
  /// Period of the data in v, or 0 when not periodic.
  double v_period() const;
};

struct WJet {
  Complex h, h_z, h_zz, eta, eta_z;
};

/// Taylor series in z of h and eta (eta includes the associated factor).
struct WSeries {
  Taylor<Complex, 4> h;
  Taylor<Complex, 4> eta;
};

struct SurfacePoint {
  LVec3 X, X_u, X_v;
  LVec3 X_uu, X_uv, X_vv;
};

/// X and its first three derivatives along the line (u + a s, v + b s).
using DirectionalJet = std::array<LVec3, 4>;

WJet eval_weierstrass(const SurfaceFamily& fam, Complex z);
/// |h(z)|, or +inf at a pole of h.
double modulus_h(const SurfaceFamily& fam, Complex z);
WSeries weierstrass_series(const SurfaceFamily& fam, Complex z);

/// (eta, h eta, h^2 eta) in pole-free form, including the associated factor.
std::array<Complex, 3> integrand_parts(const SurfaceFamily& fam, Complex z);
/// (1 + h^2, i(1 - h^2), -2h) eta.
CVec3 weierstrass_integrand(const SurfaceFamily& fam, Complex z);
/// Holomorphic F with F' = the integrand and X = Re F.
CVec3 complex_antiderivative(const SurfaceFamily& fam, Complex z);

SurfacePoint closed_form_surface(const SurfaceFamily& fam, double u, double v);
LVec3 closed_form_position(const SurfaceFamily& fam, double u, double v);
DirectionalJet directional_jet(const SurfaceFamily& fam, double u, double v, double a, double b);

std::vector<double> legendre_nodes(int n);
std::vector<double> legendre_weights(int n);

struct QuadratureOptions {
  double tol = 1e-10;
  int max_doublings = 16;
};

/// Re of the integral along z0 -> Re z + i Im z0 -> z.
LVec3 integrate_surface(const SurfaceFamily& fam, Complex z0, Complex z, int n_nodes = 16,
                        const QuadratureOptions& opt = {});
/// Re of the integral along the polygon through the given points.
LVec3 integrate_path(const SurfaceFamily& fam, const std::vector<Complex>& path, int n_nodes = 16,
                     const QuadratureOptions& opt = {});

SurfaceFamily associated_transform(const SurfaceFamily& fam, Complex lambda);
SurfaceFamily conjugate_data(const SurfaceFamily& fam);

enum class DeformStage { PlaneToCs, ThetaSweep, ToLightCat, AssociatedLoop };
SurfaceFamily deformation_family(DeformStage stage, double s);
std::string to_string(DeformStage stage);
DeformStage parse_stage(const std::string& name);
/// The family parameter the stage assigns at s (psi, theta, delta or arg lambda).
double stage_parameter(DeformStage stage, double s);

std::vector<SurfaceFamily> default_catalog();

}  // namespace maxpcl
