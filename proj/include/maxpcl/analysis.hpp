#pragma once

// Fundamental forms, normals, mean curvature, planarity and axial
// directions of catalog surfaces (or of any parametrized surface).

#include <functional>
#include <optional>

#include "maxpcl/catalog.hpp"
#include "maxpcl/lorentz.hpp"
#include "maxpcl/metric.hpp"

namespace maxpcl {

struct FirstFundamentalForm {
  double E, F, G;
};

using SurfaceMap = std::function<LVec3(double, double)>;

FirstFundamentalForm fundamental_form(const SurfacePoint& p);

/// Timelike unit normal with x0 > 0 (the upper sheet).
LVec3 unit_normal(const SurfacePoint& p, double tol = 1e-14);
LVec3 unit_normal(const LVec3& X_u, const LVec3& X_v, double tol = 1e-14);

/// Closed-form normal of a Case1 metric with c >= d > 0, axial directions
/// along e1 and e2.
LVec3 normal_from_metric(const MetricFamily& fam, double u, double v);

double mean_curvature_fd(const SurfaceFamily& fam, double u, double v, double step = 1e-3);
double mean_curvature_fd(const SurfaceMap& X, double u, double v, double step = 1e-3);

struct PlanarityResidual {
  double ru, rv;
};

/// Normalized det(X_s, X_ss, X_sss) along both curvature-line directions,
/// with analytic derivatives.
PlanarityResidual planarity_residual(const SurfaceFamily& fam, double u, double v);
/// Same along the coordinate directions of X, by central differences.
PlanarityResidual planarity_residual(const SurfaceMap& X, double u, double v, double step = 1e-3);

/// Partials along the curvature-line directions (cos a, sin a), (-sin a, cos a).
struct CurvatureFrame {
  double alpha;
  LVec3 X, X_u, X_v, X_uu, X_uv, X_vv;
};
CurvatureFrame curvature_frame(const SurfaceFamily& fam, double u, double v);

/// The metric family whose rho describes a catalog surface: at surface
/// coordinates (u, v) with curvature coordinates (u~, v~) (rotation by
/// `rotation`), rho_surface = scale * rho(u~ + u_shift, v~).
struct MetricPairing {
  MetricFamily metric;
  double u_shift = 0.0;
  double scale = 1.0;
  double rotation = 0.0;
};
std::optional<MetricPairing> metric_pairing(const SurfaceFamily& fam);
MetricSample paired_sample(const MetricPairing& pair, double u, double v);

struct AxialData {
  std::optional<LVec3> v1, v2;
  double norm1 = 0.0, norm2 = 0.0;
};
AxialData axial_directions(const SurfaceFamily& fam, double u, double v);

/// Max Euclidean norm of N_u - k X_u / E and N_v + k X_v / E in curvature
/// coordinates, with N differentiated numerically (k = 2|Q|).
double gauss_weingarten_residual(const SurfaceFamily& fam, double u, double v, double step = 1e-4);

/// Normal oriented so that <X_uu, N> < 0 in curvature coordinates.
LVec3 hopf_oriented_normal(const CurvatureFrame& fr);

}  // namespace maxpcl
