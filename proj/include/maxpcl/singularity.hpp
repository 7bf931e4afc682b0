#pragma once

// Singular set |h| = 1, the phi / phi-hat / Phi criteria, classification of
// singular points, and per-period counts for the Bonnet family.

#include <string>
#include <utility>
#include <vector>

#include "maxpcl/catalog.hpp"

namespace maxpcl {

struct CriteriaValues {
  Complex varphi;   // h_z / (h^2 eta)
  Complex phi_hat;  // (h / h_z) varphi_z
  Complex Phi;      // (h / h_z) phi_hat_z
};

enum class SingularityClass {
  CuspidalEdge,
  Swallowtail,
  CuspidalCrossCap,
  CuspidalS1Minus,
  CuspidalButterfly,
  Degenerate
};
std::string to_string(SingularityClass c);

struct SingularPoint {
  double u = 0.0, v = 0.0;
  SingularityClass cls = SingularityClass::Degenerate;
  CriteriaValues crit{};
};

struct SingularCurve {
  std::vector<std::pair<double, double>> points;  // (u, v)
  int period_index = 0;
};

inline constexpr double kTolClass = 1e-7;

struct TraceOptions {
  double u_min = -8.0;
  double u_max = 8.0;
  int u_samples = 2048;
  double root_tol = 1e-12;
  double max_jump = 0.5;  // nearest-neighbour linking radius in u
};

/// All u with |h(u + iv)| = 1 in [u_min, u_max], by bracketing and bisection.
std::vector<double> singular_u_at(const SurfaceFamily& fam, double v, const TraceOptions& opt = {});

/// Samples n_steps values of v in [v_min, v_max] and links the roots into curves.
std::vector<SingularCurve> trace_singular_curve(const SurfaceFamily& fam, double v_min, double v_max,
                                                int n_steps, const TraceOptions& opt = {});

/// Criteria from a Taylor expansion of the data. Throws DegenerateCriteria
/// when h, eta or h_z vanish.
CriteriaValues criteria_eval(const WSeries& series);
CriteriaValues criteria_at(const SurfaceFamily& fam, Complex z);

SingularityClass classify_point(const CriteriaValues& crit, double tol_class = kTolClass);

/// Point of the Bonnet singular set with h = e^{i sigma}, v in [0, 2pi).
Complex bonnet_singular_point(double t, double sigma);

/// Every non-cuspidal-edge singular point of Bonnet(t) in one period v in [0, 2pi).
std::vector<SingularPoint> special_points(const SurfaceFamily& fam, int n_samples = 512,
                                          double tol_class = kTolClass);

struct SingularCounts {
  int sw = 0, ccr = 0, cs = 0;
  bool operator==(const SingularCounts&) const = default;
};
SingularCounts count_per_period(const SurfaceFamily& fam, int n_samples = 512);
SingularCounts count_points(const std::vector<SingularPoint>& pts);

/// Image of a class under conjugation; throws UnmappedClass for
/// Degenerate and CuspidalButterfly.
SingularityClass conjugate_classify(SingularityClass original);

struct ConjugateCounts {
  int ccr = 0, sw = 0, cb = 0;
  bool operator==(const ConjugateCounts&) const = default;
};
ConjugateCounts conjugate_counts(const SurfaceFamily& fam, int n_samples = 512);

}  // namespace maxpcl
