#pragma once

// The invariant suites behind `verify`: per-family checks on a grid plus the
// catalog-wide metric, deformation and determinism checks.

#include <optional>
#include <string>
#include <vector>

#include "maxpcl/export.hpp"
#include "maxpcl/metric.hpp"

namespace maxpcl {

struct CheckResult {
  std::string name;
  std::string anchor;  // the identity being checked, as a formula
  double value = 0.0;  // worst residual over the points sampled
  double tolerance = 0.0;
  int samples = 0;
  bool pass = false;
};

struct AxialSummary {
  double c = 0.0, d = 0.0;
  std::optional<double> norm1, norm2;  // grid mean of <v_i, v_i>
  std::optional<Causality> causality1, causality2;
};

struct FamilyReport {
  std::string family;
  std::string tag;
  std::vector<CheckResult> checks;
  std::optional<AxialSummary> axial;
  std::optional<SingularCounts> counts;
};

struct Report {
  std::string grid;
  std::string fault;
  std::vector<FamilyReport> families;
  std::vector<CheckResult> suite;
  bool pass() const;
  /// Fixed key order and number formatting.
  std::string json() const;
};

enum class Fault { None, FlipEta };
Fault parse_fault(const std::string& name);

struct VerifyOptions {
  GridSpec grid{};
  std::vector<std::string> checks;  // empty = every check
  Fault fault = Fault::None;
};

/// Names accepted by VerifyOptions::checks.
const std::vector<std::string>& check_names();

FamilyReport verify_family(const SurfaceFamily& fam, const VerifyOptions& opt = {});
Report run_verify(const std::vector<SurfaceFamily>& families, const VerifyOptions& opt = {});
/// Every catalog family plus the metric-grid and deformation suites.
Report run_verify_all(const VerifyOptions& opt = {});

/// Worst Gauss / ODE residuals of a metric on an n x n grid over [-1, 1]^2.
struct MetricGridResult {
  double gauss = 0.0;
  double ode = 0.0;
  int samples = 0;
};
MetricGridResult metric_grid_residuals(const MetricFamily& m, int n = 41);
std::vector<MetricFamily> representative_metrics();

/// SW / CCR / CS per period of Bonnet(t), from the explicit solutions of
/// Im phi = 0 and Re phi = 0 on |h| = 1.
SingularCounts bonnet_expected_counts(double t);

}  // namespace maxpcl
