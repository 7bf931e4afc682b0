#pragma once

// Grid sampling, OBJ / CSV writers and the deformation sweep.

#include <optional>
#include <string>
#include <vector>

#include "maxpcl/catalog.hpp"
#include "maxpcl/singularity.hpp"

namespace maxpcl {

/// Family name plus the named parameters given on the command line.
struct FamilySpec {
  std::string family;  // theta, lambda, catlight, planedef, bonnet
  std::optional<double> t, theta, psi, delta, arg;
};

/// Parameters within this distance of a critical value (theta = 0, +-pi/2,
/// pi/4; t = 1/sqrt 2, 1; psi = -pi/4, 0; delta = 1) are snapped onto it.
inline constexpr double kSnapTol = 1e-5;

/// Throws InvalidFamilyParameter for unknown names, missing parameters or
/// parameters that do not belong to the family.
SurfaceFamily make_family(const FamilySpec& spec);

struct GridSpec {
  double u_min = -1.0, u_max = 1.0;
  double v_min = -1.0, v_max = 1.0;
  int nu = 11, nv = 11;

  /// "umin:umax:nu,vmin:vmax:nv"
  static GridSpec parse(const std::string& text);
  std::string str() const;
  void validate() const;
  double u(int i) const { return u_min + (u_max - u_min) * i / (nu - 1); }
  double v(int j) const { return v_min + (v_max - v_min) * j / (nv - 1); }
};

struct Mesh {
  std::vector<LVec3> vertices;
  std::vector<std::vector<int>> faces;  // zero-based
};

/// Closed-form surface on the grid. Vertices at poles or with non-finite
/// coordinates are dropped along with every quad that touches them.
Mesh sample_mesh(const SurfaceFamily& fam, const GridSpec& grid);

/// 9 significant digits.
std::string format_g9(double x);

std::string obj_text(const Mesh& mesh);
void write_obj(const Mesh& mesh, const std::string& path);
Mesh read_obj(const std::string& path);

std::string singular_csv(const std::vector<SingularPoint>& pts);
/// {"family": ..., "counts": {"sw","ccr","cs"}, "points": n}
std::string singular_summary_json(const SurfaceFamily& fam, const std::vector<SingularPoint>& pts);

struct FrameInfo {
  int frame = 0;
  std::string stage;
  double s = 0.0;
  double parameter = 0.0;
  std::string tag;
  std::string file;
};

/// Uniform frames s = k / (n_frames - 1) of one stage.
std::vector<FrameInfo> deform_frames(DeformStage stage, int n_frames);
std::string manifest_json(const std::vector<FrameInfo>& frames);
/// Writes frame_XXX.obj and manifest.json into out_dir (created if missing).
std::vector<FrameInfo> run_deform(DeformStage stage, int n_frames, const GridSpec& grid, const std::string& out_dir);

void write_text(const std::string& path, const std::string& text);

/// Max Euclidean distance between the two closed forms over the grid,
/// skipping nodes where either is undefined.
double sup_difference(const SurfaceFamily& a, const SurfaceFamily& b, const GridSpec& grid);

}  // namespace maxpcl
