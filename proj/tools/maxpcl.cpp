// maxpcl: sample, export and verify maximal surfaces with planar curvature lines.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "maxpcl/errors.hpp"
#include "maxpcl/export.hpp"
#include "maxpcl/verify.hpp"

namespace {

constexpr int kExitUsage = 2;

struct FamilyFlags {
  std::string family;
  std::optional<double> t, theta, psi, delta, arg;

  void attach(CLI::App* cmd, bool required) {
    auto* f = cmd->add_option("--family", family, "theta | lambda | catlight | planedef | bonnet");
    if (required) f->required();
    cmd->add_option("--t", t, "Bonnet parameter t > 0");
    cmd->add_option("--theta", theta, "theta in [-pi/2, pi/2]");
    cmd->add_option("--psi", psi, "psi in [-pi/4, 0]");
    cmd->add_option("--delta", delta, "delta in (0, 1]");
    cmd->add_option("--arg", arg, "phase of lambda");
  }
  maxpcl::SurfaceFamily build() const { return maxpcl::make_family({family, t, theta, psi, delta, arg}); }
};

std::string with_extension(const std::string& path, const char* ext) {
  return std::filesystem::path(path).replace_extension(ext).string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal surfaces with planar curvature lines in Lorentz-Minkowski 3-space"};
  app.require_subcommand(1);

  FamilyFlags sf;
  std::string grid_text = "-2:2:41,-2:2:41";
  std::string out;
  auto* surface = app.add_subcommand("surface", "write an OBJ mesh of a catalog surface");
  sf.attach(surface, true);
  surface->add_option("--grid", grid_text, "umin:umax:nu,vmin:vmax:nv");
  surface->add_option("--out", out, "OBJ path")->required();

  FamilyFlags sg;
  std::string csv_out, json_out;
  auto* singular = app.add_subcommand("singular", "special singular points of a Bonnet surface");
  sg.attach(singular, true);
  singular->add_option("--out", csv_out, "CSV path (JSON summary next to it)")->required();
  singular->add_option("--json", json_out, "JSON summary path");

  std::string stage_name, deform_grid = "-2:2:21,-2:2:21", out_dir;
  int frames = 5;
  auto* deform = app.add_subcommand("deform", "mesh sequence along one deformation stage");
  deform->add_option("--stage", stage_name, "plane-to-cs | theta-sweep | to-light-cat | associated-loop")->required();
  deform->add_option("--frames", frames, "number of frames (>= 2)");
  deform->add_option("--grid", deform_grid, "umin:umax:nu,vmin:vmax:nv");
  deform->add_option("--out", out_dir, "output directory")->required();

  FamilyFlags vf;
  bool all = false;
  std::vector<std::string> checks;
  std::string verify_grid = "-1:1:11,-1:1:11", fault, report_out;
  auto* verify = app.add_subcommand("verify", "run the invariant suites; exit 1 on any failure");
  vf.attach(verify, false);
  verify->add_flag("--all", all, "every catalog family plus the catalog-wide suites");
  verify->add_option("--check", checks, "restrict to named checks")->check(CLI::IsMember(maxpcl::check_names()));
  verify->add_option("--grid", verify_grid, "umin:umax:nu,vmin:vmax:nv");
  verify->add_option("--inject-fault", fault, "negative control: flip-eta");
  verify->add_option("--out", report_out, "write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*surface) {
      const auto fam = sf.build();
      const auto mesh = maxpcl::sample_mesh(fam, maxpcl::GridSpec::parse(grid_text));
      maxpcl::write_obj(mesh, out);
      std::cout << fam.describe() << " [" << fam.tag() << "]: " << mesh.vertices.size() << " vertices, "
                << mesh.faces.size() << " faces -> " << out << "\n";
      return 0;
    }
    if (*singular) {
      const auto fam = sg.build();
      if (fam.kind != maxpcl::FamilyKind::Bonnet)
        throw maxpcl::InvalidFamilyParameter("singular supports the bonnet family only");
      const auto pts = maxpcl::special_points(fam);
      maxpcl::write_text(csv_out, maxpcl::singular_csv(pts));
      const std::string summary = maxpcl::singular_summary_json(fam, pts);
      maxpcl::write_text(json_out.empty() ? with_extension(csv_out, ".json") : json_out, summary);
      std::cout << summary;
      return 0;
    }
    if (*deform) {
      const auto stage = maxpcl::parse_stage(stage_name);
      const auto fr = maxpcl::run_deform(stage, frames, maxpcl::GridSpec::parse(deform_grid), out_dir);
      for (const auto& f : fr)
        std::cout << f.file << "  s=" << maxpcl::format_g9(f.s) << "  " << f.stage << "  "
                  << maxpcl::format_g9(f.parameter) << "  " << f.tag << "\n";
      return 0;
    }
    if (*verify) {
      maxpcl::VerifyOptions opt;
      opt.grid = maxpcl::GridSpec::parse(verify_grid);
      opt.checks = checks;
      opt.fault = maxpcl::parse_fault(fault);
      if (all == !vf.family.empty())
        throw maxpcl::InvalidFamilyParameter("verify needs exactly one of --all or --family");
      const maxpcl::Report rep = all ? maxpcl::run_verify_all(opt) : maxpcl::run_verify({vf.build()}, opt);
      const std::string text = rep.json();
      if (report_out.empty())
        std::cout << text;
      else
        maxpcl::write_text(report_out, text);
      if (!rep.pass()) std::cerr << "verify: some checks failed\n";
      return rep.pass() ? 0 : 1;
    }
  } catch (const maxpcl::Error& e) {
    std::cerr << "maxpcl: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
