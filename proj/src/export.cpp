#include "maxpcl/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "maxpcl/errors.hpp"

namespace maxpcl {

namespace {

double parse_real(const std::string& s, const char* what) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || !std::isfinite(x))
    throw InvalidFamilyParameter(std::string("grid: bad ") + what + " '" + s + "'");
  return x;
}

int parse_count(const std::string& s) {
  std::size_t pos = 0;
  int n = 0;
  try {
    n = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw InvalidFamilyParameter("grid: bad node count '" + s + "'");
  return n;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double snap(double x, std::initializer_list<double> targets) {
  for (double c : targets)
    if (std::abs(x - c) <= kSnapTol) return c;
  return x;
}

}  // namespace

SurfaceFamily make_family(const FamilySpec& spec) {
  using std::numbers::pi;
  const std::string& f = spec.family;
  const std::pair<const char*, const std::optional<double>*> all[] = {
      {"t", &spec.t}, {"theta", &spec.theta}, {"psi", &spec.psi}, {"delta", &spec.delta}, {"arg", &spec.arg}};
  const char* own = f == "theta"      ? "theta"
                    : f == "lambda"   ? "arg"
                    : f == "catlight" ? "delta"
                    : f == "planedef" ? "psi"
                    : f == "bonnet"   ? "t"
                                      : nullptr;
  if (!own) throw InvalidFamilyParameter("unknown family '" + f + "' (theta, lambda, catlight, planedef, bonnet)");
  double value = 0.0;
  for (const auto& [name, opt] : all) {
    if (std::string(name) == own) {
      if (!opt->has_value()) throw InvalidFamilyParameter("family " + f + " needs --" + name);
      value = **opt;
    } else if (opt->has_value()) {
      throw InvalidFamilyParameter(std::string("--") + name + " does not apply to family " + f);
    }
  }
  if (!std::isfinite(value)) throw InvalidFamilyParameter("family parameter must be finite");
  if (f == "theta") return SurfaceFamily::theta(snap(value, {-pi / 2, 0.0, pi / 4, pi / 2}));
  if (f == "lambda") return SurfaceFamily::lambda_arg(value);
  if (f == "catlight") return SurfaceFamily::cat_light(snap(value, {1.0}));
  if (f == "planedef") return SurfaceFamily::plane_def(snap(value, {-pi / 4, 0.0}));
  return SurfaceFamily::bonnet(snap(value, {1.0 / std::numbers::sqrt2, 1.0}));
}

GridSpec GridSpec::parse(const std::string& text) {
  const auto axes = split(text, ',');
  if (axes.size() != 2) throw InvalidFamilyParameter("grid must look like umin:umax:nu,vmin:vmax:nv");
  const auto a = split(axes[0], ':'), b = split(axes[1], ':');
  if (a.size() != 3 || b.size() != 3) throw InvalidFamilyParameter("grid must look like umin:umax:nu,vmin:vmax:nv");
  GridSpec g{parse_real(a[0], "umin"), parse_real(a[1], "umax"), parse_real(b[0], "vmin"),
             parse_real(b[1], "vmax"), parse_count(a[2]), parse_count(b[2])};
  g.validate();
  return g;
}

void GridSpec::validate() const {
  if (!(u_min < u_max)) throw InvalidFamilyParameter("grid: need umin < umax");
  if (!(v_min < v_max)) throw InvalidFamilyParameter("grid: need vmin < vmax");
  if (nu < 2 || nv < 2) throw InvalidFamilyParameter("grid: need at least 2 nodes per axis");
}

std::string GridSpec::str() const {
  std::ostringstream o;
  o << format_g9(u_min) << ':' << format_g9(u_max) << ':' << nu << ',' << format_g9(v_min) << ':'
    << format_g9(v_max) << ':' << nv;
  return o.str();
}

std::string format_g9(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x == 0.0 ? 0.0 : x);  // no "-0"
  return buf;
}

Mesh sample_mesh(const SurfaceFamily& fam, const GridSpec& grid) {
  grid.validate();
  Mesh m;
  std::vector<int> index(static_cast<std::size_t>(grid.nu) * grid.nv, -1);
  for (int j = 0; j < grid.nv; ++j) {
    for (int i = 0; i < grid.nu; ++i) {
      LVec3 X;
      try {
        X = closed_form_position(fam, grid.u(i), grid.v(j));
      } catch (const PoleError&) {
        continue;
      }
      if (!is_finite(X)) continue;
      index[static_cast<std::size_t>(j) * grid.nu + i] = static_cast<int>(m.vertices.size());
      m.vertices.push_back(X);
    }
  }
  auto at = [&](int i, int j) { return index[static_cast<std::size_t>(j) * grid.nu + i]; };
  for (int j = 0; j + 1 < grid.nv; ++j) {
    for (int i = 0; i + 1 < grid.nu; ++i) {
      const int a = at(i, j), b = at(i + 1, j), c = at(i + 1, j + 1), d = at(i, j + 1);
      if (a < 0 || b < 0 || c < 0 || d < 0) continue;
      // a pole strictly inside the cell
      if (!std::isfinite(modulus_h(fam, {0.5 * (grid.u(i) + grid.u(i + 1)), 0.5 * (grid.v(j) + grid.v(j + 1))})))
        continue;
      m.faces.push_back({a, b, c, d});
    }
  }
  return m;
}

std::string obj_text(const Mesh& mesh) {
  std::string out;
  out.reserve(mesh.vertices.size() * 40 + mesh.faces.size() * 24);
  for (const auto& p : mesh.vertices) {
    out += "v " + format_g9(p.x1) + ' ' + format_g9(p.x2) + ' ' + format_g9(p.x0) + '\n';
  }
  for (const auto& f : mesh.faces) {
    out += 'f';
    for (int k : f) out += ' ' + std::to_string(k + 1);
    out += '\n';
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IOError("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IOError("failed writing '" + path + "'");
}

void write_obj(const Mesh& mesh, const std::string& path) { write_text(path, obj_text(mesh)); }

Mesh read_obj(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IOError("cannot open '" + path + "'");
  Mesh m;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    std::istringstream in(line);
    std::string tag;
    if (!(in >> tag)) continue;
    if (tag == "v") {
      LVec3 p;
      if (!(in >> p.x1 >> p.x2 >> p.x0)) throw IOError(path + ":" + std::to_string(lineno) + ": bad vertex");
      m.vertices.push_back(p);
    } else if (tag == "f") {
      std::vector<int> face;
      std::string tok;
      while (in >> tok) face.push_back(std::stoi(tok.substr(0, tok.find('/'))) - 1);
      if (face.size() < 3) throw IOError(path + ":" + std::to_string(lineno) + ": bad face");
      m.faces.push_back(std::move(face));
    }
  }
  return m;
}

std::string singular_csv(const std::vector<SingularPoint>& pts) {
  std::string out = "u,v,class,re_phi,im_phi,re_phi_hat,im_phi_hat,re_Phi,im_Phi\n";
  for (const auto& p : pts) {
    out += format_g9(p.u) + ',' + format_g9(p.v) + ',' + to_string(p.cls);
    for (Complex w : {p.crit.varphi, p.crit.phi_hat, p.crit.Phi})
      out += ',' + format_g9(w.real()) + ',' + format_g9(w.imag());
    out += '\n';
  }
  return out;
}

std::string singular_summary_json(const SurfaceFamily& fam, const std::vector<SingularPoint>& pts) {
  const SingularCounts c = count_points(pts);
  nlohmann::ordered_json j;
  j["family"] = fam.describe();
  j["tag"] = fam.tag();
  j["period"] = fam.v_period();
  j["counts"] = {{"sw", c.sw}, {"ccr", c.ccr}, {"cs", c.cs}};
  j["points"] = pts.size();
  return j.dump(2) + "\n";
}

std::vector<FrameInfo> deform_frames(DeformStage stage, int n_frames) {
  if (n_frames < 2) throw InvalidFamilyParameter("need at least 2 frames");
  std::vector<FrameInfo> frames;
  for (int k = 0; k < n_frames; ++k) {
    const double s = static_cast<double>(k) / (n_frames - 1);
    const SurfaceFamily fam = deformation_family(stage, s);
    char name[32];
    std::snprintf(name, sizeof name, "frame_%03d.obj", k);
    frames.push_back({k, to_string(stage), s, stage_parameter(stage, s), fam.tag(), name});
  }
  return frames;
}

std::string manifest_json(const std::vector<FrameInfo>& frames) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& f : frames) {
    arr.push_back({{"frame", f.frame},
                   {"stage", f.stage},
                   {"s", f.s},
                   {"parameter", f.parameter},
                   {"tag", f.tag},
                   {"file", f.file}});
  }
  nlohmann::ordered_json j;
  j["frames"] = arr;
  return j.dump(2) + "\n";
}

std::vector<FrameInfo> run_deform(DeformStage stage, int n_frames, const GridSpec& grid, const std::string& out_dir) {
  grid.validate();
  const auto frames = deform_frames(stage, n_frames);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IOError("cannot create '" + out_dir + "': " + ec.message());
  const std::filesystem::path dir(out_dir);
  for (const auto& f : frames) write_obj(sample_mesh(deformation_family(stage, f.s), grid), (dir / f.file).string());
  write_text((dir / "manifest.json").string(), manifest_json(frames));
  return frames;
}

double sup_difference(const SurfaceFamily& a, const SurfaceFamily& b, const GridSpec& grid) {
  grid.validate();
  double worst = 0.0;
  for (int j = 0; j < grid.nv; ++j) {
    for (int i = 0; i < grid.nu; ++i) {
      try {
        const LVec3 d = closed_form_position(a, grid.u(i), grid.v(j)) - closed_form_position(b, grid.u(i), grid.v(j));
        if (is_finite(d)) worst = std::max(worst, euclidean_norm(d));
      } catch (const PoleError&) {
      }
    }
  }
  return worst;
}

}  // namespace maxpcl
