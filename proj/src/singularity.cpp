#include "maxpcl/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "maxpcl/errors.hpp"

namespace maxpcl {

using std::numbers::pi;

std::string to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::CuspidalEdge: return "cuspidal_edge";
    case SingularityClass::Swallowtail: return "swallowtail";
    case SingularityClass::CuspidalCrossCap: return "cuspidal_cross_cap";
    case SingularityClass::CuspidalS1Minus: return "cuspidal_s1_minus";
    case SingularityClass::CuspidalButterfly: return "cuspidal_butterfly";
    case SingularityClass::Degenerate: return "degenerate";
  }
  return "unknown";
}

namespace {

double wrap_period(double v) {
  double r = std::fmod(v, 2 * pi);
  if (r < 0) r += 2 * pi;
  if (r >= 2 * pi - 1e-11) r = 0.0;  // -0 from a rounded log lands here
  return r;
}

double singular_gap(const SurfaceFamily& fam, double u, double v) {
  const double m = modulus_h(fam, {u, v});
  if (!std::isfinite(m)) return std::numeric_limits<double>::infinity();
  return m * m - 1.0;
}

template <class F>
double bisect(F&& f, double a, double b, double fa, double tol) {
  for (int it = 0; it < 200 && std::abs(b - a) > tol; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

bool opposite(double a, double b) {
  return std::isfinite(a) && std::isfinite(b) && ((a < 0 && b > 0) || (a > 0 && b < 0) || a == 0.0);
}

}  // namespace

std::vector<double> singular_u_at(const SurfaceFamily& fam, double v, const TraceOptions& opt) {
  if (!(opt.u_max > opt.u_min) || opt.u_samples < 2) throw InvalidFamilyParameter("bad u range");
  std::vector<double> roots;
  const int n = opt.u_samples;
  const double du = (opt.u_max - opt.u_min) / (n - 1);
  auto g = [&](double u) { return singular_gap(fam, u, v); };
  double ua = opt.u_min, ga = g(ua);
  for (int i = 1; i < n; ++i) {
    const double ub = opt.u_min + i * du, gb = g(ub);
    if (opposite(ga, gb)) roots.push_back(ga == 0.0 ? ua : bisect(g, ua, ub, ga, opt.root_tol));
    ua = ub;
    ga = gb;
  }
  return roots;
}

std::vector<SingularCurve> trace_singular_curve(const SurfaceFamily& fam, double v_min, double v_max, int n_steps,
                                                const TraceOptions& opt) {
  if (n_steps < 16) throw InvalidFamilyParameter("trace needs at least 16 steps");
  if (!(v_max > v_min)) throw InvalidFamilyParameter("empty v range");
  std::vector<SingularCurve> done, active;
  const double period = fam.v_period();
  for (int j = 0; j < n_steps; ++j) {
    const double v = v_min + (v_max - v_min) * j / (n_steps - 1);
    const auto us = singular_u_at(fam, v, opt);
    std::vector<SingularCurve> next;
    std::vector<bool> used(active.size(), false);
    for (double u : us) {
      int best = -1;
      double best_d = opt.max_jump;
      for (std::size_t k = 0; k < active.size(); ++k) {
        if (used[k]) continue;
        const double d = std::abs(active[k].points.back().first - u);
        if (d <= best_d) {
          best_d = d;
          best = static_cast<int>(k);
        }
      }
      if (best >= 0) {
        used[best] = true;
        active[best].points.emplace_back(u, v);
        next.push_back(std::move(active[best]));
      } else {
        SingularCurve c;
        c.points.emplace_back(u, v);
        c.period_index = period > 0 ? static_cast<int>(std::floor(v / period)) : 0;
        next.push_back(std::move(c));
      }
    }
    for (std::size_t k = 0; k < active.size(); ++k)
      if (!used[k]) done.push_back(std::move(active[k]));
    active = std::move(next);
  }
  for (auto& c : active) done.push_back(std::move(c));
  return done;
}

CriteriaValues criteria_eval(const WSeries& s) {
  const auto h = s.h.truncate<3>();
  const auto eta = s.eta.truncate<3>();
  const auto hz = s.h.differentiate();
  const double scale = std::max(1.0, std::abs(h.value()));
  if (std::abs(hz.value()) < 1e-14 * scale) throw DegenerateCriteria("h_z vanishes");
  if (std::abs(h.value()) < 1e-300 || std::abs(eta.value()) < 1e-300)
    throw DegenerateCriteria("h or eta vanishes");
  const auto phi = hz / (h * h * eta);
  const auto phi_hat = (h.truncate<2>() / hz.truncate<2>()) * phi.differentiate();
  const auto Phi = (h.truncate<1>() / hz.truncate<1>()) * phi_hat.differentiate();
  return {phi.value(), phi_hat.value(), Phi.value()};
}

CriteriaValues criteria_at(const SurfaceFamily& fam, Complex z) { return criteria_eval(weierstrass_series(fam, z)); }

SingularityClass classify_point(const CriteriaValues& c, double tol) {
  auto unit = [](Complex w) { return std::abs(w) == 0.0 ? Complex{} : w / std::abs(w); };
  const Complex p = unit(c.varphi), q = unit(c.phi_hat), r = unit(c.Phi);
  auto zero = [tol](double x) { return std::abs(x) <= tol; };
  if (std::abs(c.varphi) == 0.0) return SingularityClass::Degenerate;
  if (!zero(p.real()) && !zero(p.imag())) return SingularityClass::CuspidalEdge;
  if (zero(p.imag()) && !zero(p.real())) {
    return zero(q.real()) ? SingularityClass::Degenerate : SingularityClass::Swallowtail;
  }
  if (zero(p.real()) && !zero(p.imag())) {
    if (!zero(q.imag())) return SingularityClass::CuspidalCrossCap;
    if (!zero(q.real()) && !zero(r.imag())) return SingularityClass::CuspidalS1Minus;
  }
  return SingularityClass::Degenerate;
}

Complex bonnet_singular_point(double t, double sigma) {
  const Complex w = t + std::polar(1.0, sigma);
  if (std::abs(w) < 1e-300) throw SingularPointError("the singular curve leaves to infinity at this sigma");
  const Complex z = std::log(w);
  return {z.real(), wrap_period(z.imag())};
}

namespace {

int specificity(SingularityClass c) {
  switch (c) {
    case SingularityClass::CuspidalS1Minus:
    case SingularityClass::CuspidalButterfly: return 2;
    case SingularityClass::Swallowtail:
    case SingularityClass::CuspidalCrossCap: return 1;
    default: return 0;
  }
}

double period_distance(double v1, double v2) {
  const double d = std::abs(wrap_period(v1) - wrap_period(v2));
  return std::min(d, 2 * pi - d);
}

struct SigmaSample {
  bool ok = false;
  double re_phi = 0, im_phi = 0, re_hat = 0, im_hat = 0;
};

}  // namespace

std::vector<SingularPoint> special_points(const SurfaceFamily& fam, int n_samples, double tol_class) {
  if (fam.kind != FamilyKind::Bonnet) throw InvalidFamilyParameter("special points are computed for the Bonnet family");
  if (n_samples < 16) throw InvalidFamilyParameter("need at least 16 samples");
  const double t = fam.param;
  const bool through_infinity = std::abs(t - 1.0) <= kEndpointTol;

  auto sample = [&](double sigma) {
    SigmaSample s;
    try {
      const CriteriaValues c = criteria_at(fam, bonnet_singular_point(t, sigma));
      const double a = std::abs(c.varphi), b = std::abs(c.phi_hat);
      if (!(a > 0) || !(b > 0) || !std::isfinite(a) || !std::isfinite(b)) return s;
      s = {true, c.varphi.real() / a, c.varphi.imag() / a, c.phi_hat.real() / b, c.phi_hat.imag() / b};
    } catch (const Error&) {
    }
    return s;
  };
  using Getter = double (*)(const SigmaSample&);
  const Getter getters[] = {
      [](const SigmaSample& s) { return s.re_phi; }, [](const SigmaSample& s) { return s.im_phi; },
      [](const SigmaSample& s) { return s.im_hat; }, [](const SigmaSample& s) { return s.re_hat; }};

  std::vector<double> sig(n_samples);
  std::vector<SigmaSample> smp(n_samples);
  for (int k = 0; k < n_samples; ++k) {
    sig[k] = -pi + 2 * pi * (k + 0.5) / n_samples;
    smp[k] = sample(sig[k]);
  }

  std::vector<SingularPoint> out;
  auto consider = [&](double sigma) {
    Complex z;
    try {
      z = bonnet_singular_point(t, sigma);
    } catch (const Error&) {
      return;
    }
    CriteriaValues c;
    try {
      c = criteria_at(fam, z);
    } catch (const DegenerateCriteria&) {
      return;
    }
    const SingularityClass cls = classify_point(c, tol_class);
    if (cls == SingularityClass::CuspidalEdge) return;
    SingularPoint p{z.real(), z.imag(), cls, c};
    for (auto& q : out) {
      if (std::abs(q.u - p.u) < 1e-6 && period_distance(q.v, p.v) < 1e-6) {
        if (specificity(p.cls) > specificity(q.cls)) q = p;
        return;
      }
    }
    out.push_back(p);
  };

  const int n_brackets = through_infinity ? n_samples - 1 : n_samples;
  for (int k = 0; k < n_brackets; ++k) {
    const int k2 = (k + 1) % n_samples;
    const double a = sig[k], b = (k2 == 0) ? sig[0] + 2 * pi : sig[k2];
    if (!smp[k].ok || !smp[k2].ok) continue;
    for (Getter g : getters) {
      const double fa = g(smp[k]), fb = g(smp[k2]);
      if (!opposite(fa, fb)) continue;
      auto f = [&](double s) {
        const SigmaSample q = sample(s);
        return q.ok ? g(q) : std::numeric_limits<double>::quiet_NaN();
      };
      consider(fa == 0.0 ? a : bisect(f, a, b, fa, 1e-12));
    }
  }
  std::sort(out.begin(), out.end(), [](const SingularPoint& x, const SingularPoint& y) {
    return x.v != y.v ? x.v < y.v : x.u < y.u;
  });
  return out;
}

SingularCounts count_points(const std::vector<SingularPoint>& pts) {
  SingularCounts c;
  for (const auto& p : pts) {
    if (p.cls == SingularityClass::Swallowtail) ++c.sw;
    if (p.cls == SingularityClass::CuspidalCrossCap) ++c.ccr;
    if (p.cls == SingularityClass::CuspidalS1Minus) ++c.cs;
  }
  return c;
}

SingularCounts count_per_period(const SurfaceFamily& fam, int n_samples) {
  return count_points(special_points(fam, n_samples));
}

SingularityClass conjugate_classify(SingularityClass c) {
  switch (c) {
    case SingularityClass::CuspidalEdge: return SingularityClass::CuspidalEdge;
    case SingularityClass::Swallowtail: return SingularityClass::CuspidalCrossCap;
    case SingularityClass::CuspidalCrossCap: return SingularityClass::Swallowtail;
    case SingularityClass::CuspidalS1Minus: return SingularityClass::CuspidalButterfly;
    default: break;
  }
  throw UnmappedClass("no conjugate class for " + to_string(c));
}

ConjugateCounts conjugate_counts(const SurfaceFamily& fam, int n_samples) {
  ConjugateCounts out;
  for (const auto& p : special_points(fam, n_samples)) {
    const SingularityClass c = conjugate_classify(p.cls);
    if (c == SingularityClass::CuspidalCrossCap) ++out.ccr;
    if (c == SingularityClass::Swallowtail) ++out.sw;
    if (c == SingularityClass::CuspidalButterfly) ++out.cb;
  }
  return out;
}

}  // namespace maxpcl
