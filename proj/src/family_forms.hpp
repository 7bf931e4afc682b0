#pragma once

// Per-family formulas, templated on the scalar so that the same expression
// yields values (double / Complex) or exact derivatives (Taylor series).

#include <cmath>
#include <complex>
#include <numbers>

#include "maxpcl/catalog.hpp"
#include "maxpcl/errors.hpp"

namespace maxpcl::detail {

struct ThetaConstantsA {
  double a1, a2, a3;
};
struct ThetaConstantsB {
  double b1, b2, beta;
};

inline double clamped_cos(double theta) {
  // cos(pi/2) is 6e-17 in binary; its square root would perturb A2, A3 by 1e-8.
  if (std::abs(theta - std::numbers::pi / 2) < kEndpointTol) return 0.0;
  return std::cos(theta);
}

inline ThetaConstantsA theta_a(double theta) {
  const double c = clamped_cos(theta), s = std::sin(theta);
  return {std::sqrt(s - c), std::sqrt(c) + std::sqrt(s), std::atan2(std::sqrt(s - c), std::sqrt(c))};
}

inline ThetaConstantsB theta_b(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double beta = std::sqrt(1.0 - std::tan(theta));
  return {std::sqrt(c - s), 1.0 + beta, beta};
}

inline constexpr double kEnnA = 0.84089641525371454303;  // 2^{-1/4}
inline constexpr double kEnnB = 0.59460355750136053336;  // 2^{-3/4}

inline Complex z_value(const Complex& z) { return z; }
template <int N>
Complex z_value(const Taylor<Complex, N>& z) {
  return z.value();
}

template <class Z>
struct Parts {
  Z e0, e1, e2;  // eta, h eta, h^2 eta
};

template <class Z>
struct HEta {
  Z h, eta;
};

template <class Z>
Vec3T<Z> integrand_from_parts(const Parts<Z>& p) {
  const Complex i(0.0, 1.0);
  return {p.e0 + p.e2, i * (p.e0 - p.e2), -2.0 * p.e1};
}

/// h and the base eta (without the associated factor). Throws PoleError.
template <class Z>
HEta<Z> base_h_eta(const SurfaceFamily& fam, const Z& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  switch (fam.kind) {
    case FamilyKind::Theta:
      switch (fam.theta_chart()) {
        case ThetaChart::A: {
          const auto k = theta_a(fam.param);
          const Z w = (k.a1 * z + k.a3) / 2.0;
          const Z cw = cos(w);
          if (std::abs(Complex(z_value(cw))) < kPoleTol) throw PoleError("h has a pole (tan chart)");
          return {k.a2 * sin(w) / cw / k.a1, cw * cw / k.a2};
        }
        case ThetaChart::Enneper:
          return {kEnnA * z + 1.0, Z(Complex(kEnnB))};
        case ThetaChart::B: {
          const auto k = theta_b(fam.param);
          const Z e = exp(k.b1 * z);
          return {(k.b2 * e - 1.0) / k.beta, k.beta / e / (2.0 * k.b1 * k.b2)};
        }
        case ThetaChart::TimelikeCatenoid: {
          const Z e = exp(z);
          return {e, 0.5 / e};
        }
      }
      break;
    case FamilyKind::Lambda: {
      if (std::abs(Complex(z_value(z)) - 1.0) < kPoleTol) throw PoleError("h has a pole at z = 1");
      return {(1.0 + z) / (1.0 - z), (z - 1.0) * (z - 1.0) / 4.0};
    }
    case FamilyKind::CatLight: {
      const double dl = fam.param;
      const Z e = exp(dl * z);
      const Z den = (dl - 1.0) * e + 1.0;
      if (std::abs(Complex(z_value(den))) < kPoleTol) throw PoleError("h has a pole");
      return {((dl + 1.0) * e - 1.0) / den, den * den / (4.0 * dl * dl * e)};
    }
    case FamilyKind::PlaneDef: {
      const double psi = fam.param;
      const double k = std::sqrt(std::cos(2.0 * psi));
      const double cm = std::cos(psi) - std::sin(psi);
      const Z w = k * (z + (2.0 * psi + std::numbers::pi / 2)) / 2.0;
      const Z cw = cos(w);
      if (k > 0.0 && std::abs(Complex(z_value(cw))) < kPoleTol)
        throw PoleError("h has a pole (tan chart)");
      return {k / cm * sin(w) / cw, cm * cw * cw};
    }
    case FamilyKind::Bonnet: {
      const Z e = exp(z);
      return {e - fam.param, 0.5 / e};
    }
  }
  throw InvalidFamilyParameter("unknown family");
}

template <class Z>
Parts<Z> base_parts(const SurfaceFamily& fam, const Z& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  switch (fam.kind) {
    case FamilyKind::Theta:
      switch (fam.theta_chart()) {
        case ThetaChart::A: {
          const auto k = theta_a(fam.param);
          const Z w = (k.a1 * z + k.a3) / 2.0;
          const Z sw = sin(w), cw = cos(w);
          return {cw * cw / k.a2, sw * cw / k.a1, k.a2 * sw * sw / (k.a1 * k.a1)};
        }
        case ThetaChart::Enneper: {
          const Z hz = kEnnA * z + 1.0;
          return {Z(Complex(kEnnB)), kEnnB * hz, kEnnB * hz * hz};
        }
        case ThetaChart::B: {
          const auto k = theta_b(fam.param);
          const Z e = exp(k.b1 * z);
          const Z einv = 1.0 / e;
          const double s = 2.0 * k.b1 * k.b2;
          const Z num = k.b2 * e - 1.0;
          return {k.beta * einv / s, (k.b2 - einv) / s, num * num * einv / (s * k.beta)};
        }
        case ThetaChart::TimelikeCatenoid: {
          const Z e = exp(z);
          return {0.5 / e, Z(Complex(0.5)), 0.5 * e};
        }
      }
      break;
    case FamilyKind::Lambda:
      return {(z - 1.0) * (z - 1.0) / 4.0, (1.0 - z * z) / 4.0, (1.0 + z) * (1.0 + z) / 4.0};
    case FamilyKind::CatLight: {
      const double dl = fam.param;
      const Z e = exp(dl * z);
      const Z den = (dl - 1.0) * e + 1.0;
      const Z num = (dl + 1.0) * e - 1.0;
      const Z q = 1.0 / (4.0 * dl * dl * e);
      return {den * den * q, num * den * q, num * num * q};
    }
    case FamilyKind::PlaneDef: {
      const double psi = fam.param;
      const double k = std::sqrt(std::cos(2.0 * psi));
      const double cm = std::cos(psi) - std::sin(psi);
      const Z w = k * (z + (2.0 * psi + std::numbers::pi / 2)) / 2.0;
      const Z sw = sin(w), cw = cos(w);
      return {cm * cw * cw, k * sw * cw, k * k / cm * sw * sw};
    }
    case FamilyKind::Bonnet: {
      const double t = fam.param;
      const Z e = exp(z);
      const Z einv = 1.0 / e;
      return {0.5 * einv, 0.5 * (1.0 - t * einv), 0.5 * (e - 2.0 * t + t * t * einv)};
    }
  }
  throw InvalidFamilyParameter("unknown family");
}

/// Holomorphic antiderivative of the base integrand; F(0) is real.
template <class Z>
Vec3T<Z> base_antiderivative(const SurfaceFamily& fam, const Z& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  using std::sinh;
  using std::cosh;
  const Complex i(0.0, 1.0);
  switch (fam.kind) {
    case FamilyKind::Theta:
      switch (fam.theta_chart()) {
        case ThetaChart::A: {
          const auto k = theta_a(fam.param);
          const double p = k.a1 * k.a1 + k.a2 * k.a2, m = k.a1 * k.a1 - k.a2 * k.a2;
          const double den = 2.0 * k.a1 * k.a1 * k.a1 * k.a2;
          const Z arg = k.a1 * z + k.a3;
          const Z s = sin(arg) - std::sin(k.a3);
          return {(p * k.a1 * z + m * s) / den, i * (m * k.a1 * z + p * s) / den,
                  (cos(arg) - std::cos(k.a3)) / (k.a1 * k.a1)};
        }
        case ThetaChart::Enneper: {
          const Z w = kEnnA * z + 1.0;
          const double r = kEnnB / kEnnA;
          const Z w3 = w * w * w;
          return {r * (w + w3 / 3.0 - 4.0 / 3.0), i * r * (w - w3 / 3.0 - 2.0 / 3.0),
                  -r * (w * w - 1.0)};
        }
        case ThetaChart::B: {
          const auto k = theta_b(fam.param);
          const Z e = exp(k.b1 * z);
          const Z einv = 1.0 / e;
          const double b1 = k.b1, b2 = k.b2, be = k.beta;
          const double den = 2.0 * b1 * b1 * b2 * be;
          return {(b2 * b2 * e - (be * be + 1.0) * einv - 2.0 * b1 * b2 * z - 2.0 * be) / den,
                  i * (-b2 * b2 * e - (be * be - 1.0) * einv + 2.0 * b1 * b2 * z + b2 * b2 + be * be - 1.0) /
                      den,
                  -(b1 * b2 * z + einv - 1.0) / (b1 * b1 * b2)};
        }
        case ThetaChart::TimelikeCatenoid:
          return {sinh(z), -i * (cosh(z) - 1.0), -z};
      }
      break;
    case FamilyKind::Lambda: {
      const Z z2 = z * z, z3 = z2 * z;
      return {(z + z3 / 3.0) / 2.0, -i * z2 / 2.0, -(z - z3 / 3.0) / 2.0};
    }
    case FamilyKind::CatLight: {
      const double dl = fam.param;
      const Z e = exp(dl * z);
      const Z einv = 1.0 / e;
      const double d3 = 2.0 * dl * dl * dl;
      return {((dl * dl + 1.0) * e - einv - 2.0 * dl * z - dl * dl) / d3, i * (dl * z - e + 1.0) / (dl * dl),
              (-(dl * dl - 1.0) * e - einv - 2.0 * dl * z + dl * dl) / d3};
    }
    case FamilyKind::PlaneDef: {
      const double psi = fam.param;
      const double k = std::sqrt(std::cos(2.0 * psi));
      const double S = 2.0 * psi + std::numbers::pi / 2;
      const double cp = std::cos(psi), sp = std::sin(psi);
      if (k == 0.0) return {cp * z - sp * (z + S), i * (cp - sp) * z, Z(Complex(1.0))};
      const Z sn = sin(k * (z + S));
      return {cp * z - sp * sn / k, i * (-sp * z + cp * (sn - std::sin(k * S)) / k), cos(k * (z + S))};
    }
    case FamilyKind::Bonnet: {
      const double t = fam.param;
      const Z e = exp(z);
      const Z einv = 1.0 / e;
      return {(e - 2.0 * t * z - (1.0 + t * t) * einv + t * t) / 2.0,
              i * (2.0 * t * z - e - (1.0 - t * t) * einv + 2.0 - t * t) / 2.0, -z - t * einv + t};
    }
  }
  throw InvalidFamilyParameter("unknown family");
}

/// The real closed forms. Valid for base families and for any Lambda member.
template <class S>
Vec3T<S> real_closed_form(const SurfaceFamily& fam, const S& u, const S& v) {
  using std::cos;
  using std::cosh;
  using std::exp;
  using std::sin;
  using std::sinh;
  switch (fam.kind) {
    case FamilyKind::Theta:
      switch (fam.theta_chart()) {
        case ThetaChart::A: {
          const auto k = theta_a(fam.param);
          const double a1 = k.a1, a2 = k.a2, a3 = k.a3;
          const double p = a1 * a1 + a2 * a2, m = a1 * a1 - a2 * a2;
          const double den = 2.0 * a1 * a1 * a1 * a2;
          const S arg = a1 * u + a3;
          const S ch = cosh(a1 * v), sh = sinh(a1 * v);
          return {(p * a1 * u + m * sin(arg) * ch - m * std::sin(a3)) / den,
                  (-m * a1 * v - p * cos(arg) * sh) / den, (cos(arg) * ch - std::cos(a3)) / (a1 * a1)};
        }
        case ThetaChart::Enneper: {
          const S uh = kEnnA * u + 1.0, vh = kEnnA * v;
          const double r = 1.0 / std::numbers::sqrt2;
          return {r * (uh - uh * vh * vh + uh * uh * uh / 3.0 - 4.0 / 3.0),
                  r * (-vh + uh * uh * vh - vh * vh * vh / 3.0), r * (-(uh * uh) + vh * vh + 1.0)};
        }
        case ThetaChart::B: {
          const auto k = theta_b(fam.param);
          const double b1 = k.b1, b2 = k.b2, be = k.beta;
          const S em = exp(-b1 * u), ep = exp(b1 * u), e2 = exp(2.0 * b1 * u);
          return {em * ((b2 * (b2 * (e2 - 1.0) + 2.0) - 2.0) * cos(b1 * v) - 2.0 * ep * (b1 * b2 * u + b2 - 1.0)) /
                      (2.0 * b1 * b1 * b2 * be),
                  em * ((b2 * e2 - b2 + 2.0) * sin(b1 * v) - 2.0 * b1 * v * ep) / (2.0 * b1 * b1 * be),
                  -(b1 * b2 * u + em * cos(b1 * v) - 1.0) / (b1 * b1 * b2)};
        }
        case ThetaChart::TimelikeCatenoid:
          return {sinh(u) * cos(v), sinh(u) * sin(v), -u};
      }
      break;
    case FamilyKind::Lambda: {
      const Complex mu = fam.mu();
      const double re = mu.real() / 2.0, im = mu.imag() / 2.0;
      const S u2 = u * u, v2 = v * v;
      const S u3 = u2 * u, v3 = v2 * v;
      return {re * (u - u * v2 + u3 / 3.0) - im * (v + u2 * v - v3 / 3.0),
              re * (2.0 * u * v) - im * (v2 - u2),
              re * (-u - u * v2 + u3 / 3.0) - im * (-v + u2 * v - v3 / 3.0)};
    }
    case FamilyKind::CatLight: {
      const double dl = fam.param;
      const S em = exp(-dl * u), ep = exp(dl * u), e2 = exp(2.0 * dl * u);
      const double d3 = 2.0 * dl * dl * dl;
      return {em * (((dl * dl + 1.0) * e2 - 1.0) * cos(dl * v) - dl * (2.0 * u + dl) * ep) / d3,
              (ep * sin(dl * v) - dl * v) / (dl * dl),
              em * (-((dl * dl - 1.0) * e2 + 1.0) * cos(dl * v) - dl * (2.0 * u - dl) * ep) / d3};
    }
    case FamilyKind::PlaneDef: {
      const double psi = fam.param;
      const double k = std::sqrt(std::cos(2.0 * psi));
      const double S0 = 2.0 * psi + std::numbers::pi / 2;
      const double cp = std::cos(psi), sp = std::sin(psi);
      if (k == 0.0) return {cp * u - sp * (u + S0), sp * v - cp * v, S(1.0)};
      const S arg = k * (u + S0);
      return {cp * u - sp * sin(arg) * cosh(k * v) / k, sp * v - cp * cos(arg) * sinh(k * v) / k,
              cos(arg) * cosh(k * v)};
    }
    case FamilyKind::Bonnet: {
      const double t = fam.param;
      const S ep = exp(u), em = exp(-u);
      return {(ep * cos(v) - 2.0 * t * u - (1.0 + t * t) * em * cos(v) + t * t) / 2.0,
              (ep * sin(v) - (1.0 - t * t) * em * sin(v) - 2.0 * t * v) / 2.0, -u - t * em * cos(v) + t};
    }
  }
  throw InvalidFamilyParameter("unknown family");
}

}  // namespace maxpcl::detail
