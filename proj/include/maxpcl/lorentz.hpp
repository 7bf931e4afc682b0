#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>

namespace maxpcl {

using Complex = std::complex<double>;

/// Vector in R^{2,1}; x0 is the timelike coordinate.
template <class S>
struct Vec3T {
  S x1{}, x2{}, x0{};

  Vec3T& operator+=(const Vec3T& o) {
    x1 += o.x1;
    x2 += o.x2;
    x0 += o.x0;
    return *this;
  }
  Vec3T& operator-=(const Vec3T& o) {
    x1 -= o.x1;
    x2 -= o.x2;
    x0 -= o.x0;
    return *this;
  }
  friend Vec3T operator+(Vec3T a, const Vec3T& b) { return a += b; }
  friend Vec3T operator-(Vec3T a, const Vec3T& b) { return a -= b; }
  friend Vec3T operator-(const Vec3T& a) { return {-a.x1, -a.x2, -a.x0}; }
  template <class K>
  friend Vec3T operator*(const K& k, const Vec3T& a) {
    return {k * a.x1, k * a.x2, k * a.x0};
  }
  template <class K>
  friend Vec3T operator*(const Vec3T& a, const K& k) {
    return {a.x1 * k, a.x2 * k, a.x0 * k};
  }
  template <class K>
  friend Vec3T operator/(const Vec3T& a, const K& k) {
    return {a.x1 / k, a.x2 / k, a.x0 / k};
  }
  bool operator==(const Vec3T&) const = default;
};

using LVec3 = Vec3T<double>;
using CVec3 = Vec3T<Complex>;

enum class Causality { Spacelike, Timelike, Lightlike };

double minkowski_inner(const LVec3& a, const LVec3& b);

/// The product with <a x b, c> = det(a, b, c), rows ordered (x1, x2, x0).
LVec3 lorentz_cross(const LVec3& a, const LVec3& b);

/// det of the matrix with rows a, b, c in coordinate order (x1, x2, x0).
double det3(const LVec3& a, const LVec3& b, const LVec3& c);

Causality causality_of(const LVec3& v, double tol = 0.0);
std::string to_string(Causality c);

double euclidean_norm(const LVec3& v);
double sup_distance(const LVec3& a, const LVec3& b);
bool is_finite(const LVec3& v);

inline LVec3 real_part(const CVec3& v) { return {v.x1.real(), v.x2.real(), v.x0.real()}; }
inline LVec3 imag_part(const CVec3& v) { return {v.x1.imag(), v.x2.imag(), v.x0.imag()}; }

}  // namespace maxpcl
