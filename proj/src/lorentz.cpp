#include "maxpcl/lorentz.hpp"

#include <algorithm>

namespace maxpcl {

double minkowski_inner(const LVec3& a, const LVec3& b) {
  return a.x1 * b.x1 + a.x2 * b.x2 - a.x0 * b.x0;
}

LVec3 lorentz_cross(const LVec3& a, const LVec3& b) {
  // Euclidean cross product with the timelike slot negated.
  return {a.x2 * b.x0 - a.x0 * b.x2, a.x0 * b.x1 - a.x1 * b.x0,
          -(a.x1 * b.x2 - a.x2 * b.x1)};
}

double det3(const LVec3& a, const LVec3& b, const LVec3& c) {
  return a.x1 * (b.x2 * c.x0 - b.x0 * c.x2) - a.x2 * (b.x1 * c.x0 - b.x0 * c.x1) +
         a.x0 * (b.x1 * c.x2 - b.x2 * c.x1);
}

Causality causality_of(const LVec3& v, double tol) {
  const double q = minkowski_inner(v, v);
  if (std::abs(q) <= tol) return Causality::Lightlike;
  return q > 0 ? Causality::Spacelike : Causality::Timelike;
}

std::string to_string(Causality c) {
  switch (c) {
    case Causality::Spacelike:
      return "spacelike";
    case Causality::Timelike:
      return "timelike";
    case Causality::Lightlike:
      return "lightlike";
  }
  return "?";
}

double euclidean_norm(const LVec3& v) { return std::sqrt(v.x1 * v.x1 + v.x2 * v.x2 + v.x0 * v.x0); }

double sup_distance(const LVec3& a, const LVec3& b) {
  return std::max({std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2), std::abs(a.x0 - b.x0)});
}

bool is_finite(const LVec3& v) {
  return std::isfinite(v.x1) && std::isfinite(v.x2) && std::isfinite(v.x0);
}

}  // namespace maxpcl
