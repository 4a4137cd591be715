#pragma once

#include <array>
#include <cmath>

#include "wildarc/errors.hpp"

namespace wildarc {

enum class dir { forward, inverse };

/// Point of the working chart R^3. Doubles as a 3-vector.
struct Point3 {
  double x1 = 0.0, x2 = 0.0, x3 = 0.0;

  Point3() = default;
  Point3(double a, double b, double c) : x1(a), x2(b), x3(c) {}

  Point3 operator+(const Point3& o) const { return {x1 + o.x1, x2 + o.x2, x3 + o.x3}; }
  Point3 operator-(const Point3& o) const { return {x1 - o.x1, x2 - o.x2, x3 - o.x3}; }
  Point3 operator*(double s) const { return {x1 * s, x2 * s, x3 * s}; }
  Point3 operator/(double s) const { return {x1 / s, x2 / s, x3 / s}; }
  Point3 operator-() const { return {-x1, -x2, -x3}; }
  Point3& operator+=(const Point3& o) { x1 += o.x1; x2 += o.x2; x3 += o.x3; return *this; }
  Point3& operator-=(const Point3& o) { x1 -= o.x1; x2 -= o.x2; x3 -= o.x3; return *this; }

  double operator[](int i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
  double& operator[](int i) { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
};

inline Point3 operator*(double s, const Point3& p) { return p * s; }
inline double dot(const Point3& a, const Point3& b) { return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3; }
inline Point3 cross(const Point3& a, const Point3& b) {
  return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, a.x1 * b.x2 - a.x2 * b.x1};
}
inline double norm2(const Point3& p) { return dot(p, p); }
inline double norm(const Point3& p) { return std::sqrt(norm2(p)); }
inline double max_abs_coord(const Point3& p) {
  return std::max(std::abs(p.x1), std::max(std::abs(p.x2), std::abs(p.x3)));
}
inline Point3 unit(const Point3& p) { return p / norm(p); }

/// Point of the unit 3-sphere in R^4.
struct SpherePoint {
  double x1 = 0.0, x2 = 0.0, x3 = 0.0, x4 = 0.0;
};

inline double norm(const SpherePoint& p) {
  return std::sqrt(p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3 + p.x4 * p.x4);
}

/// Point of S^2 x S^1: unit direction plus circle coordinate in [0,1).
struct HopfPoint {
  Point3 u;
  double s = 0.0;
};

constexpr double kUnitTol = 1e-12;
constexpr double kOriginGuard = 1e-300;  // keeps log2 finite in doubles

/// Scaling by 1/2 (forward) or 2 (inverse); exact in binary floating point.
Point3 homothety(const Point3& p, dir d);

/// Covering projection R^3 \ O -> S^2 x S^1: direction plus log2-radius mod 1.
/// Fractional parts within 1e-12 of 1 wrap to 0.
HopfPoint project_p(const Point3& p);

/// Stereographic chart from the pole (0,0,0,1).
Point3 stereo_forward(const SpherePoint& p);
SpherePoint stereo_inverse(const Point3& p);

void validate_unit(const SpherePoint& p);
void validate_unit(const HopfPoint& p);

}  // namespace wildarc
