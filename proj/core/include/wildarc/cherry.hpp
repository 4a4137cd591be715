#pragma once

#include "wildarc/eig3.hpp"
#include "wildarc/geometry.hpp"

namespace wildarc {

/// Vector field on the solid cylinder {x2^2 + x3^2 <= 4}: a saddle at
/// (1,0,0) and a sink at (-1,0,0) inside the ball of radius 2, unit
/// translation along x1 outside it. Continuous across the shells
/// |x|^2 = 2 and |x|^2 = 4.
Point3 cherry_rhs(const Point3& x);

/// Analytic Jacobian of cherry_rhs (piecewise formulas).
Mat3 cherry_rhs_jacobian(const Point3& x);

struct CherryFlow {
  double step = 1.0 / 64.0;       // fixed RK4 step
  bool richardson_check = true;   // compare against step/2 on every call
  double richardson_tol = 1e-7;
};

/// Time-1 map of the flow. Fixed-step classical RK4; when the whole unit
/// segment stays in the translation region the map is the exact shift
/// (+/-1, 0, 0). Inverse integrates the negated field.
Point3 time_one_map(const CherryFlow& flow, const Point3& x, dir d);

/// Time-1 map together with the variational matrix V(1), V(0) = I.
/// Independent route to the Jacobian of the time-1 map.
std::pair<Point3, Mat3> time_one_with_variational(const CherryFlow& flow, const Point3& x, dir d);

}  // namespace wildarc
