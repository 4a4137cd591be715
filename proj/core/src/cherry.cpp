#include "wildarc/cherry.hpp"

#include <cmath>

#include "wildarc/errors.hpp"

namespace wildarc {

Point3 cherry_rhs(const Point3& x) {
  const double s = norm2(x);
  Point3 v;
  v.x1 = (s <= 4.0) ? 1.0 - (1.0 / 9.0) * (s - 4.0) * (s - 4.0) : 1.0;
  if (s > 4.0) {
    v.x2 = 0.0;
    v.x3 = 0.0;
  } else if (s <= 2.0) {
    v.x2 = -x.x2;
    v.x3 = -x.x3;
  } else {
    const double w = 0.5 * (std::sin(M_PI_2 * (s - 3.0)) - 1.0);
    v.x2 = x.x2 * w;
    v.x3 = x.x3 * w;
  }
  return v;
}

Mat3 cherry_rhs_jacobian(const Point3& x) {
  const double s = norm2(x);
  Mat3 j{};
  const double xs[3] = {x.x1, x.x2, x.x3};
  if (s <= 4.0) {
    const double g = -(4.0 / 9.0) * (s - 4.0);  // d/dx_k of the x1 component is g*x_k
    for (int k = 0; k < 3; ++k) j[0][k] = g * xs[k];
  }
  if (s > 4.0) {
    // zero rows for x2, x3
  } else if (s <= 2.0) {
    j[1][1] = -1.0;
    j[2][2] = -1.0;
  } else {
    const double arg = M_PI_2 * (s - 3.0);
    const double w = 0.5 * (std::sin(arg) - 1.0);
    const double dw = 0.5 * std::cos(arg) * M_PI_2;  // dw/ds
    for (int k = 0; k < 3; ++k) {
      j[1][k] = x.x2 * dw * 2.0 * xs[k];
      j[2][k] = x.x3 * dw * 2.0 * xs[k];
    }
    j[1][1] += w;
    j[2][2] += w;
  }
  return j;
}

namespace {

// min over tau in [0,1] of |x + tau*d*e1|^2 with d = +/-1
double min_norm2_on_segment(const Point3& x, double d) {
  const double t_star = std::clamp(-x.x1 * d, 0.0, 1.0);
  const Point3 p{x.x1 + t_star * d, x.x2, x.x3};
  return norm2(p);
}

Point3 rk4_integrate(const Point3& x0, double sign, double step) {
  const int n = std::max(1, static_cast<int>(std::llround(1.0 / step)));
  const double h = 1.0 / n;
  Point3 x = x0;
  for (int i = 0; i < n; ++i) {
    const Point3 k1 = cherry_rhs(x) * sign;
    const Point3 k2 = cherry_rhs(x + k1 * (h / 2.0)) * sign;
    const Point3 k3 = cherry_rhs(x + k2 * (h / 2.0)) * sign;
    const Point3 k4 = cherry_rhs(x + k3 * h) * sign;
    x += (k1 + 2.0 * (k2 + k3) + k4) * (h / 6.0);
  }
  return x;
}

Mat3 mat_add(const Mat3& a, const Mat3& b, double bs) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] + bs * b[i][j];
  return r;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

}  // namespace

Point3 time_one_map(const CherryFlow& flow, const Point3& x, dir d) {
  if (!(flow.step > 0.0)) fail(errc::precondition, "integrator step must be positive");
  const double sign = (d == dir::forward) ? 1.0 : -1.0;
  // Outside the ball the field is exactly the unit shift, so the time-1 map
  // is exact translation whenever the whole segment stays there.
  if (min_norm2_on_segment(x, sign) > 4.0) return {x.x1 + sign, x.x2, x.x3};

  const Point3 coarse = rk4_integrate(x, sign, flow.step);
  if (flow.richardson_check) {
    const Point3 fine = rk4_integrate(x, sign, flow.step / 2.0);
    if (norm(coarse - fine) > flow.richardson_tol)
      fail(errc::step_too_coarse, "time_one_map: step refinement check failed");
  }
  return coarse;
}

std::pair<Point3, Mat3> time_one_with_variational(const CherryFlow& flow, const Point3& x0, dir d) {
  const double sign = (d == dir::forward) ? 1.0 : -1.0;
  const int n = std::max(1, static_cast<int>(std::llround(1.0 / flow.step)));
  const double h = 1.0 / n;
  Point3 x = x0;
  Mat3 v{};
  for (int i = 0; i < 3; ++i) v[i][i] = 1.0;

  for (int i = 0; i < n; ++i) {
    const Point3 k1 = cherry_rhs(x) * sign;
    const Mat3 m1 = cherry_rhs_jacobian(x);
    const Point3 x2 = x + k1 * (h / 2.0);
    const Point3 k2 = cherry_rhs(x2) * sign;
    const Mat3 m2 = cherry_rhs_jacobian(x2);
    const Point3 x3 = x + k2 * (h / 2.0);
    const Point3 k3 = cherry_rhs(x3) * sign;
    const Mat3 m3 = cherry_rhs_jacobian(x3);
    const Point3 x4 = x + k3 * h;
    const Point3 k4 = cherry_rhs(x4) * sign;
    const Mat3 m4 = cherry_rhs_jacobian(x4);

    // Variational RK4 stages: K_i = sign * M_i * (I + sum of previous stages).
    Mat3 id{};
    for (int r = 0; r < 3; ++r) id[r][r] = 1.0;
    const Mat3 K1 = mat_mul(m1, id);
    const Mat3 K2 = mat_mul(m2, mat_add(id, K1, sign * h / 2.0));
    const Mat3 K3 = mat_mul(m3, mat_add(id, K2, sign * h / 2.0));
    const Mat3 K4 = mat_mul(m4, mat_add(id, K3, sign * h));
    Mat3 dv{};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        dv[r][c] = (K1[r][c] + 2.0 * (K2[r][c] + K3[r][c]) + K4[r][c]) * (sign * h / 6.0);
    Mat3 step_m = id;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) step_m[r][c] += dv[r][c];
    v = mat_mul(step_m, v);

    x += (k1 + 2.0 * (k2 + k3) + k4) * (h / 6.0);
  }
  return {x, v};
}

}  // namespace wildarc
