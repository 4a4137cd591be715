#include "wildarc/eig3.hpp"

#include <algorithm>
#include <cmath>

namespace wildarc {

namespace {

std::complex<double> polish(std::complex<double> x, double a, double b, double c) {
  for (int it = 0; it < 3; ++it) {
    const std::complex<double> f = ((x + a) * x + b) * x + c;
    const std::complex<double> df = (3.0 * x + 2.0 * a) * x + b;
    if (std::abs(df) < 1e-300) break;
    const std::complex<double> step = f / df;
    x -= step;
    if (std::abs(step) < 1e-16 * (1.0 + std::abs(x))) break;
  }
  return x;
}

}  // namespace

std::array<std::complex<double>, 3> solve_cubic(double a, double b, double c) {
  // Depressed form t^3 + p t + q with x = t - a/3.
  const double shift = a / 3.0;
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double disc = 4.0 * p * p * p + 27.0 * q * q;

  std::array<std::complex<double>, 3> r;
  if (disc <= 0.0) {
    // Three real roots: trigonometric branch.
    const double mp = std::max(-p, 0.0);
    const double s = 2.0 * std::sqrt(mp / 3.0);
    double arg = 0.0;
    if (s > 0.0) {
      arg = 3.0 * q / (mp * s);
      arg = std::clamp(arg, -1.0, 1.0);
    }
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) {
      const double t = s * std::cos(phi - 2.0 * M_PI * k / 3.0);
      r[k] = std::complex<double>(t - shift, 0.0);
    }
  } else {
    // One real root via Cardano, complex pair from the quadratic factor.
    const double rt = std::sqrt(disc / 108.0);
    const double u = std::cbrt(-q / 2.0 + rt);
    const double v = std::cbrt(-q / 2.0 - rt);
    const double t0 = u + v;
    const double x0 = t0 - shift;
    // x^3 + a x^2 + b x + c = (x - x0)(x^2 + (a + x0) x - c / x0) if x0 != 0.
    const double p2 = a + x0;
    const double q2 = (std::abs(x0) > 1e-300) ? -c / x0 : b + x0 * p2;
    const std::complex<double> d2 = std::sqrt(std::complex<double>(p2 * p2 - 4.0 * q2, 0.0));
    r[0] = std::complex<double>(x0, 0.0);
    r[1] = (-p2 + d2) / 2.0;
    r[2] = (-p2 - d2) / 2.0;
  }
  for (auto& root : r) {
    root = polish(root, a, b, c);
    if (std::abs(root.imag()) < 1e-12 * (1.0 + std::abs(root.real())))
      root = std::complex<double>(root.real(), 0.0);
  }
  return r;
}

std::array<std::complex<double>, 3> eigenvalues3(const Mat3& m) {
  const double tr = m[0][0] + m[1][1] + m[2][2];
  const double c01 = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const double c02 = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  const double c12 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  // char poly: lambda^3 - tr lambda^2 + (sum of principal minors) lambda - det
  auto r = solve_cubic(-tr, c01 + c02 + c12, -det);
  std::sort(r.begin(), r.end(), [](const std::complex<double>& x, const std::complex<double>& y) {
    const double ax = std::abs(x), ay = std::abs(y);
    if (ax != ay) return ax > ay;
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  return r;
}

std::array<double, 3> real_eigenvector(const Mat3& m, double lambda) {
  // Rows of (M - lambda I); eigenvector is orthogonal to two independent rows.
  std::array<std::array<double, 3>, 3> a = m;
  for (int i = 0; i < 3; ++i) a[i][i] -= lambda;
  std::array<std::array<double, 3>, 3> cand{};
  int n = 0;
  for (int i = 0; i < 3 && n < 3; ++i)
    for (int j = i + 1; j < 3 && n < 3; ++j) {
      cand[n][0] = a[i][1] * a[j][2] - a[i][2] * a[j][1];
      cand[n][1] = a[i][2] * a[j][0] - a[i][0] * a[j][2];
      cand[n][2] = a[i][0] * a[j][1] - a[i][1] * a[j][0];
      ++n;
    }
  int best = 0;
  double best_norm = -1.0;
  for (int k = 0; k < 3; ++k) {
    const double nn = cand[k][0] * cand[k][0] + cand[k][1] * cand[k][1] + cand[k][2] * cand[k][2];
    if (nn > best_norm) { best_norm = nn; best = k; }
  }
  std::array<double, 3> v = cand[best];
  const double nv = std::sqrt(std::max(best_norm, 1e-300));
  for (auto& c : v) c /= nv;
  return v;
}

}  // namespace wildarc
