#pragma once

#include <array>
#include <complex>

namespace wildarc {

using Mat3 = std::array<std::array<double, 3>, 3>;

/// Roots of x^3 + a x^2 + b x + c. Trigonometric/Cardano branches, each root
/// polished by a few Newton steps on the monic cubic.
std::array<std::complex<double>, 3> solve_cubic(double a, double b, double c);

/// Eigenvalues of a real 3x3 matrix via its characteristic polynomial,
/// sorted by (|lambda| desc, re desc, im desc).
std::array<std::complex<double>, 3> eigenvalues3(const Mat3& m);

/// Real eigenvector for a real eigenvalue (unit norm); falls back to the
/// dominant column of the adjugate-style cross products.
std::array<double, 3> real_eigenvector(const Mat3& m, double lambda);

}  // namespace wildarc
