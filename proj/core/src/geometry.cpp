#include "wildarc/geometry.hpp"

namespace wildarc {

Point3 homothety(const Point3& p, dir d) {
  const double s = (d == dir::forward) ? 0.5 : 2.0;
  return {p.x1 * s, p.x2 * s, p.x3 * s};
}

HopfPoint project_p(const Point3& p) {
  const double r = norm(p);
  if (!(r > kOriginGuard)) fail(errc::origin_not_covered, "project_p: point at the origin");
  HopfPoint h;
  h.u = p / r;
  const double m = std::log2(r);
  double s = m - std::floor(m);
  if (s >= 1.0 || 1.0 - s <= kUnitTol) s = 0.0;
  h.s = s;
  return h;
}

Point3 stereo_forward(const SpherePoint& p) {
  const double d = 1.0 - p.x4;
  if (!(d > kOriginGuard)) fail(errc::north_pole, "stereo: chart undefined at the pole");
  return {p.x1 / d, p.x2 / d, p.x3 / d};
}

SpherePoint stereo_inverse(const Point3& p) {
  const double q = norm2(p);
  const double d = q + 1.0;
  return {2.0 * p.x1 / d, 2.0 * p.x2 / d, 2.0 * p.x3 / d, (q - 1.0) / d};
}

void validate_unit(const SpherePoint& p) {
  if (std::abs(norm(p) - 1.0) > kUnitTol)
    fail(errc::precondition, "SpherePoint is not on the unit sphere");
}

void validate_unit(const HopfPoint& p) {
  if (std::abs(norm(p.u) - 1.0) > kUnitTol)
    fail(errc::precondition, "HopfPoint direction is not unit");
  if (p.s < 0.0 || p.s >= 1.0) fail(errc::precondition, "HopfPoint circle coordinate out of [0,1)");
}

}  // namespace wildarc
