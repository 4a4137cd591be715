#pragma once

#include <map>
#include <string>
#include <vector>

#include "wildarc/geometry.hpp"

namespace wildarc {

/// One crossing of the planar diagram (projection along x3), canonicalized
/// so the smaller curve parameter lies in [0,1). Arc names refer to the
/// stored arcs; `shift` counts how many halvings were applied to the stored
/// arc at the crossing.
struct CrossingRecord {
  std::string over, under;
  int over_shift = 0, under_shift = 0;
  int sign = 0;  // orientation of (over tangent, under tangent) in the plane
};

/// Build data for a knotted equivariant curve: 2n+1 anchor angles on the
/// unit circle and control polygons for the connecting arcs.
///
/// Arcs are stored at their natural scale: "B" runs from anchor 2n+1 to half
/// of anchor 1; odd arcs "A1","A3",... connect consecutive full-size anchors;
/// even arcs connect consecutive half-size anchors and bulge outward.
struct KnotSpec {
  int n = 0;
  std::vector<double> anchors_deg;
  double clearance = 0.15;
  double tube_radius = 0.05;
  double smoothing = 0.9;
  std::map<std::string, std::vector<Point3>> control_points;
  std::vector<CrossingRecord> expected_crossings;

  static KnotSpec from_json_text(const std::string& text);
  std::string to_json_text() const;
  void validate() const;
};

/// Span of one stored arc inside the fundamental window [0,1): the stored
/// arc scaled by h^shift occupies parameters [t0, t1].
struct ArcSpan {
  std::string name;
  int shift = 0;
  double t0 = 0.0, t1 = 0.0;
};

/// Curve gamma : R -> R^3 with gamma(t+1) = h(gamma(t)) exactly. One period
/// is a C^1 cardinal spline through the window control polygon; other
/// periods are evaluated by exact power-of-two scaling.
class KnotCurve {
public:
  Point3 at(double t) const;
  Point3 d1(double t) const;
  Point3 d2(double t) const;

  int segments() const { return m_; }
  const std::vector<ArcSpan>& arcs() const { return arcs_; }
  const KnotSpec& spec() const { return spec_; }
  const std::vector<Point3>& window_controls() const { return pts_; }

  /// Name and shift of the stored arc the parameter t lies on.
  std::pair<std::string, int> arc_at(double t) const;

  friend KnotCurve build_knot(const KnotSpec& spec);

private:
  int m_ = 0;
  std::vector<Point3> pts_;   // P_0..P_{m-1}; P_m = h(P_0) implied
  std::vector<Point3> tans_;  // dgamma/dt at the nodes
  std::vector<ArcSpan> arcs_;
  KnotSpec spec_;

  void eval_base(double frac, Point3* p, Point3* d, Point3* dd) const;
};

/// Assembles and validates the curve. Control points default to the shipped
/// diagram family when the spec carries none. Throws infeasible_spec when
/// the arcs come closer than clearance allows.
KnotCurve build_knot(const KnotSpec& spec);

/// Stored invariant of the diagram family (no surface computation).
int genus_of(const KnotSpec& spec);

struct FootResult {
  double t = 0.0;   // foot parameter
  double u = 0.0;   // offsets in the frame at t
  double v = 0.0;
  double r = 0.0;   // tube radius at t
  bool inside = false;
};

/// Equivariant tube coordinates around the curve: a rotation-minimizing
/// normal frame closed up by distributing the holonomy angle linearly in t,
/// and radius r0 * 2^-t so the tube maps onto itself under h.
class TubeChart {
public:
  explicit TubeChart(KnotCurve curve);

  const KnotCurve& center() const { return curve_; }
  double r0() const { return r0_; }
  double radius(double t) const { return r0_ * std::exp2(-t); }
  void frame(double t, Point3& e1, Point3& e2) const;

  /// Orthogonal foot of x on the curve plus frame offsets. Never throws;
  /// points far below representable tube scales report inside=false.
  FootResult locate(const Point3& x) const;

  /// Tube point -> cylinder {x2^2+x3^2 <= 4}: (t, 2u/r, 2v/r).
  /// Throws outside_tube for exterior points.
  Point3 to_cylinder(const Point3& x) const;

  /// Inverse chart; requires x2^2+x3^2 <= 4 (+tolerance).
  Point3 from_cylinder(const Point3& c) const;

private:
  KnotCurve curve_;
  double r0_;
  // coarse foot-search table over t in [kTabLo, kTabHi]
  std::vector<Point3> tab_pts_;
  double tab_lo_, tab_step_;
  // rotation-minimizing frame at grid nodes of the base window
  std::vector<Point3> rmf_e1_;
  std::vector<Point3> rmf_tan_;
  double holonomy_ = 0.0;
  int nf_ = 0;

  void build_tables();
};

/// The conjugating chart as one operation: forward = tube -> cylinder,
/// inverse = cylinder -> tube.
Point3 zeta(const TubeChart& chart, const Point3& p, dir d);

/// OBJ exports with fixed vertex ordering.
std::string knot_obj_polyline(const KnotCurve& curve, int samples_per_period = 256,
                              double t_lo = -1.0, double t_hi = 2.0);
std::string tube_obj_mesh(const TubeChart& chart, int rings = 96, int ring_segments = 16);

}  // namespace wildarc
