#pragma once

#include "k3walls/slice.hpp"

#include <optional>
#include <string>

namespace k3walls {

/// A wall locus on P_H written as A(u^2 + t^2) + B u + C = 0 (the common
/// factor t already divided out).  Coefficients are kept exactly as derived;
/// `canonical()` rescales for projective comparisons.
struct WallQuadratic {
  QuadExt a;
  QuadExt b;
  QuadExt c;

  bool all_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
  /// Divides by the first nonzero coefficient; coincidence tests become equality.
  WallQuadratic canonical() const;
  std::string to_string() const;
};

/// B^2 - 4AC of the stored coefficients (scale-sensitive; the Delta bounds of
/// the scans are stated for specific normalizations).  Throws for A = 0.
QuadExt discriminant(const WallQuadratic& q);

/// True iff the two triples differ by a nonzero scalar.
bool walls_coincide(const WallQuadratic& q1, const WallQuadratic& q2);

struct WallGeometry {
  enum class Kind { vertical, semicircle, empty, everywhere };
  Kind kind = Kind::empty;
  QuadExt u0;         // vertical: the ray { u = u0 }
  QuadExt center_u;   // semicircle center (on the u-axis)
  QuadExt radius_sq;  // semicircle squared radius, > 0

  static WallGeometry vertical(QuadExt u) { return {Kind::vertical, std::move(u), {}, {}}; }
  static WallGeometry semicircle(QuadExt c, QuadExt r2) {
    return {Kind::semicircle, {}, std::move(c), std::move(r2)};
  }
  static WallGeometry empty() { return {Kind::empty, {}, {}, {}}; }
  static WallGeometry everywhere() { return {Kind::everywhere, {}, {}, {}}; }
  std::string to_string() const;
};

WallGeometry classify_quadratic(const WallQuadratic& q);

struct WallLocus {
  WallQuadratic quadratic;
  WallGeometry geometry;
};

/// The locus where Z(v) and Z(w) are real-proportional, from expanding
/// Im(Z(v) conj Z(w))/t in the slice's charge frame:
///   A = H^2 (r_v D_w - r_w D_v),  B = -2 H^2 (r_v x_w - r_w x_v),
///   C = -2 (x_v D_w - x_w D_v),
/// with D = H.c1 and x the frame's H^4-type component.  Symmetric in (v, w)
/// up to sign, i.e. the same locus.  Proportional charges give `everywhere`.
WallLocus wall_locus(const MukaiVector& v, const MukaiVector& w, const SliceSpec& slice);

/// t^2 of the intersection with the t-axis, when the wall meets {u = 0, t > 0}.
/// Verticals and circles missing the axis give nullopt.
std::optional<QuadExt> t_intercept_sq(const WallGeometry& g);

/// t^2 where the locus crosses the vertical line u = u0 with t > 0.
std::optional<QuadExt> t_sq_at_u(const WallGeometry& g, const QuadExt& u0);

/// Strict containment of the inner disk in the outer one.
/// Throws std::domain_error unless both are semicircles.
bool is_nested(const WallGeometry& inner, const WallGeometry& outer);

/// Exact incidence of the slice point (u, t), t > 0.
bool point_on_wall(const WallGeometry& g, const Rational& u, const Rational& t);

/// Do the two loci share a point with t > 0?  Exact, via the radical line;
/// tangency at t = 0 does not count (the slice is open there).
bool meet_on_slice(const WallGeometry& g1, const WallGeometry& g2);

}  // namespace k3walls
