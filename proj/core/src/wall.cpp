#include "k3walls/wall.hpp"

#include <stdexcept>

namespace k3walls {

WallQuadratic WallQuadratic::canonical() const {
  const QuadExt* lead = nullptr;
  if (!a.is_zero()) lead = &a;
  else if (!b.is_zero()) lead = &b;
  else if (!c.is_zero()) lead = &c;
  if (!lead) return *this;
  return {a / *lead, b / *lead, c / *lead};
}

std::string WallQuadratic::to_string() const {
  return "[" + a.to_string() + "]*(u^2+t^2) + [" + b.to_string() + "]*u + [" + c.to_string() + "]";
}

QuadExt discriminant(const WallQuadratic& q) {
  if (q.a.is_zero()) throw std::domain_error("discriminant of a vertical (A = 0) wall");
  return q.b * q.b - Rational(4) * q.a * q.c;
}

bool walls_coincide(const WallQuadratic& q1, const WallQuadratic& q2) {
  // cross-ratios avoid dividing; also covers zero triples
  const QuadExt ab = q1.a * q2.b - q1.b * q2.a;
  const QuadExt ac = q1.a * q2.c - q1.c * q2.a;
  const QuadExt bc = q1.b * q2.c - q1.c * q2.b;
  if (!(ab.is_zero() && ac.is_zero() && bc.is_zero())) return false;
  return q1.all_zero() == q2.all_zero();
}

WallGeometry classify_quadratic(const WallQuadratic& q) {
  if (q.all_zero()) return WallGeometry::everywhere();
  if (q.a.is_zero()) {
    if (q.b.is_zero()) return WallGeometry::empty();
    return WallGeometry::vertical(-q.c / q.b);
  }
  const QuadExt center = -q.b / (Rational(2) * q.a);
  const QuadExt r2 = center * center - q.c / q.a;
  if (r2.sign() > 0) return WallGeometry::semicircle(center, r2);
  return WallGeometry::empty();
}

std::string WallGeometry::to_string() const {
  switch (kind) {
    case Kind::vertical: return "vertical u = " + u0.to_string();
    case Kind::semicircle:
      return "semicircle center " + center_u.to_string() + ", radius^2 " + radius_sq.to_string();
    case Kind::empty: return "empty";
    case Kind::everywhere: return "everywhere";
  }
  return "?";
}

WallLocus wall_locus(const MukaiVector& v, const MukaiVector& w, const SliceSpec& slice) {
  if (v.is_zero() && w.is_zero()) throw std::domain_error("wall_locus of two zero vectors");
  const QuadExt dv = slice.h_dot(v.c1);
  const QuadExt dw = slice.h_dot(w.c1);
  const QuadExt xv(slice.charge_component(v));
  const QuadExt xw(slice.charge_component(w));
  const QuadExt h2 = slice.h_squared();
  const Rational rv(v.r), rw(w.r);
  WallQuadratic q{
      h2 * (dw * rv - dv * rw),
      Rational(-2) * h2 * (xw * rv - xv * rw),
      Rational(-2) * (dw * xv - dv * xw),
  };
  return {q, classify_quadratic(q)};
}

std::optional<QuadExt> t_intercept_sq(const WallGeometry& g) {
  return t_sq_at_u(g, QuadExt(0));
}

std::optional<QuadExt> t_sq_at_u(const WallGeometry& g, const QuadExt& u0) {
  if (g.kind != WallGeometry::Kind::semicircle) return std::nullopt;
  const QuadExt d = u0 - g.center_u;
  const QuadExt t2 = g.radius_sq - d * d;
  if (t2.sign() > 0) return t2;
  return std::nullopt;
}

bool is_nested(const WallGeometry& inner, const WallGeometry& outer) {
  if (inner.kind != WallGeometry::Kind::semicircle || outer.kind != WallGeometry::Kind::semicircle) {
    throw std::domain_error("nesting is defined for semicircles only");
  }
  const QuadExt ri = inner.radius_sq, ro = outer.radius_sq;
  if ((ro - ri).sign() <= 0) return false;
  const QuadExt dc = inner.center_u - outer.center_u;
  // dist < r_o - r_i  <=>  S := R_o + R_i - dist^2 > 2 sqrt(R_o R_i)
  const QuadExt s = ro + ri - dc * dc;
  if (s.sign() <= 0) return false;
  return (s * s - Rational(4) * ro * ri).sign() > 0;
}

bool point_on_wall(const WallGeometry& g, const Rational& u, const Rational& t) {
  if (t <= 0) throw std::domain_error("slice points need t > 0");
  switch (g.kind) {
    case WallGeometry::Kind::vertical: return (QuadExt(u) - g.u0).is_zero();
    case WallGeometry::Kind::semicircle: {
      const QuadExt d = QuadExt(u) - g.center_u;
      return (d * d + QuadExt(t * t) - g.radius_sq).is_zero();
    }
    case WallGeometry::Kind::empty: return false;
    case WallGeometry::Kind::everywhere: return true;
  }
  return false;
}

namespace {

// circle as u^2 + t^2 + p u + q = 0
struct MonicCircle {
  QuadExt p, q;
};

MonicCircle monic(const WallGeometry& g) {
  return {Rational(-2) * g.center_u, g.center_u * g.center_u - g.radius_sq};
}

}  // namespace

bool meet_on_slice(const WallGeometry& g1, const WallGeometry& g2) {
  using K = WallGeometry::Kind;
  if (g1.kind == K::empty || g2.kind == K::empty) return false;
  if (g1.kind == K::everywhere || g2.kind == K::everywhere) return true;
  if (g1.kind == K::vertical && g2.kind == K::vertical) return (g1.u0 - g2.u0).is_zero();
  if (g1.kind == K::vertical || g2.kind == K::vertical) {
    const WallGeometry& vert = g1.kind == K::vertical ? g1 : g2;
    const WallGeometry& circ = g1.kind == K::vertical ? g2 : g1;
    return t_sq_at_u(circ, vert.u0).has_value();
  }
  const MonicCircle c1 = monic(g1);
  const MonicCircle c2 = monic(g2);
  const QuadExt dp = c1.p - c2.p;
  if (dp.is_zero()) return (c1.q - c2.q).is_zero();  // concentric: meet iff identical
  const QuadExt u = (c2.q - c1.q) / dp;              // radical line
  const QuadExt t2 = -(u * u + c1.p * u + c1.q);
  return t2.sign() > 0;
}

}  // namespace k3walls
