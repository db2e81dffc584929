#pragma once

#include "k3walls/rational.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace k3walls {

/// Divisor alpha*c + beta*f in NS(X) = Zc + Zf of the elliptic K3,
/// with c^2 = -2, c.f = 1, f^2 = 0.
struct DivisorClass {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  friend bool operator==(DivisorClass, DivisorClass) = default;
  DivisorClass operator+(DivisorClass o) const { return {alpha + o.alpha, beta + o.beta}; }
  DivisorClass operator-(DivisorClass o) const { return {alpha - o.alpha, beta - o.beta}; }
  DivisorClass operator-() const { return {-alpha, -beta}; }
  friend DivisorClass operator*(std::int64_t k, DivisorClass d) { return {k * d.alpha, k * d.beta}; }
  std::string to_string() const;
};

inline DivisorClass section_class() { return {1, 0}; }
inline DivisorClass fiber_class() { return {0, 1}; }

std::int64_t intersect(DivisorClass d1, DivisorClass d2);
inline std::int64_t self_intersection(DivisorClass d) { return intersect(d, d); }

/// Mukai vector (r, c1, s) in H^0 + NS + H^4.
struct MukaiVector {
  std::int64_t r = 0;
  DivisorClass c1;
  std::int64_t s = 0;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
  MukaiVector operator+(const MukaiVector& o) const { return {r + o.r, c1 + o.c1, s + o.s}; }
  MukaiVector operator-(const MukaiVector& o) const { return {r - o.r, c1 - o.c1, s - o.s}; }
  MukaiVector operator-() const { return {-r, -c1, -s}; }
  friend MukaiVector operator*(std::int64_t k, const MukaiVector& v) {
    return {k * v.r, k * v.c1, k * v.s};
  }
  bool is_zero() const { return r == 0 && c1 == DivisorClass{} && s == 0; }
  std::string to_string() const;
};

/// Mukai pairing (v,w) = c1(v).c1(w) - r_v s_w - r_w s_v.  chi(E,F) = -(v(E),v(F)).
std::int64_t pairing(const MukaiVector& v, const MukaiVector& w);

/// Chern data (ch0, ch1, ch2) of a sheaf/complex; ch2 may be half-integral.
struct SheafData {
  std::int64_t r = 0;
  DivisorClass c1;
  Rational ch2 = 0;
};

/// v(E) = ch(E) sqrt(td X) = (r, c1, ch2 + r).  Throws std::domain_error when
/// ch2 + r is not an integer (the class would miss the lattice).
MukaiVector mukai_vector(const SheafData& d);
SheafData chern_character(const MukaiVector& v);

/// Multiplication by exp(d): (r, c1 + r d, s + c1.d + r d^2/2).  An isometry.
MukaiVector twist(const MukaiVector& v, DivisorClass d);

/// (r, -c1, s); involution and isometry.
MukaiVector dual(const MukaiVector& v);

/// chi(v) = -(v, v(O_X)) = r + s.
std::int64_t euler_characteristic(const MukaiVector& v);

/// Reflection rho_s(v) = v + (v,s)s, the cohomological action of the
/// (inverse) spherical twist by s.  Throws std::domain_error unless (s,s) = -2.
MukaiVector reflect(const MukaiVector& v, const MukaiVector& s);

bool is_spherical(const MukaiVector& v);
bool is_isotropic(const MukaiVector& v);
/// gcd of components is 1.  Throws std::domain_error on the zero vector.
bool is_primitive(const MukaiVector& v);

inline MukaiVector structure_sheaf_vector() { return {1, {0, 0}, 1}; }
inline MukaiVector line_bundle_vector(DivisorClass d) {
  return twist(structure_sheaf_vector(), d);
}
inline MukaiVector ideal_sheaf_vector(std::int64_t n) { return {1, {0, 0}, 1 - n}; }

/// Gram matrix of the full rank-4 lattice in the basis
/// {(1,0,0,0), (0,c,0), (0,f,0), (0,0,1)}.
std::array<std::array<std::int64_t, 4>, 4> mukai_gram_matrix();

}  // namespace k3walls
