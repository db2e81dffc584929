#include "k3walls/mukai.hpp"

#include <numeric>
#include <stdexcept>

namespace k3walls {

std::string DivisorClass::to_string() const {
  return std::to_string(alpha) + "c+" + std::to_string(beta) + "f";
}

std::string MukaiVector::to_string() const {
  return "(" + std::to_string(r) + ", " + c1.to_string() + ", " + std::to_string(s) + ")";
}

std::int64_t intersect(DivisorClass d1, DivisorClass d2) {
  return -2 * d1.alpha * d2.alpha + d1.alpha * d2.beta + d2.alpha * d1.beta;
}

std::int64_t pairing(const MukaiVector& v, const MukaiVector& w) {
  return intersect(v.c1, w.c1) - v.r * w.s - w.r * v.s;
}

MukaiVector mukai_vector(const SheafData& d) {
  const Rational h4 = d.ch2 + d.r;
  if (denominator(h4) != 1) {
    throw std::domain_error("ch2 + r = " + to_fraction_string(h4) +
                            " is not integral: no lattice point");
  }
  return {d.r, d.c1, static_cast<std::int64_t>(numerator(h4))};
}

SheafData chern_character(const MukaiVector& v) { return {v.r, v.c1, Rational(v.s - v.r)}; }

MukaiVector twist(const MukaiVector& v, DivisorClass d) {
  // d^2 is even on this lattice, so r d^2 / 2 stays integral.
  const std::int64_t dsq = self_intersection(d);
  return {v.r, v.c1 + v.r * d, v.s + intersect(v.c1, d) + v.r * dsq / 2};
}

MukaiVector dual(const MukaiVector& v) { return {v.r, -v.c1, v.s}; }

std::int64_t euler_characteristic(const MukaiVector& v) { return v.r + v.s; }

MukaiVector reflect(const MukaiVector& v, const MukaiVector& s) {
  if (pairing(s, s) != -2) {
    throw std::domain_error("reflect: " + s.to_string() + " is not spherical, (s,s) = " +
                            std::to_string(pairing(s, s)));
  }
  return v + pairing(v, s) * s;
}

bool is_spherical(const MukaiVector& v) { return pairing(v, v) == -2; }

bool is_isotropic(const MukaiVector& v) { return pairing(v, v) == 0; }

bool is_primitive(const MukaiVector& v) {
  if (v.is_zero()) throw std::domain_error("primitivity is undefined for the zero vector");
  std::int64_t g = std::gcd(std::gcd(v.r, v.c1.alpha), std::gcd(v.c1.beta, v.s));
  return g == 1 || g == -1;
}

std::array<std::array<std::int64_t, 4>, 4> mukai_gram_matrix() {
  const MukaiVector basis[4] = {
      {1, {0, 0}, 0}, {0, {1, 0}, 0}, {0, {0, 1}, 0}, {0, {0, 0}, 1}};
  std::array<std::array<std::int64_t, 4>, 4> g{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g[i][j] = pairing(basis[i], basis[j]);
  return g;
}

}  // namespace k3walls
