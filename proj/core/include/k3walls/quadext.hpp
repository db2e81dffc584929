#pragma once

#include "k3walls/rational.hpp"

#include <cstdint>
#include <string>

namespace k3walls {

/// Exact element a + b*sqrt(d) of Q(sqrt(d)).
///
/// The radicand d is a squarefree integer >= 1; d == 1 means the value is
/// plain rational (b is folded into a on construction). Arithmetic between
/// two genuinely irrational values requires equal radicands; a rational
/// value combines with any radicand. Signs and comparisons are exact: no
/// floating point is involved anywhere.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}        // NOLINT: implicit by design
  QuadExt(std::int64_t a) : a_(a) {}           // NOLINT
  QuadExt(const Rational& a, const Rational& b, std::int64_t d);

  /// sqrt(x) for rational x >= 0, with the radicand reduced to squarefree form.
  static QuadExt sqrt_of(const Rational& x);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  std::int64_t radicand() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  /// Exact sign via rational comparisons of a^2 against b^2 d.
  int sign() const;

  QuadExt conjugate() const { return QuadExt(a_, -b_, d_); }
  /// Field norm a^2 - b^2 d (rational).
  Rational norm() const { return a_ * a_ - b_ * b_ * d_; }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt l, const QuadExt& r) { return l += r; }
  friend QuadExt operator-(QuadExt l, const QuadExt& r) { return l -= r; }
  friend QuadExt operator*(QuadExt l, const QuadExt& r) { return l *= r; }
  friend QuadExt operator/(QuadExt l, const QuadExt& r) { return l /= r; }

  friend bool operator==(const QuadExt& l, const QuadExt& r) { return (l - r).is_zero(); }
  friend bool operator!=(const QuadExt& l, const QuadExt& r) { return !(l == r); }
  friend bool operator<(const QuadExt& l, const QuadExt& r) { return (l - r).sign() < 0; }
  friend bool operator<=(const QuadExt& l, const QuadExt& r) { return (l - r).sign() <= 0; }
  friend bool operator>(const QuadExt& l, const QuadExt& r) { return (l - r).sign() > 0; }
  friend bool operator>=(const QuadExt& l, const QuadExt& r) { return (l - r).sign() >= 0; }

  std::string to_string() const;
  /// Approximation for rendering only; never used in decisions.
  double to_double() const;

 private:
  // Aligns radicands; throws std::invalid_argument if both sides are
  // irrational with different d.
  static std::int64_t common_radicand(const QuadExt& l, const QuadExt& r);

  Rational a_ = 0;
  Rational b_ = 0;
  std::int64_t d_ = 1;
};

inline QuadExt inverse(const QuadExt& x) { return QuadExt(1) / x; }

}  // namespace k3walls
