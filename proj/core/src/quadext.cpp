#include "k3walls/quadext.hpp"

#include <cmath>
#include <stdexcept>

namespace k3walls {

QuadExt::QuadExt(const Rational& a, const Rational& b, std::int64_t d) : a_(a), b_(b), d_(d) {
  if (d_ < 1) throw std::invalid_argument("radicand must be >= 1");
  if (d_ > 1 && b_ != 0) {
    // canonicalize: sqrt(k^2 d0) = k sqrt(d0)
    auto [k, d0] = square_squarefree_split(Int(d_));
    if (k != 1) {
      b_ *= Rational(k);
      d_ = static_cast<std::int64_t>(d0);
    }
  }
  if (d_ == 1 || b_ == 0) {
    a_ += b_;
    b_ = 0;
    d_ = 1;
  }
}

QuadExt QuadExt::sqrt_of(const Rational& x) {
  if (x < 0) throw std::invalid_argument("sqrt_of needs x >= 0");
  if (x == 0) return QuadExt(0);
  // sqrt(p/q) = sqrt(p*q)/q
  const Int pq = numerator(x) * denominator(x);
  auto [k, d0] = square_squarefree_split(pq);
  const Rational coeff(k, denominator(x));
  if (d0 == 1) return QuadExt(coeff);
  if (d0 > Int(std::int64_t(1) << 62)) throw std::overflow_error("radicand too large");
  return QuadExt(0, coeff, static_cast<std::int64_t>(d0));
}

int QuadExt::sign() const {
  if (b_ == 0) return sign_of(a_);
  if (a_ == 0) return sign_of(b_);
  const int sa = sign_of(a_);
  const int sb = sign_of(b_);
  if (sa == sb) return sa;
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * d_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

std::int64_t QuadExt::common_radicand(const QuadExt& l, const QuadExt& r) {
  if (l.d_ == r.d_) return l.d_;
  if (l.b_ == 0) return r.d_;
  if (r.b_ == 0) return l.d_;
  throw std::invalid_argument("mixed radicands: sqrt(" + std::to_string(l.d_) + ") vs sqrt(" +
                              std::to_string(r.d_) + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = common_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = common_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  d_ = common_radicand(*this, o);
  const Rational a = a_ * o.a_ + b_ * o.b_ * d_;
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  d_ = common_radicand(*this, o);
  const Rational n = o.a_ * o.a_ - o.b_ * o.b_ * d_;
  if (n == 0) throw std::domain_error("division by zero in Q(sqrt d)");
  const Rational a = (a_ * o.a_ - b_ * o.b_ * d_) / n;
  const Rational b = (b_ * o.a_ - a_ * o.b_) / n;
  a_ = a;
  b_ = b;
  return *this;
}

std::string QuadExt::to_string() const {
  if (b_ == 0) return to_fraction_string(a_);
  std::string out;
  if (a_ != 0) out += to_fraction_string(a_) + (b_ > 0 ? " + " : " - ");
  else if (b_ < 0) out += "-";
  const Rational babs = b_ < 0 ? Rational(-b_) : b_;
  if (babs != 1) out += to_fraction_string(babs) + "*";
  out += "sqrt(" + std::to_string(d_) + ")";
  return out;
}

double QuadExt::to_double() const {
  return static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(static_cast<double>(d_));
}

}  // namespace k3walls
