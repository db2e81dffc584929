#include "k3walls/rational.hpp"

#include <stdexcept>

namespace k3walls {

std::string to_fraction_string(const Rational& x) {
  const Int num = numerator(x);
  const Int den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational literal '" + text + "': " + e.what());
  }
}

Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative value");
  if (n == 0) return 0;
  Int x = Int(1) << ((msb(n) / 2) + 1);
  while (true) {
    Int y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

std::pair<Int, Int> square_squarefree_split(Int n) {
  if (n <= 0) throw std::invalid_argument("square_squarefree_split needs n > 0");
  Int k = 1, d0 = 1;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int mult = 0;
    while (n % p == 0) {
      n /= p;
      ++mult;
    }
    for (int i = 0; i < mult / 2; ++i) k *= p;
    if (mult % 2) d0 *= p;
  }
  d0 *= n;  // leftover prime
  return {k, d0};
}

}  // namespace k3walls
