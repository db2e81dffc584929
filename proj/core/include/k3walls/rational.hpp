#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace k3walls {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& x) { return x.sign(); }
inline int sign_of(const Int& x) { return x.sign(); }

/// Renders "p/q" (or "p" when q == 1); no decimal points anywhere.
std::string to_fraction_string(const Rational& x);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& text);

/// floor(sqrt(n)), n >= 0.
Int isqrt(const Int& n);

/// Square root when n is a perfect square, nullopt otherwise.
std::optional<Int> exact_sqrt(const Int& n);

/// n = k^2 * d0 with d0 squarefree. Requires n > 0.
std::pair<Int, Int> square_squarefree_split(Int n);

}  // namespace k3walls
