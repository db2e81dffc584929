#include "k3walls/quadext.hpp"

#include <doctest.h>

#include <random>

using namespace k3walls;

namespace {

Rational rand_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 12);
  return Rational(num(rng), den(rng));
}

QuadExt rand_quadext(std::mt19937_64& rng, std::int64_t d) {
  return QuadExt(rand_rational(rng), rand_rational(rng), d);
}

}  // namespace

TEST_CASE("construction folds square radicands away") {
  CHECK(QuadExt(Rational(1), Rational(2), 1).is_rational());
  CHECK(QuadExt(Rational(1), Rational(2), 1).rational_part() == Rational(3));
  CHECK(QuadExt::sqrt_of(Rational(4)) == QuadExt(2));
  CHECK(QuadExt::sqrt_of(Rational(8)).radicand() == 2);
  CHECK(QuadExt::sqrt_of(Rational(8)).radical_part() == Rational(2));
  CHECK(QuadExt::sqrt_of(Rational(9, 4)) == QuadExt(Rational(3, 2)));
  CHECK(QuadExt::sqrt_of(Rational(1, 2)) == QuadExt(0, Rational(1, 2), 2));
}

TEST_CASE("sqrt_of squares back") {
  for (int v : {2, 3, 5, 12, 18, 50, 98}) {
    const QuadExt s = QuadExt::sqrt_of(Rational(v));
    CHECK(s * s == QuadExt(Rational(v)));
    CHECK(s.sign() == 1);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20240817);
  for (int i = 0; i < 300; ++i) {
    const QuadExt x = rand_quadext(rng, 7);
    const QuadExt y = rand_quadext(rng, 7);
    const QuadExt z = rand_quadext(rng, 7);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("exact sign agrees with multiplication") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const QuadExt x = rand_quadext(rng, 3);
    const QuadExt y = rand_quadext(rng, 3);
    CHECK((x * y).sign() == x.sign() * y.sign());
  }
}

TEST_CASE("sign resolves close mixed-sign cases exactly") {
  // 7 - 4 sqrt(3) = (2 - sqrt(3))^2 > 0 but tiny
  CHECK(QuadExt(7, -4, 3).sign() == 1);
  CHECK(QuadExt(-7, 4, 3).sign() == -1);
  CHECK(QuadExt(49, -20, 6).sign() == 1);   // 49 vs 20 sqrt(6) = 48.98..
  CHECK(QuadExt(-49, 20, 6).sign() == -1);
}

TEST_CASE("non-squarefree radicands canonicalize on construction") {
  CHECK(QuadExt(2, -1, 4).is_zero());          // 2 - sqrt(4)
  CHECK(QuadExt(3, -1, 9).is_zero());          // 3 - sqrt(9)
  CHECK(QuadExt(0, 1, 8) == QuadExt(0, 2, 2)); // sqrt(8) = 2 sqrt(2)
  CHECK(QuadExt(5, 0, 7).radicand() == 1);     // rational values carry d = 1
}

TEST_CASE("mixed radicands combine through rationals only") {
  const QuadExt a(1, 2, 5);
  const QuadExt b(Rational(3));
  CHECK((a + b).radicand() == 5);
  CHECK((b * a).radicand() == 5);
  const QuadExt c(0, 1, 7);
  CHECK_THROWS_AS(a + c, std::invalid_argument);
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(QuadExt(1) / QuadExt(0), std::domain_error);
}

TEST_CASE("negation flips both parts, conjugation only the radical one") {
  const QuadExt x(3, -2, 5);
  CHECK((-x) == QuadExt(-3, 2, 5));
  CHECK(x.conjugate() == QuadExt(3, 2, 5));
  CHECK((x + (-x)).is_zero());
  CHECK(x * x.conjugate() == QuadExt(x.norm()));
}
