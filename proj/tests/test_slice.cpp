#include "k3walls/slice.hpp"

#include <doctest.h>

#include <random>

using namespace k3walls;

namespace {

MukaiVector rand_vector(std::mt19937_64& rng, int bound = 6) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  return {d(rng), {d(rng), d(rng)}, d(rng)};
}

}  // namespace

TEST_CASE("slice construction and derived data") {
  const SliceSpec sl = SliceSpec::normalized_slice(Rational(10));
  CHECK(sl.h_squared() == QuadExt(1));
  CHECK(sl.h_squared_raw() == Rational(18));
  CHECK(sl.sqrt_h2() == QuadExt(0, 3, 2));
  CHECK(sl.radicand() == 2);
  CHECK_THROWS_AS(SliceSpec::normalized_slice(Rational(1)), std::domain_error);

  // perturbed n = 2 slice: 2m-2 = 9/4 is a square, so the field is plain Q
  const SliceSpec pert = SliceSpec::perturbed(2, Rational(1, 8), ChargeFrame::chern_character);
  CHECK(pert.radicand() == 1);
  CHECK(pert.sqrt_h2() == QuadExt(Rational(3, 2)));

  // G-frame coefficient: d_g = -c1.G, with G = (c+(2-m)f)/sqrt(2m-2)
  const SliceSpec sl3 = SliceSpec::normalized_slice(Rational(3));  // sqrt(4) = 2
  CHECK(sl3.d_g({1, 0}) == QuadExt(Rational(3, 2)));  // -(0 - 3)/2
  CHECK(sl3.h_dot({1, 3}) == QuadExt(2));             // (1*1+3)/2
}

TEST_CASE("central charge of the structure sheaf") {
  // Z(v(O_X)) at u=0: (t^2 H^2 / 2 - 1) + 0 i, in the default mukai frame
  for (const Rational t : {Rational(1), Rational(3, 2), Rational(5)}) {
    const SliceSpec sl = SliceSpec::normalized_slice(Rational(7));
    const CentralCharge z = central_charge(structure_sheaf_vector(), Rational(0), t, sl);
    CHECK(z.re == QuadExt(t * t / 2 - 1));
    CHECK(z.im.is_zero());
  }
  CHECK_THROWS_AS(
      central_charge(structure_sheaf_vector(), Rational(0), Rational(-1),
                     SliceSpec::normalized_slice(Rational(7))),
      std::domain_error);
}

TEST_CASE("rank-0 fiber class has positive imaginary part") {
  const SliceSpec sl = SliceSpec::normalized_slice(Rational(5));
  for (const Rational t : {Rational(1, 7), Rational(2)}) {
    const CentralCharge z = central_charge({0, {0, 1}, 0}, Rational(-3), t, sl);
    CHECK(z.im.sign() > 0);
  }
}

TEST_CASE("central charge is additive") {
  std::mt19937_64 rng(31);
  const SliceSpec sl = SliceSpec::normalized_slice(Rational(6), ChargeFrame::chern_character);
  for (int i = 0; i < 100; ++i) {
    const MukaiVector v = rand_vector(rng);
    const MukaiVector w = rand_vector(rng);
    const CentralCharge zv = central_charge(v, Rational(1, 3), Rational(2), sl);
    const CentralCharge zw = central_charge(w, Rational(1, 3), Rational(2), sl);
    const CentralCharge zvw = central_charge(v + w, Rational(1, 3), Rational(2), sl);
    CHECK(zvw.re == zv.re + zw.re);
    CHECK(zvw.im == zv.im + zw.im);
  }
}

TEST_CASE("the two frames differ by the rank, in the real part only") {
  std::mt19937_64 rng(37);
  const SliceSpec mk = SliceSpec::normalized_slice(Rational(9));
  const SliceSpec ch = mk.with_frame(ChargeFrame::chern_character);
  for (int i = 0; i < 50; ++i) {
    const MukaiVector v = rand_vector(rng);
    const CentralCharge a = central_charge(v, Rational(-1, 2), Rational(3), mk);
    const CentralCharge b = central_charge(v, Rational(-1, 2), Rational(3), ch);
    CHECK(b.re == a.re + QuadExt(v.r));
    CHECK(b.im == a.im);
  }
}

TEST_CASE("slope values") {
  const SliceSpec sl = SliceSpec::normalized_slice(Rational(4));  // n = m = 4, sqrt(6)
  const auto mu = slope({1, {1, 4}, 0}, sl);
  REQUIRE(mu.has_value());
  CHECK(*mu == QuadExt::sqrt_of(Rational(6)));  // (2n-2)/sqrt(2n-2)
  CHECK(!slope({0, {0, 1}, 0}, sl).has_value());
  const auto zero = slope({2, {0, 0}, 0}, sl);
  REQUIRE(zero.has_value());
  CHECK(zero->is_zero());
}

TEST_CASE("heart membership boundary") {
  const SliceSpec sl = SliceSpec::normalized_slice(Rational(5));
  const MukaiVector iz = ideal_sheaf_vector(5);
  CHECK(numerically_in_heart(iz, Rational(0), sl));
  CHECK(numerically_in_heart(iz, Rational(-2), sl));
  CHECK(!numerically_in_heart(iz, Rational(1, 10), sl));
  CHECK(!numerically_in_heart(iz, Rational(0), sl, /*strict=*/true));
  // rank-0 classes always pass
  CHECK(numerically_in_heart({0, {1, 9}, 3}, Rational(100), sl));
  // boundary at u = mu / H^2
  const MukaiVector v{2, {1, 3}, 0};
  const QuadExt mu = *slope(v, sl);
  CHECK((sl.h_dot(v.c1) - QuadExt(2) * mu).is_zero());
}

TEST_CASE("phase comparison") {
  const SliceSpec sl = SliceSpec::normalized_slice(Rational(10));
  const MukaiVector v{1, {1, 3}, 0};
  CHECK(phase_compare(v, v, Rational(-1), Rational(2), sl) == PhaseOrder::equal);

  // large volume: smaller slope means smaller phase for positive-rank classes
  const MukaiVector a{2, {1, 3}, 0};
  const MukaiVector b{1, {1, 3}, 0};
  REQUIRE(*slope(a, sl) < *slope(b, sl));
  CHECK(phase_compare(a, b, Rational(1, 3), Rational(1000000), sl) == PhaseOrder::less);

  // hole of the slice: Z((1, c+3f, 4)) vanishes at (u, t) = (2, 2) on m = 3
  const SliceSpec sl3 = SliceSpec::normalized_slice(Rational(3));  // field is Q
  const MukaiVector holy{1, {1, 3}, 4};
  CHECK(central_charge(holy, Rational(2), Rational(2), sl3).is_zero());
  CHECK_THROWS_AS(phase_compare(holy, a, Rational(2), Rational(2), sl3), std::domain_error);
}

TEST_CASE("normalized and unnormalized slices agree after rescaling") {
  // m = 3: sqrt(2m-2) = 2, so the rescaled parameters stay rational
  const Rational scale = 2;
  const SliceSpec norm = SliceSpec::normalized_slice(Rational(3));
  const SliceSpec raw = SliceSpec::unnormalized_slice(Rational(3));
  std::mt19937_64 rng(41);
  const Rational us[] = {Rational(-1), Rational(1, 2), Rational(0)};
  const Rational ts[] = {Rational(1), Rational(5, 3)};
  for (int i = 0; i < 60; ++i) {
    const MukaiVector v = rand_vector(rng);
    const MukaiVector w = rand_vector(rng);
    for (const auto& u : us) {
      for (const auto& t : ts) {
        const CentralCharge zn = central_charge(v, u * scale, t * scale, norm);
        const CentralCharge zr = central_charge(v, u, t, raw);
        // sigma_{uH, tH} = sigma_{(u k)(H/k), (t k)(H/k)}: identical charges
        CHECK(zn.re == zr.re);
        CHECK(zn.im == zr.im);
        const CentralCharge zvn = central_charge(w, u * scale, t * scale, norm);
        const CentralCharge zvr = central_charge(w, u, t, raw);
        if (!zn.is_zero() && !zr.is_zero() && !zvn.is_zero() && !zvr.is_zero()) {
          CHECK(phase_compare(v, w, u * scale, t * scale, norm) ==
                phase_compare(v, w, u, t, raw));
        }
      }
    }
  }
}
