#include "k3walls/slice.hpp"

#include <stdexcept>

namespace k3walls {

SliceSpec::SliceSpec(const Rational& m, bool normalized, ChargeFrame frame)
    : m_(m), normalized_(normalized), frame_(frame), h2_raw_(2 * m - 2) {
  if (m < 2) throw std::domain_error("slice parameter m must be >= 2, got " + to_fraction_string(m));
  sqrt_h2_ = QuadExt::sqrt_of(h2_raw_);
}

SliceSpec SliceSpec::perturbed(std::int64_t n, const Rational& eps, ChargeFrame frame) {
  if (eps <= 0 || eps >= 1) throw std::domain_error("perturbation eps must lie in (0,1)");
  return SliceSpec(Rational(n) + eps, true, frame);
}

QuadExt SliceSpec::h_dot(DivisorClass c1) const {
  // (c+mf).(alpha c + beta f) = alpha (m-2) + beta
  const Rational raw = c1.alpha * (m_ - 2) + c1.beta;
  if (!normalized_) return QuadExt(raw);
  return QuadExt(raw) / sqrt_h2_;
}

QuadExt SliceSpec::d_g(DivisorClass c1) const {
  if (!normalized_) throw std::domain_error("d_g needs the normalized slice (G^2 = -1)");
  // (alpha c + beta f).(c + (2-m) f) = beta - alpha m
  const Rational raw = Rational(c1.beta) - c1.alpha * m_;
  return QuadExt(-raw) / sqrt_h2_;
}

CentralCharge central_charge(const MukaiVector& v, const Rational& u, const Rational& t,
                             const SliceSpec& slice) {
  if (t <= 0) throw std::domain_error("central charge is defined on t > 0");
  const ChargeAtPoint z = charge_at(v, QuadExt(u), QuadExt(t * t), slice);
  return {z.re, QuadExt(t) * z.im_over_t};
}

ChargeAtPoint charge_at(const MukaiVector& v, const QuadExt& u, const QuadExt& t_sq,
                        const SliceSpec& slice) {
  const QuadExt d = slice.h_dot(v.c1);
  const QuadExt h2 = slice.h_squared();
  const QuadExt x4(slice.charge_component(v));
  const QuadExt re = u * d - x4 - (u * u - t_sq) * h2 * Rational(v.r) / Rational(2);
  const QuadExt imt = d - u * Rational(v.r) * h2;
  return {re, imt};
}

std::optional<QuadExt> slope(const MukaiVector& v, const SliceSpec& slice) {
  if (v.r == 0) return std::nullopt;
  return slice.h_dot(v.c1) / Rational(v.r);
}

bool numerically_in_heart(const MukaiVector& v, const Rational& u, const SliceSpec& slice,
                          bool strict) {
  const QuadExt imt = slice.h_dot(v.c1) - QuadExt(u) * Rational(v.r) * slice.h_squared();
  return strict ? imt.sign() > 0 : imt.sign() >= 0;
}

namespace {

// Phase bucket in (0,2]: (0,1) upper half, 1 negative reals, (1,2) lower half,
// 2 positive reals.
int phase_bucket(const CentralCharge& z) {
  const int si = z.im.sign();
  if (si > 0) return 1;
  if (si < 0) return 3;
  return z.re.sign() < 0 ? 2 : 4;
}

}  // namespace

PhaseOrder phase_compare(const MukaiVector& v, const MukaiVector& w, const Rational& u,
                         const Rational& t, const SliceSpec& slice) {
  const CentralCharge zv = central_charge(v, u, t, slice);
  const CentralCharge zw = central_charge(w, u, t, slice);
  if (zv.is_zero() || zw.is_zero()) {
    throw std::domain_error("phase comparison at a vanishing central charge (hole of the slice)");
  }
  const int bv = phase_bucket(zv);
  const int bw = phase_bucket(zw);
  if (bv != bw) return bv < bw ? PhaseOrder::less : PhaseOrder::greater;
  // same open half-plane: sign of Im(Z(v) conj Z(w)) orders the phases
  const int cross = (zv.im * zw.re - zv.re * zw.im).sign();
  if (cross == 0) return PhaseOrder::equal;
  return cross > 0 ? PhaseOrder::greater : PhaseOrder::less;
}

}  // namespace k3walls
