#pragma once

#include "k3walls/mukai.hpp"
#include "k3walls/quadext.hpp"

#include <optional>
#include <string>

namespace k3walls {

/// Which cohomology class the central charge pairs exp(beta + i omega) with.
///
/// `mukai_vector` is the standard Z(E) = (exp(uH + itH), v(E)); the slice's
/// wall equations in that frame reproduce the Hilbert-Chow analysis.  The
/// `chern_character` frame pairs with ch(E) = v(E) - (0,0,r) instead; the
/// O'Grady-tower wall equations and their closed forms live in that frame.
/// The two differ by the real shift Z_ch = Z_mukai + r, so imaginary parts,
/// slopes and heart membership agree in both frames.
enum class ChargeFrame { mukai_vector, chern_character };

/// The 2-dimensional slice P_H = { sigma_{uH, tH} : u real, t > 0 } for the
/// polarization direction H = c + m f, optionally rescaled to H^2 = 1.
class SliceSpec {
 public:
  /// m may be rational (the n = 2 scan perturbs it to n + eps); requires m >= 2.
  SliceSpec(const Rational& m, bool normalized, ChargeFrame frame);

  static SliceSpec normalized_slice(const Rational& m,
                                    ChargeFrame frame = ChargeFrame::mukai_vector) {
    return SliceSpec(m, true, frame);
  }
  static SliceSpec unnormalized_slice(const Rational& m,
                                      ChargeFrame frame = ChargeFrame::mukai_vector) {
    return SliceSpec(m, false, frame);
  }
  /// The perturbed polarization c + (n + eps) f used for n = 2 scans.
  static SliceSpec perturbed(std::int64_t n, const Rational& eps, ChargeFrame frame);

  const Rational& m() const { return m_; }
  bool normalized() const { return normalized_; }
  ChargeFrame frame() const { return frame_; }
  SliceSpec with_frame(ChargeFrame f) const { return SliceSpec(m_, normalized_, f); }

  /// H^2 as used in the charge: 1 when normalized, 2m-2 otherwise.
  QuadExt h_squared() const { return normalized_ ? QuadExt(1) : QuadExt(h2_raw_); }
  /// The unnormalized value (c+mf)^2 = 2m-2.
  const Rational& h_squared_raw() const { return h2_raw_; }
  /// sqrt(2m-2), squarefree radicand.
  const QuadExt& sqrt_h2() const { return sqrt_h2_; }
  /// Radicand of the coefficient field Q(sqrt d) of this slice (1 when 2m-2 is a square).
  std::int64_t radicand() const { return sqrt_h2_.radicand(); }

  /// H . c1 (divided by sqrt(2m-2) when normalized).
  QuadExt h_dot(DivisorClass c1) const;
  /// -c1 . G for G = (c + (2-m)f)/sqrt(2m-2), the paper's sign convention.
  /// Only defined on the normalized slice (G is unit-normalized).
  QuadExt d_g(DivisorClass c1) const;

  /// H^4-type component of v in this slice's charge frame.
  std::int64_t charge_component(const MukaiVector& v) const {
    return frame_ == ChargeFrame::chern_character ? v.s - v.r : v.s;
  }

 private:
  Rational m_;
  bool normalized_;
  ChargeFrame frame_;
  Rational h2_raw_;
  QuadExt sqrt_h2_;
};

struct CentralCharge {
  QuadExt re;
  QuadExt im;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

/// Charge evaluated at a point given by (u, t^2); `im_over_t` carries Im Z / t,
/// which determines sign(Im Z) since t > 0.  This form stays inside Q(sqrt d)
/// even when t itself is irrational (wall t-intercepts, circle apexes).
struct ChargeAtPoint {
  QuadExt re;
  QuadExt im_over_t;
  bool is_zero() const { return re.is_zero() && im_over_t.is_zero(); }
};

/// Z(v) at sigma_{uH, tH}.  Throws std::domain_error for t <= 0.
CentralCharge central_charge(const MukaiVector& v, const Rational& u, const Rational& t,
                             const SliceSpec& slice);

/// Exact charge at (u, t) with t = sqrt(t_sq); u and t_sq live in Q(sqrt d).
ChargeAtPoint charge_at(const MukaiVector& v, const QuadExt& u, const QuadExt& t_sq,
                        const SliceSpec& slice);

/// mu_H = (H.c1)/r; nullopt encodes the infinite slope of rank-0 classes.
std::optional<QuadExt> slope(const MukaiVector& v, const SliceSpec& slice);

/// Im Z(v) >= 0 at parameter u (t factors out): H.c1 - r u H^2 >= 0.
/// `strict` requests the open condition instead.
bool numerically_in_heart(const MukaiVector& v, const Rational& u, const SliceSpec& slice,
                          bool strict = false);

enum class PhaseOrder { less, equal, greater };

/// Compares phases of Z(v), Z(w) at sigma_{uH,tH}, algebraically; phases are
/// taken in (0, 2], with positive-real charges on top of the branch.  Throws
/// std::domain_error if either charge vanishes (a hole of the slice).
PhaseOrder phase_compare(const MukaiVector& v, const MukaiVector& w, const Rational& u,
                         const Rational& t, const SliceSpec& slice);

}  // namespace k3walls
