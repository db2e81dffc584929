#pragma once

#include "k3walls/lattice.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace k3walls {

/// Parameters of the tower: n points (so (v(I_Z), v(I_Z)) = 2n-2),
/// polarization c + mf with m >= n, top rank R.
struct TowerSpec {
  std::int64_t n = 2;
  std::int64_t m = 2;
  std::int64_t R = 1;

  TowerSpec(std::int64_t n_, std::int64_t m_, std::int64_t R_);
  SliceSpec slice() const;  // normalized P_m in the chern_character frame
};

/// v_r = (r, c + (n + r(r-1))f, r-1): the closed form of the recursion
/// v_r = reflect(v_{r-1}, s_{r-1}).
MukaiVector tower_vector(std::int64_t r, std::int64_t n);
/// s_r = v(O(2rf)) = (1, 2rf, 1).
MukaiVector tower_spherical(std::int64_t r);

struct TowerLevel {
  std::int64_t r = 0;
  MukaiVector v_r;
  MukaiVector s_r;
  WallLocus wall;              // W_r, the wall of v_r against s_{r-1}
  std::int64_t pairing_check;  // (v_r, s_{r-1}), always -1
};

/// Runs the recursion up to R, checking the level invariants
/// ((v_r, s_{r-1}) = -1, (v_r, v_r) = 2n-2, closed form) and attaching W_r.
/// Throws std::logic_error naming the offending level on violation.
std::vector<TowerLevel> build_tower(const TowerSpec& spec);

/// The chi = +1 / -1 normalized sheaf bookkeeping: f_1 = v(I_Z(c+nf)),
/// ft_r = f_r - twist by O(-2f), f_{r+1} = ft_r + v(O_X).
struct NormalizedTowerLevel {
  std::int64_t r = 0;
  MukaiVector f_r;        // chi = +1
  MukaiVector f_tilde_r;  // chi = -1
};
std::vector<NormalizedTowerLevel> build_normalized_tower(std::int64_t n, std::int64_t R);

/// W_r derived from the central charges of (v_r, s_{r-1}); proportional to
/// (r^2-r+2-n-m, -2 sqrt(2m-2), 4(r-1)) on the normalized slice.
WallLocus wall_Wr(const TowerSpec& spec, std::int64_t r);

/// Closed-form t-intercept squared, t_r^2 = 4(r-1)/(n+m+r-2-r^2); nullopt when
/// the formula degenerates (r = 1 or the wall is not in the Lemma-4 regime).
std::optional<Rational> wall_Wr_t_intercept_sq(const TowerSpec& spec, std::int64_t r);

/// Whether W_r sits in the regime of the nesting lemma (semicircle centered
/// in {u <= 0}, i.e. r^2 - r + 2 - n - m < 0).
bool wall_Wr_admissible(const TowerSpec& spec, std::int64_t r);

/// The potential wall of S_{r-1} destabilized by S_{r-1}(-c); proportional to
/// ((2-m), 2 sqrt(2m-2)(2r-1), -4(2r-1)(r-1)) and disjoint from W_r.
WallLocus arcara_miles_wall(const TowerSpec& spec, std::int64_t r);

/// Wall of w = (1,0,1-n) against a destabilizer given by its Chern data, in
/// the (d_h, ch2, r) shape d_h(u^2+t^2) - 2(n rho + ch2)u + 2n d_h = 0.
/// Requires a normalized slice.
WallQuadratic ideal_sheaf_wall(std::int64_t n, const SheafData& destabilizer,
                               const SliceSpec& slice);

enum class ScanExclusionReason {
  rank_zero,      // rank-0 classes cannot destabilize (torsion-free sub/quotient)
  lemma2_bound,   // (w, E) <= -4r for a positive-rank subobject
  lemma3_slope,   // negative rank with d_h <= 0
  heart,          // Im Z(E) < 0 at the ray
  discriminant,   // wall empty on the slice
  ray_miss,       // wall exists but does not cross the ray
  hc_vertical,    // Hilbert-Chow candidate; wall is the vertical ray u = 0
};
const char* to_string(ScanExclusionReason r);

struct ScanExclusion {
  MukaiVector cls;
  ScanExclusionReason reason;
};

struct ScanSurvivor {
  WallQuadratic wall;
  WallGeometry geometry;
  QuadExt t_sq_at_ray;
  std::vector<MukaiVector> witnesses;  // destabilizer classes producing this wall
};

struct ScanReport {
  MukaiVector target;
  Rational slice_m;
  Rational u_ray;
  std::int64_t rank_bound = 0;
  std::int64_t coeff_bound = 0;
  std::vector<ScanSurvivor> survivors;  // deduplicated by canonical quadratic
  std::vector<ScanExclusion> exclusions;
  std::map<ScanExclusionReason, std::int64_t> exclusion_counts;
  std::optional<ScanSurvivor> selected;  // max t^2 at the ray
  WallQuadratic expected_wall;
  bool selected_is_expected = false;
  bool conclusive = false;  // a wall was selected; certified up to the bounds
};

/// The Prop-3 scan: enumerates spherical destabilizer classes of w = (1,0,1-n)
/// within bounds on the given slice, applies the exclusion filters, and
/// selects the crossing wall with the greatest t along u = u_ray.  For n = 2
/// pass the perturbed slice.  Parallelism is capped by K3WALLS_THREADS.
ScanReport first_wall_scan(std::int64_t n, const SliceSpec& slice, const Rational& u_ray,
                           std::int64_t rank_bound, std::int64_t coeff_bound);

/// Same engine for an arbitrary positive-rank primitive target class (the
/// persistence check runs it on v_1 over a range of slices).
ScanReport first_wall_scan_for(const MukaiVector& target, const WallQuadratic& expected,
                               const SliceSpec& slice, const Rational& u_ray,
                               std::int64_t rank_bound, std::int64_t coeff_bound);

/// A rational u whose vertical ray provably crosses the O(-C) wall of w on
/// this slice (the interval right endpoint is -sqrt(2(n-1))).  Throws when no
/// admissible rational with denominator <= 64 exists (does not happen for
/// n <= 64).
Rational admissible_u(std::int64_t n, const SliceSpec& slice);

struct HilbertChowCandidate {
  MukaiVector w_prime;        // isotropic, (w, w') = 1
  MukaiVector spherical_part; // s = w - n w'
  Rational delta;             // ((n-1)r + p)^2 - 2(n-1) d_h^2, NoH-C normalization
  bool c1_proportional_h;     // c1 = k (c + nf)
  WallGeometry geometry;      // mukai-frame wall of (w, w')
};

struct HilbertChowScanReport {
  std::int64_t n = 0;
  std::vector<HilbertChowCandidate> candidates;
  bool only_vertical_at_zero = true;  // every nonempty wall is {u = 0}
  bool delta_at_most_one = true;
  bool equality_iff_proportional = true;
};

/// Lemma NoH-C at the lattice level: every Hilbert-Chow decomposition class
/// of (1,0,1-n) on the slice H = c+nf gives Delta <= 1, with equality exactly
/// when c1 is proportional to H, and the only walls are the vertical ray u=0.
HilbertChowScanReport hilbert_chow_scan(std::int64_t n, std::int64_t rank_bound,
                                        std::int64_t coeff_bound);

struct Eq9Range {
  std::int64_t n_lo = 2, n_hi = 30;
  std::int64_t m_lo = 0, m_hi = 40;  // m below n is skipped (m >= n side condition)
  std::int64_t r_lo = 1, r_hi = 5;
  std::int64_t k_lo = -10, k_hi = 10;
};

struct Eq9Solution {
  std::int64_t m, n, r, k;
  friend bool operator==(const Eq9Solution&, const Eq9Solution&) = default;
};

/// Brute-force solutions of -(m-1)k^2 + n + k(m-n) = r(r+1) under m >= n,
/// r >= 1.  Every solution has k = 0 and n = r(r+1).
std::vector<Eq9Solution> eq9_solutions(const Eq9Range& range);

struct PersistenceEntry {
  std::int64_t m = 0;
  bool first_wall_is_w1 = false;
  bool eq8_matches_coincidence = true;   // coincidence predicate == eq.(8), all candidates
  bool coinciding_forces_trivial = true; // constrained coinciding classes have ch2 = d_h = 0
};

struct PersistenceReport {
  std::int64_t n = 0;
  std::vector<PersistenceEntry> entries;
  bool all_ok = false;
};

/// For each m in [m_lo, m_hi]: re-runs the first-wall scan on v_1 over P_m and
/// verifies the eq.(8)/eq.(9) obstruction that pins W_1.
PersistenceReport w1_persistence_check(std::int64_t n, std::int64_t m_lo, std::int64_t m_hi,
                                       std::int64_t rank_bound, std::int64_t coeff_bound);

}  // namespace k3walls
