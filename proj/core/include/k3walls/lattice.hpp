#pragma once

#include "k3walls/wall.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace k3walls {

/// Rank-2 primitive hyperbolic sublattice H_W of the Mukai lattice attached
/// to a wall: the saturation of the span of two classes, with its Gram matrix
/// (det < 0).
struct HyperbolicLattice {
  std::array<MukaiVector, 2> basis;
  std::array<std::array<std::int64_t, 2>, 2> gram;

  std::int64_t gram_det() const { return gram[0][0] * gram[1][1] - gram[0][1] * gram[0][1]; }
  MukaiVector at(std::int64_t x, std::int64_t y) const { return x * basis[0] + y * basis[1]; }
  std::int64_t form(std::int64_t x, std::int64_t y) const {
    return gram[0][0] * x * x + 2 * gram[0][1] * x * y + gram[1][1] * y * y;
  }
  /// Rational coordinates of v in this basis, when v lies in the rational span.
  std::optional<std::pair<Rational, Rational>> coords_of(const MukaiVector& v) const;
  /// Integral coordinates (lattice membership).
  std::optional<std::pair<std::int64_t, std::int64_t>> integral_coords_of(const MukaiVector& v) const;
};

/// Saturation of the span of {v, w}; keeps {v, w} as the basis when they
/// already generate the saturated lattice.  Throws std::domain_error when the
/// span is degenerate or not hyperbolic (Gram det >= 0) -- the latter is the
/// check behind "orthogonal positive classes do not span a hyperbolic lattice".
HyperbolicLattice hyperbolic_lattice(const MukaiVector& v, const MukaiVector& w);

/// All lattice classes x b1 + y b2 with self-pairing -2 and |x|, |y| <= bound,
/// duplicate-free, ordered by (x, y).  Solves the conic per column instead of
/// scanning the grid; tests compare against the brute-force double loop.
std::vector<MukaiVector> enumerate_spherical(const HyperbolicLattice& h, std::int64_t bound);
std::vector<std::pair<std::int64_t, std::int64_t>> enumerate_spherical_coords(
    const HyperbolicLattice& h, std::int64_t bound);

/// Whether the lattice contains nonzero isotropic classes (decidable: the
/// form represents zero iff -det(gram) is a perfect square).
bool has_isotropic_classes(const HyperbolicLattice& h);
/// Primitive generators of the (zero, one or two) isotropic rays, up to sign.
std::vector<MukaiVector> isotropic_generators(const HyperbolicLattice& h);

/// A concrete point of the wall orienting the effective cone C_W; the charge
/// of `reference` must not vanish there.  t_sq = t^2 keeps the arithmetic in
/// Q(sqrt d) when the natural anchor (t-intercept, circle apex) has
/// irrational t.
struct EffectivenessContext {
  QuadExt u;
  QuadExt t_sq;
  MukaiVector reference;

  static EffectivenessContext at_wall_apex(const WallGeometry& g, const MukaiVector& reference);
  static EffectivenessContext at_t_intercept(const WallGeometry& g, const MukaiVector& reference);
};

/// (u,u) >= -2 and Z(u) a positive real multiple of Z(reference) at the wall
/// point.  Throws std::domain_error when Z(u) or Z(reference) vanishes there.
bool is_effective(const MukaiVector& u, const EffectivenessContext& ctx, const SliceSpec& slice);

struct HilbertChowDecomposition {
  MukaiVector spherical_part;  // s with (s,s) = -2
  std::int64_t multiplicity;   // n with (v,v) = 2n-2
  MukaiVector isotropic_part;  // primitive w' with v = s + n w'
};

struct WallClassification {
  bool totally_semistable = false;
  enum class Kind { none, spherical, hilbert_chow } kind = Kind::none;
  bool isotropic_wall = false;
  std::vector<MukaiVector> witnesses;  // isotropic w with (v,w)=1 and/or sphericals with (v,s)<0
  std::optional<HilbertChowDecomposition> decomposition;
  /// Negative spherical verdicts are certified only up to this bound; the
  /// isotropic side is exact.
  std::int64_t search_bound = 0;
  bool spherical_search_exhaustive = false;
};

/// The Bayer-Macri totally-semistable test on the wall lattice: an isotropic
/// class w with (v,w) = 1, or an effective spherical s with (v,s) < 0.
/// Requires v in h, primitive, (v,v) > 0.
WallClassification classify_wall(const MukaiVector& v, const HyperbolicLattice& h,
                                 const EffectivenessContext& ctx, const SliceSpec& slice,
                                 std::int64_t bound);

struct MinimalClassResult {
  MukaiVector minimal;
  std::vector<MukaiVector> reflections;  // applied left to right to v
};

/// Reflects v by effective spherical classes pairing negatively until none
/// remain within the bound; the result is the unique G-orbit representative
/// pairing >= 0 with every effective spherical found.  `shuffle_seed` permutes
/// the processing order (the outcome is order-independent; tests rely on it).
/// Throws std::runtime_error with a trace if `cap` reflections do not suffice.
MinimalClassResult minimal_class(const MukaiVector& v, const HyperbolicLattice& h,
                                 const EffectivenessContext& ctx, const SliceSpec& slice,
                                 std::int64_t bound, int cap = 64,
                                 std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// The computational content of the paper's Figure-2 argument for the tower
/// wall W_r: every spherical class of H_{W_r} that is effective per the
/// branch/half-plane constraints pairs >= 0 with v_{r-1}.  h must be the
/// lattice of {s_{r-1}, v_r}; r enters only through that check.
bool spherical_pairing_positivity_check(const HyperbolicLattice& h, std::int64_t r, std::int64_t n,
                                        std::int64_t bound);

/// Data behind the check, for rendering: spherical points with effectiveness
/// and pairing sign in the (x, y) coordinates of {s_{r-1}, v_r}.
struct SphericalOrbitPoint {
  std::int64_t x;
  std::int64_t y;
  bool effective;
  std::int64_t pairing_with_minimal;
};
std::vector<SphericalOrbitPoint> spherical_orbit_points(std::int64_t n, std::int64_t bound);

}  // namespace k3walls
