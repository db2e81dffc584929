#include "k3walls/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace k3walls {

namespace {

using Row = std::array<Int, 4>;

// Integer kernel basis of a k x 4 matrix via column reduction with a
// unimodular transform: kernels of integer matrices are saturated, so
// applying this twice saturates a span.
std::vector<Row> integer_kernel(const std::vector<Row>& a) {
  const std::size_t k = a.size();
  const std::size_t n = 4;
  std::vector<Row> h = a;
  std::array<Row, 4> u{};
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : h) std::swap(row[i], row[j]);
    for (auto& row : u) std::swap(row[i], row[j]);
  };
  auto submul_col = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (auto& row : h) row[dst] -= q * row[src];
    for (auto& row : u) row[dst] -= q * row[src];
  };

  std::size_t col = 0;
  for (std::size_t row = 0; row < k && col < n; ++row) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = col; j < n; ++j) {
        if (h[row][j] != 0 && (best == n || abs(h[row][j]) < abs(h[row][best]))) best = j;
      }
      if (best == n) break;
      if (best != col) swap_cols(col, best);
      bool clean = true;
      for (std::size_t j = col + 1; j < n; ++j) {
        if (h[row][j] == 0) continue;
        const Int q = h[row][j] / h[row][col];
        if (q != 0) submul_col(j, col, q);
        if (h[row][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (h[row][col] != 0) ++col;
  }
  std::vector<Row> kernel;
  for (std::size_t j = col; j < n; ++j) {
    kernel.push_back({u[0][j], u[1][j], u[2][j], u[3][j]});
  }
  return kernel;
}

Row to_row(const MukaiVector& v) {
  return {Int(v.r), Int(v.c1.alpha), Int(v.c1.beta), Int(v.s)};
}

MukaiVector from_row(const Row& r) {
  auto narrow = [](const Int& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("lattice coordinate overflow");
    return static_cast<std::int64_t>(x);
  };
  return {narrow(r[0]), {narrow(r[1]), narrow(r[2])}, narrow(r[3])};
}

}  // namespace

std::optional<std::pair<Rational, Rational>> HyperbolicLattice::coords_of(
    const MukaiVector& v) const {
  // solve x b1 + y b2 = v over Q using two independent coordinate rows
  const Row b1 = to_row(basis[0]);
  const Row b2 = to_row(basis[1]);
  const Row rv = to_row(v);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const Int det = b1[i] * b2[j] - b1[j] * b2[i];
      if (det == 0) continue;
      const Rational x = Rational(rv[i] * b2[j] - rv[j] * b2[i]) / Rational(det);
      const Rational y = Rational(b1[i] * rv[j] - b1[j] * rv[i]) / Rational(det);
      // verify on all four coordinates
      for (int t = 0; t < 4; ++t) {
        if (x * b1[t] + y * b2[t] != rv[t]) return std::nullopt;
      }
      return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::int64_t, std::int64_t>> HyperbolicLattice::integral_coords_of(
    const MukaiVector& v) const {
  auto c = coords_of(v);
  if (!c) return std::nullopt;
  if (denominator(c->first) != 1 || denominator(c->second) != 1) return std::nullopt;
  return std::make_pair(static_cast<std::int64_t>(numerator(c->first)),
                        static_cast<std::int64_t>(numerator(c->second)));
}

HyperbolicLattice hyperbolicLattice_from_basis(const MukaiVector& b1, const MukaiVector& b2) {
  HyperbolicLattice h;
  h.basis = {b1, b2};
  h.gram = {{{pairing(b1, b1), pairing(b1, b2)}, {pairing(b1, b2), pairing(b2, b2)}}};
  return h;
}

HyperbolicLattice hyperbolic_lattice(const MukaiVector& v, const MukaiVector& w) {
  const auto k1 = integer_kernel({to_row(v), to_row(w)});
  if (k1.size() != 2) {
    throw std::domain_error("hyperbolic_lattice: classes are linearly dependent");
  }
  const auto sat = integer_kernel(k1);
  if (sat.size() != 2) throw std::domain_error("hyperbolic_lattice: saturation failed");

  HyperbolicLattice h = hyperbolicLattice_from_basis(from_row(sat[0]), from_row(sat[1]));
  if (h.gram_det() >= 0) {
    throw std::domain_error("hyperbolic_lattice: span of " + v.to_string() + " and " +
                            w.to_string() + " is not hyperbolic (Gram det " +
                            std::to_string(h.gram_det()) + ")");
  }
  // prefer {v, w} as the basis when they already generate the saturation
  const auto cv = h.integral_coords_of(v);
  const auto cw = h.integral_coords_of(w);
  if (!cv || !cw) throw std::logic_error("saturation does not contain its generators");
  const std::int64_t idx = cv->first * cw->second - cv->second * cw->first;
  if (idx == 1 || idx == -1) return hyperbolicLattice_from_basis(v, w);
  return h;
}

std::vector<std::pair<std::int64_t, std::int64_t>> enumerate_spherical_coords(
    const HyperbolicLattice& h, std::int64_t bound) {
  if (bound <= 0) throw std::domain_error("enumeration bound must be positive");
  const std::int64_t g11 = h.gram[0][0], g12 = h.gram[0][1], g22 = h.gram[1][1];
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  // per y, solve g11 x^2 + 2 g12 x y + (g22 y^2 + 2) = 0 exactly
  for (std::int64_t y = -bound; y <= bound; ++y) {
    if (g11 == 0) {
      const std::int64_t lin = 2 * g12 * y;  // lin * x + g22 y^2 + 2 = 0
      if (lin == 0) continue;
      const std::int64_t rhs = -(g22 * y * y + 2);
      if (rhs % lin != 0) continue;
      const std::int64_t x = rhs / lin;
      if (x >= -bound && x <= bound) out.emplace_back(x, y);
      continue;
    }
    const Int disc = Int(g12) * g12 * y * y - Int(g11) * (Int(g22) * y * y + 2);
    if (disc < 0) continue;
    const auto root = exact_sqrt(disc);
    if (!root) continue;
    for (int sgn : {-1, 1}) {
      const Int num = -Int(g12) * y + sgn * *root;
      if (num % g11 != 0) continue;
      const Int x = num / g11;
      if (x < -bound || x > bound) continue;
      out.emplace_back(static_cast<std::int64_t>(x), y);
      if (*root == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MukaiVector> enumerate_spherical(const HyperbolicLattice& h, std::int64_t bound) {
  std::vector<MukaiVector> out;
  for (auto [x, y] : enumerate_spherical_coords(h, bound)) out.push_back(h.at(x, y));
  return out;
}

bool has_isotropic_classes(const HyperbolicLattice& h) {
  return exact_sqrt(Int(-h.gram_det())).has_value();
}

std::vector<MukaiVector> isotropic_generators(const HyperbolicLattice& h) {
  const auto root = exact_sqrt(Int(-h.gram_det()));
  if (!root) return {};
  const std::int64_t s = static_cast<std::int64_t>(*root);
  const std::int64_t g11 = h.gram[0][0], g12 = h.gram[0][1], g22 = h.gram[1][1];
  std::vector<std::pair<std::int64_t, std::int64_t>> dirs;
  if (g11 != 0) {
    // g11 x^2 + 2 g12 xy + g22 y^2 = 0 -> x/y = (-g12 +- s)/g11
    dirs.emplace_back(-g12 + s, g11);
    dirs.emplace_back(-g12 - s, g11);
  } else {
    dirs.emplace_back(1, 0);
    if (g12 != 0) dirs.emplace_back(-g22, 2 * g12);
    else dirs.emplace_back(0, 1);  // degenerate, excluded by det < 0 anyway
  }
  std::vector<MukaiVector> out;
  for (auto [x, y] : dirs) {
    const std::int64_t g = std::gcd(x, y);
    if (g != 0) { x /= g; y /= g; }
    MukaiVector w = h.at(x, y);
    if (std::find(out.begin(), out.end(), w) == out.end() &&
        std::find(out.begin(), out.end(), -w) == out.end()) {
      out.push_back(w);
    }
  }
  return out;
}

EffectivenessContext EffectivenessContext::at_wall_apex(const WallGeometry& g,
                                                        const MukaiVector& reference) {
  if (g.kind != WallGeometry::Kind::semicircle)
    throw std::domain_error("wall apex needs a semicircle");
  return {g.center_u, g.radius_sq, reference};
}

EffectivenessContext EffectivenessContext::at_t_intercept(const WallGeometry& g,
                                                          const MukaiVector& reference) {
  const auto t2 = t_intercept_sq(g);
  if (!t2) throw std::domain_error("wall has no t-intercept");
  return {QuadExt(0), *t2, reference};
}

namespace {

// sign of the real factor lambda with Z(u) = lambda Z(reference) at the point;
// throws if the charges are not aligned there or one vanishes.
int proportionality_sign(const MukaiVector& cls, const EffectivenessContext& ctx,
                         const SliceSpec& slice) {
  const ChargeAtPoint zr = charge_at(ctx.reference, ctx.u, ctx.t_sq, slice);
  const ChargeAtPoint zc = charge_at(cls, ctx.u, ctx.t_sq, slice);
  if (zr.is_zero()) throw std::domain_error("reference charge vanishes at the wall point");
  if (zc.is_zero()) throw std::domain_error("charge of " + cls.to_string() + " vanishes at the wall point");
  const QuadExt cross = zc.re * zr.im_over_t - zr.re * zc.im_over_t;
  if (!cross.is_zero()) {
    throw std::domain_error("charges of " + cls.to_string() + " and " + ctx.reference.to_string() +
                            " are not aligned at the supplied point (not on their wall)");
  }
  if (!zr.im_over_t.is_zero()) return (zc.im_over_t / zr.im_over_t).sign();
  return (zc.re / zr.re).sign();
}

}  // namespace

bool is_effective(const MukaiVector& u, const EffectivenessContext& ctx, const SliceSpec& slice) {
  if (pairing(u, u) < -2) return false;
  return proportionality_sign(u, ctx, slice) > 0;
}

WallClassification classify_wall(const MukaiVector& v, const HyperbolicLattice& h,
                                 const EffectivenessContext& ctx, const SliceSpec& slice,
                                 std::int64_t bound) {
  if (!h.integral_coords_of(v)) throw std::domain_error("classify_wall: v not in the wall lattice");
  if (!is_primitive(v)) throw std::domain_error("classify_wall: v must be primitive");
  const std::int64_t vv = pairing(v, v);
  if (vv <= 0) throw std::domain_error("classify_wall: needs (v,v) > 0");

  WallClassification out;
  out.search_bound = bound;
  out.isotropic_wall = has_isotropic_classes(h);

  // isotropic side: exact, only the primitive generators can give (v,w) = 1
  for (const MukaiVector& gen : isotropic_generators(h)) {
    for (int sgn : {1, -1}) {
      const MukaiVector w = sgn * gen;
      if (pairing(v, w) == 1) {
        out.totally_semistable = true;
        out.witnesses.push_back(w);
        if (!out.decomposition) {
          const std::int64_t n = (vv + 2) / 2;
          const MukaiVector s = v - n * w;
          // always spherical here: (v - n w, v - n w) = (v,v) - 2n (v,w) = -2
          out.decomposition = HilbertChowDecomposition{s, n, w};
          out.kind = WallClassification::Kind::hilbert_chow;
        }
      }
    }
  }

  // spherical side: bounded search for effective s with (v,s) < 0
  bool found_spherical = false;
  for (const MukaiVector& s : enumerate_spherical(h, bound)) {
    if (pairing(v, s) >= 0) continue;
    if (!is_effective(s, ctx, slice)) continue;
    found_spherical = true;
    out.witnesses.push_back(s);
  }
  if (found_spherical) {
    out.totally_semistable = true;
    if (out.kind == WallClassification::Kind::none) out.kind = WallClassification::Kind::spherical;
  }
  out.spherical_search_exhaustive = false;  // absence is certified only up to `bound`
  return out;
}

MinimalClassResult minimal_class(const MukaiVector& v, const HyperbolicLattice& h,
                                 const EffectivenessContext& ctx, const SliceSpec& slice,
                                 std::int64_t bound, int cap,
                                 std::optional<std::uint64_t> shuffle_seed) {
  if (pairing(v, v) <= 0) throw std::domain_error("minimal_class: needs (v,v) > 0");
  std::vector<MukaiVector> sphericals;
  for (const MukaiVector& s : enumerate_spherical(h, bound)) {
    if (is_effective(s, ctx, slice)) sphericals.push_back(s);
  }
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(sphericals.begin(), sphericals.end(), rng);
  }
  MukaiVector cur = v;
  MinimalClassResult out;
  for (int step = 0; step <= cap; ++step) {
    const MukaiVector* hit = nullptr;
    for (const MukaiVector& s : sphericals) {
      if (pairing(cur, s) < 0) { hit = &s; break; }
    }
    if (!hit) {
      out.minimal = cur;
      return out;
    }
    cur = reflect(cur, *hit);
    out.reflections.push_back(*hit);
  }
  std::ostringstream trace;
  trace << "minimal_class: no fixed point after " << cap << " reflections; trace:";
  for (const auto& s : out.reflections) trace << " " << s.to_string();
  throw std::runtime_error(trace.str());
}

namespace {

// Effectiveness proxy of the Figure-2 argument, in {s_{r-1}, v_r} coordinates:
// right-branch classes at or above s_{r-1}, and left-branch classes in the
// upper half-plane beyond the (t, s_{r-1}) >= 3 line.
bool figure2_effective(std::int64_t x, std::int64_t y) {
  if (x > 0) return y >= 0;
  return y >= 1 && 2 * x + y <= -3;
}

}  // namespace

std::vector<SphericalOrbitPoint> spherical_orbit_points(std::int64_t n, std::int64_t bound) {
  std::vector<SphericalOrbitPoint> out;
  for (std::int64_t x = -bound; x <= bound; ++x) {
    for (std::int64_t y = -bound; y <= bound; ++y) {
      // hyperbola (t,t) = -2: -2x^2 - 2xy + (2n-2)y^2 = -2
      if (-2 * x * x - 2 * x * y + (2 * n - 2) * y * y != -2) continue;
      // (t, v_{r-1}) = x + (2n-1) y  in these coordinates
      out.push_back({x, y, figure2_effective(x, y), x + (2 * n - 1) * y});
    }
  }
  return out;
}

bool spherical_pairing_positivity_check(const HyperbolicLattice& h, std::int64_t r, std::int64_t n,
                                        std::int64_t bound) {
  if (r < 1 || n < 2) throw std::domain_error("tower wall parameters need r >= 1, n >= 2");
  // h must be the wall lattice of {s_{r-1}, v_r}
  const std::array<std::array<std::int64_t, 2>, 2> expected{{{-2, -1}, {-1, 2 * n - 2}}};
  const auto& g = h.gram;
  const bool match_direct = g[0][0] == expected[0][0] && g[0][1] == expected[0][1] &&
                            g[1][1] == expected[1][1];
  const bool match_swapped = g[0][0] == expected[1][1] && g[0][1] == expected[0][1] &&
                             g[1][1] == expected[0][0];
  if (!match_direct && !match_swapped) {
    throw std::domain_error("lattice is not a tower wall lattice for n = " + std::to_string(n));
  }
  for (const auto& p : spherical_orbit_points(n, bound)) {
    if (p.effective && p.pairing_with_minimal < 0) return false;
  }
  return true;
}

}  // namespace k3walls
