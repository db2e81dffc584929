#include "k3walls/tower.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace k3walls {

TowerSpec::TowerSpec(std::int64_t n_, std::int64_t m_, std::int64_t R_) : n(n_), m(m_), R(R_) {
  if (n < 2) throw std::domain_error("tower needs n >= 2");
  if (m < n) throw std::domain_error("tower polarization needs m >= n");
  if (R < 0) throw std::domain_error("tower needs R >= 0");
}

SliceSpec TowerSpec::slice() const {
  return SliceSpec::normalized_slice(Rational(m), ChargeFrame::chern_character);
}

MukaiVector tower_vector(std::int64_t r, std::int64_t n) {
  return {r, {1, n + r * (r - 1)}, r - 1};
}

MukaiVector tower_spherical(std::int64_t r) { return {1, {0, 2 * r}, 1}; }

std::vector<TowerLevel> build_tower(const TowerSpec& spec) {
  const SliceSpec slice = spec.slice();
  std::vector<TowerLevel> out;
  MukaiVector v = twist(ideal_sheaf_vector(spec.n), {1, spec.n});  // v_1 = (1, c+nf, 0)
  for (std::int64_t r = 1; r <= spec.R; ++r) {
    if (r > 1) v = reflect(v, tower_spherical(r - 1));
    const MukaiVector s_prev = tower_spherical(r - 1);
    TowerLevel lvl{r, v, tower_spherical(r), wall_locus(v, s_prev, slice), pairing(v, s_prev)};
    auto fail = [&](const std::string& what) {
      throw std::logic_error("tower level r = " + std::to_string(r) + ": " + what);
    };
    if (lvl.v_r != tower_vector(r, spec.n)) fail("recursion disagrees with the closed form");
    if (lvl.pairing_check != -1) fail("(v_r, s_{r-1}) != -1");
    if (pairing(v, v) != 2 * spec.n - 2) fail("(v_r, v_r) != 2n-2");
    out.push_back(std::move(lvl));
  }
  return out;
}

std::vector<NormalizedTowerLevel> build_normalized_tower(std::int64_t n, std::int64_t R) {
  if (n < 2 || R < 1) throw std::domain_error("normalized tower needs n >= 2, R >= 1");
  std::vector<NormalizedTowerLevel> out;
  MukaiVector f = twist(ideal_sheaf_vector(n), {1, n});
  for (std::int64_t r = 1; r <= R; ++r) {
    NormalizedTowerLevel lvl{r, f, twist(f, {0, -2})};
    if (euler_characteristic(lvl.f_r) != 1)
      throw std::logic_error("chi(F_r) != 1 at r = " + std::to_string(r));
    if (euler_characteristic(lvl.f_tilde_r) != -1)
      throw std::logic_error("chi(F~_r) != -1 at r = " + std::to_string(r));
    out.push_back(lvl);
    f = lvl.f_tilde_r + structure_sheaf_vector();  // extension by O_X
  }
  return out;
}

WallLocus wall_Wr(const TowerSpec& spec, std::int64_t r) {
  if (r < 1 || r > spec.R) throw std::domain_error("wall index out of tower range");
  return wall_locus(tower_vector(r, spec.n), tower_spherical(r - 1), spec.slice());
}

std::optional<Rational> wall_Wr_t_intercept_sq(const TowerSpec& spec, std::int64_t r) {
  const std::int64_t den = spec.n + spec.m + r - 2 - r * r;
  if (r < 2 || den <= 0) return std::nullopt;
  return Rational(4 * (r - 1), den);
}

bool wall_Wr_admissible(const TowerSpec& spec, std::int64_t r) {
  return r * r - r + 2 - spec.n - spec.m < 0;
}

WallLocus arcara_miles_wall(const TowerSpec& spec, std::int64_t r) {
  if (r < 1) throw std::domain_error("arcara_miles_wall needs r >= 1");
  const MukaiVector s = tower_spherical(r - 1);
  return wall_locus(s, twist(s, {-1, 0}), spec.slice());
}

WallQuadratic ideal_sheaf_wall(std::int64_t n, const SheafData& destabilizer,
                               const SliceSpec& slice) {
  if (!slice.normalized()) throw std::domain_error("ideal_sheaf_wall needs the normalized slice");
  const QuadExt dh = slice.h_dot(destabilizer.c1);
  const QuadExt mid(Rational(-2) * (Rational(n * destabilizer.r) + destabilizer.ch2));
  return {dh, mid, Rational(2 * n) * dh};
}

const char* to_string(ScanExclusionReason r) {
  switch (r) {
    case ScanExclusionReason::rank_zero: return "rank zero";
    case ScanExclusionReason::lemma2_bound: return "Lemma 2";
    case ScanExclusionReason::lemma3_slope: return "Lemma 3";
    case ScanExclusionReason::heart: return "heart";
    case ScanExclusionReason::discriminant: return "discriminant";
    case ScanExclusionReason::ray_miss: return "ray miss";
    case ScanExclusionReason::hc_vertical: return "Hilbert-Chow vertical";
  }
  return "?";
}

namespace {

int scan_thread_count(std::int64_t tasks) {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("K3WALLS_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  }
  return static_cast<int>(std::min<std::int64_t>(hw, std::max<std::int64_t>(tasks, 1)));
}

struct ChunkResult {
  std::vector<ScanExclusion> exclusions;
  std::vector<std::pair<MukaiVector, WallLocus>> crossing;  // candidate and its wall
  std::vector<MukaiVector> hc_vertical;
};

struct CanonicalKey {
  std::string repr;
  bool operator<(const CanonicalKey& o) const { return repr < o.repr; }
  bool operator==(const CanonicalKey& o) const { return repr == o.repr; }
};

CanonicalKey key_of(const WallQuadratic& q) {
  const WallQuadratic c = q.canonical();
  auto part = [](const QuadExt& x) {
    return to_fraction_string(x.rational_part()) + "|" + to_fraction_string(x.radical_part());
  };
  return {part(c.a) + ";" + part(c.b) + ";" + part(c.c)};
}

// one rank slice of the spherical-destabilizer enumeration
ChunkResult scan_rank(const MukaiVector& target, const SliceSpec& slice, const Rational& u_ray,
                      std::int64_t r, std::int64_t coeff_bound) {
  ChunkResult res;
  const QuadExt u(u_ray);
  for (std::int64_t alpha = -coeff_bound; alpha <= coeff_bound; ++alpha) {
    for (std::int64_t beta = -coeff_bound; beta <= coeff_bound; ++beta) {
      const DivisorClass c1{alpha, beta};
      const std::int64_t c1sq = self_intersection(c1);
      if (r == 0) {
        if (c1sq == -2) res.exclusions.push_back({{0, c1, 0}, ScanExclusionReason::rank_zero});
        continue;
      }
      // spherical: c1^2 - 2 r s = -2
      if ((c1sq + 2) % (2 * r) != 0) continue;
      const MukaiVector cand{r, c1, (c1sq + 2) / (2 * r)};
      const std::int64_t pe = pairing(target, cand);
      if (pe >= 0) continue;  // not a totally-semistable trigger
      if (r >= 1 && !(pe > -4 * r)) {
        res.exclusions.push_back({cand, ScanExclusionReason::lemma2_bound});
        continue;
      }
      const QuadExt dh = slice.h_dot(c1);
      if (r < 0 && dh.sign() <= 0) {
        res.exclusions.push_back({cand, ScanExclusionReason::lemma3_slope});
        continue;
      }
      if ((dh - u * Rational(r) * slice.h_squared()).sign() < 0) {
        res.exclusions.push_back({cand, ScanExclusionReason::heart});
        continue;
      }
      WallLocus locus = wall_locus(target, cand, slice);
      if (locus.geometry.kind != WallGeometry::Kind::semicircle) {
        res.exclusions.push_back({cand, ScanExclusionReason::discriminant});
        continue;
      }
      if (!t_sq_at_u(locus.geometry, u)) {
        res.exclusions.push_back({cand, ScanExclusionReason::ray_miss});
        continue;
      }
      res.crossing.emplace_back(cand, std::move(locus));
    }
  }
  return res;
}

// Hilbert-Chow candidates of the rank-1 target: isotropic w' with (target, w') = 1
ChunkResult scan_hc_rank(const MukaiVector& target, const SliceSpec& slice, std::int64_t r,
                         std::int64_t coeff_bound) {
  ChunkResult res;
  for (std::int64_t alpha = -coeff_bound; alpha <= coeff_bound; ++alpha) {
    for (std::int64_t beta = -coeff_bound; beta <= coeff_bound; ++beta) {
      const DivisorClass c1{alpha, beta};
      const std::int64_t c1sq = self_intersection(c1);
      MukaiVector wp;
      if (r == 0) {
        if (c1sq != 0) continue;
        // (target, (0,c1,p)) = c1(target).c1 - r(target) p; solve for p = -1 cases below
        const std::int64_t num = intersect(target.c1, c1) - 1;
        if (target.r == 0 || num % target.r != 0) continue;
        wp = {0, c1, num / target.r};
        if (!is_isotropic(wp)) continue;
      } else {
        if (c1sq % (2 * r) != 0) continue;
        wp = {r, c1, c1sq / (2 * r)};
      }
      if (pairing(target, wp) != 1) continue;
      const WallLocus locus = wall_locus(target, wp, slice);
      if (locus.geometry.kind == WallGeometry::Kind::vertical) res.hc_vertical.push_back(wp);
    }
  }
  return res;
}

}  // namespace

ScanReport first_wall_scan_for(const MukaiVector& target, const WallQuadratic& expected,
                               const SliceSpec& slice, const Rational& u_ray,
                               std::int64_t rank_bound, std::int64_t coeff_bound) {
  if (rank_bound < 1 || coeff_bound < 1) throw std::domain_error("scan bounds must be positive");
  ScanReport report;
  report.target = target;
  report.slice_m = slice.m();
  report.u_ray = u_ray;
  report.rank_bound = rank_bound;
  report.coeff_bound = coeff_bound;
  report.expected_wall = expected;

  std::vector<std::int64_t> ranks;
  for (std::int64_t r = -rank_bound; r <= rank_bound; ++r) ranks.push_back(r);

  auto scan_one = [&](std::int64_t r) {
    ChunkResult res = scan_rank(target, slice, u_ray, r, coeff_bound);
    ChunkResult hc = scan_hc_rank(target, slice, r, coeff_bound);
    std::move(hc.hc_vertical.begin(), hc.hc_vertical.end(),
              std::back_inserter(res.hc_vertical));
    return res;
  };

  const int threads = scan_thread_count(static_cast<std::int64_t>(ranks.size()));
  std::vector<ChunkResult> results(ranks.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < ranks.size(); ++i) results[i] = scan_one(ranks[i]);
  } else {
    // contiguous groups per worker; results land in rank order either way
    std::vector<std::future<void>> futs;
    const std::size_t per = (ranks.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::size_t lo = t * per;
      const std::size_t hi = std::min(ranks.size(), lo + per);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, [&, lo, hi]() {
        for (std::size_t i = lo; i < hi; ++i) results[i] = scan_one(ranks[i]);
      }));
    }
    for (auto& f : futs) f.get();
  }

  // deterministic merge in rank order
  std::map<CanonicalKey, std::size_t> by_wall;
  std::vector<MukaiVector> hc_witnesses;
  for (const ChunkResult& res : results) {
    for (const auto& ex : res.exclusions) {
      report.exclusion_counts[ex.reason]++;
      report.exclusions.push_back(ex);
    }
    for (const auto& [cand, locus] : res.crossing) {
      const CanonicalKey key = key_of(locus.quadratic);
      auto it = by_wall.find(key);
      if (it == by_wall.end()) {
        ScanSurvivor s;
        s.wall = locus.quadratic;
        s.geometry = locus.geometry;
        s.t_sq_at_ray = *t_sq_at_u(locus.geometry, QuadExt(u_ray));
        s.witnesses.push_back(cand);
        by_wall.emplace(key, report.survivors.size());
        report.survivors.push_back(std::move(s));
      } else {
        report.survivors[it->second].witnesses.push_back(cand);
      }
    }
    for (const auto& wp : res.hc_vertical) {
      report.exclusion_counts[ScanExclusionReason::hc_vertical]++;
      report.exclusions.push_back({wp, ScanExclusionReason::hc_vertical});
    }
  }

  const ScanSurvivor* best = nullptr;
  for (const ScanSurvivor& s : report.survivors) {
    if (!best || (s.t_sq_at_ray - best->t_sq_at_ray).sign() > 0) best = &s;
  }
  if (best) {
    report.selected = *best;
    report.conclusive = true;
    report.selected_is_expected = walls_coincide(best->wall, expected);
  }
  return report;
}

ScanReport first_wall_scan(std::int64_t n, const SliceSpec& slice, const Rational& u_ray,
                           std::int64_t rank_bound, std::int64_t coeff_bound) {
  if (n < 2) throw std::domain_error("first_wall_scan needs n >= 2");
  const MukaiVector w = ideal_sheaf_vector(n);
  const MukaiVector oc = line_bundle_vector({-1, -n});  // O(-C), C = c + nf
  const WallQuadratic expected = wall_locus(w, oc, slice).quadratic;
  return first_wall_scan_for(w, expected, slice, u_ray, rank_bound, coeff_bound);
}

Rational admissible_u(std::int64_t n, const SliceSpec& slice) {
  const MukaiVector w = ideal_sheaf_vector(n);
  const MukaiVector oc = line_bundle_vector({-1, -n});
  const WallGeometry g = wall_locus(w, oc, slice).geometry;
  if (g.kind != WallGeometry::Kind::semicircle)
    throw std::domain_error("O(-C) wall is not a semicircle on this slice");
  const double center = g.center_u.to_double();
  const double radius = std::sqrt(g.radius_sq.to_double());
  for (std::int64_t den = 1; den <= 64; den *= 2) {
    const auto lo = static_cast<std::int64_t>(std::floor((center - radius) * den));
    const auto hi = static_cast<std::int64_t>(std::ceil((center + radius) * den));
    for (std::int64_t num = lo; num <= hi; ++num) {
      const Rational u(num, den);
      const QuadExt d = QuadExt(u) - g.center_u;
      if ((g.radius_sq - d * d).sign() > 0) return u;
    }
  }
  throw std::domain_error("no admissible rational ray found for n = " + std::to_string(n));
}

HilbertChowScanReport hilbert_chow_scan(std::int64_t n, std::int64_t rank_bound,
                                        std::int64_t coeff_bound) {
  if (n < 2) throw std::domain_error("hilbert_chow_scan needs n >= 2");
  const SliceSpec slice = SliceSpec::normalized_slice(Rational(n), ChargeFrame::mukai_vector);
  const MukaiVector w = ideal_sheaf_vector(n);
  HilbertChowScanReport report;
  report.n = n;
  for (std::int64_t r = -rank_bound; r <= rank_bound; ++r) {
    for (std::int64_t alpha = -coeff_bound; alpha <= coeff_bound; ++alpha) {
      for (std::int64_t beta = -coeff_bound; beta <= coeff_bound; ++beta) {
        const DivisorClass c1{alpha, beta};
        const std::int64_t c1sq = self_intersection(c1);
        MukaiVector wp;
        if (r == 0) {
          if (c1sq != 0) continue;
          // rank-1 w with c1(w) = 0: (w, (0, c1, p)) = -p, so p = -1
          wp = {0, c1, -1};
        } else {
          if (c1sq % (2 * r) != 0) continue;
          wp = {r, c1, c1sq / (2 * r)};
        }
        if (!is_isotropic(wp) || pairing(w, wp) != 1) continue;

        HilbertChowCandidate cand;
        cand.w_prime = wp;
        cand.spherical_part = w - n * wp;
        // Delta in the NoH-C normalization: ((n-1)r + p)^2 - 2(n-1) d_h^2,
        // with d_h^2 = (c1.(c+nf))^2 / (2n-2).
        const std::int64_t raw = intersect(c1, {1, n});
        cand.delta = Rational(((n - 1) * r + wp.s) * ((n - 1) * r + wp.s)) -
                     Rational(2 * (n - 1)) * Rational(raw * raw, 2 * n - 2);
        cand.c1_proportional_h = (c1.beta == n * c1.alpha);
        cand.geometry = wall_locus(w, wp, slice).geometry;

        if (cand.delta > 1) report.delta_at_most_one = false;
        if ((cand.delta == 1) != cand.c1_proportional_h) report.equality_iff_proportional = false;
        if (cand.geometry.kind == WallGeometry::Kind::vertical) {
          if (!cand.geometry.u0.is_zero()) report.only_vertical_at_zero = false;
        } else if (cand.geometry.kind != WallGeometry::Kind::empty) {
          report.only_vertical_at_zero = false;
        }
        report.candidates.push_back(std::move(cand));
      }
    }
  }
  return report;
}

std::vector<Eq9Solution> eq9_solutions(const Eq9Range& range) {
  std::vector<Eq9Solution> out;
  for (std::int64_t n = range.n_lo; n <= range.n_hi; ++n) {
    for (std::int64_t m = std::max(range.m_lo, n); m <= range.m_hi; ++m) {
      for (std::int64_t r = std::max<std::int64_t>(range.r_lo, 1); r <= range.r_hi; ++r) {
        for (std::int64_t k = range.k_lo; k <= range.k_hi; ++k) {
          if (-(m - 1) * k * k + n + k * (m - n) == r * (r + 1)) out.push_back({m, n, r, k});
        }
      }
    }
  }
  return out;
}

PersistenceReport w1_persistence_check(std::int64_t n, std::int64_t m_lo, std::int64_t m_hi,
                                       std::int64_t rank_bound, std::int64_t coeff_bound) {
  if (n < 2 || m_lo < n || m_hi < m_lo) throw std::domain_error("persistence range needs n <= m_lo <= m_hi");
  PersistenceReport report;
  report.n = n;
  const MukaiVector v1 = tower_vector(1, n);
  const MukaiVector s0 = tower_spherical(0);
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    const SliceSpec slice = SliceSpec::normalized_slice(Rational(m), ChargeFrame::chern_character);
    const WallLocus w1 = wall_locus(v1, s0, slice);
    PersistenceEntry entry;
    entry.m = m;

    // ray: any rational strictly inside W_1's u-interval; W_1 passes through the
    // origin, so small negative u works once verified exactly.
    Rational u_ray(-1, 4);
    while (!t_sq_at_u(w1.geometry, QuadExt(u_ray))) u_ray /= 2;

    const ScanReport scan =
        first_wall_scan_for(v1, w1.quadratic, slice, u_ray, rank_bound, coeff_bound);
    entry.first_wall_is_w1 = scan.conclusive && scan.selected_is_expected;

    // eq.(8): coincidence with W_1 <=> (m+n-2) ch2 + c1.(c+mf) = 0 (integer form),
    // and coinciding candidates in the constrained region are trivial.
    for (std::int64_t r = 1; r <= rank_bound; ++r) {
      for (std::int64_t alpha = -coeff_bound; alpha <= coeff_bound; ++alpha) {
        for (std::int64_t beta = -coeff_bound; beta <= coeff_bound; ++beta) {
          const DivisorClass c1{alpha, beta};
          const std::int64_t c1sq = self_intersection(c1);
          if ((c1sq + 2) % (2 * r) != 0) continue;
          const MukaiVector cand{r, c1, (c1sq + 2) / (2 * r)};
          const std::int64_t ch2 = cand.s - cand.r;
          const std::int64_t c1h = intersect(c1, {1, m});
          const bool eq8 = (m + n - 2) * ch2 + c1h == 0;
          const bool coincide = walls_coincide(wall_locus(v1, cand, slice).quadratic, w1.quadratic);
          if (eq8 != coincide) entry.eq8_matches_coincidence = false;
          if (coincide && c1h >= 0 && c1h < m + n - 2) {
            if (!(ch2 == 0 && c1h == 0)) entry.coinciding_forces_trivial = false;
          }
        }
      }
    }
    report.entries.push_back(entry);
  }
  report.all_ok = std::all_of(report.entries.begin(), report.entries.end(), [](const auto& e) {
    return e.first_wall_is_w1 && e.eq8_matches_coincidence && e.coinciding_forces_trivial;
  });
  return report;
}

}  // namespace k3walls
