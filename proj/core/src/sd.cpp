#include "k3walls/sd.hpp"

#include <stdexcept>
#include <string>

namespace k3walls {

const char* to_string(SDVerdict v) {
  switch (v) {
    case SDVerdict::isomorphism: return "isomorphism";
    case SDVerdict::zero: return "zero";
    case SDVerdict::unknown: return "unknown";
  }
  return "?";
}

SDPair make_sd_pair(std::int64_t r, std::int64_t s, std::int64_t p, std::int64_t q,
                    std::int64_t a, std::int64_t b) {
  const std::int64_t lhs = a + b - 2;
  const std::int64_t rhs = -(r + s) * (p + q);
  if (lhs != rhs) {
    throw std::domain_error("orthogonality fails: a+b-2 = " + std::to_string(lhs) +
                            " but -(r+s)(p+q) = " + std::to_string(rhs));
  }
  SDPair out{r, s, p, q, a, b,
             {r, {1, a + r * p}, p},
             {s, {1, b + s * q}, q}};
  if (pairing(out.v, dual(out.w)) != 0) throw std::logic_error("(v, w^dual) != 0 after construction");
  if (pairing(out.v, out.v) != 2 * a - 2 || pairing(out.w, out.w) != 2 * b - 2) {
    throw std::logic_error("self-pairings disagree with the (a, b) parameters");
  }
  return out;
}

SDStatus check_conditions(const SDPair& pair) {
  SDStatus st;
  const std::int64_t r = pair.r, s = pair.s;
  const std::int64_t vv = pairing(pair.v, pair.v);
  const std::int64_t ww = pairing(pair.w, pair.w);
  const std::int64_t rs2 = 2 * (r + s) * (r + s);

  const bool fiber_ok = intersect(pair.v.c1, fiber_class()) == 1 &&
                        intersect(pair.w.c1, fiber_class()) == 1;
  const bool iii_quadratic = vv + ww >= rs2;
  const bool iii_linear = pair.p + pair.q + r + s <= 0;
  if (r + s > 0 && iii_quadratic != iii_linear) {
    throw std::logic_error("condition (iii) disagrees with its linear form: arithmetic bug");
  }

  st.mo_theorem = r >= 2 && s >= 2 && fiber_ok && iii_quadratic;
  st.ex1 = r >= 0 && s >= 0 && r + s >= 4 && fiber_ok && vv + ww == rs2;
  st.ex3 = r >= 3 && s >= 3 && fiber_ok && vv + ww == 2 * (r + s) * (r + s - 2);
  if (st.mo_theorem) {
    st.verdict = SDVerdict::isomorphism;
    st.provenance = "Marian-Oprea rank/fiber/pairing conditions";
  } else if (st.ex1) {
    st.verdict = SDVerdict::isomorphism;
    st.provenance = "boundary family via wall-hitting transport";
  } else if (st.ex3) {
    st.verdict = SDVerdict::zero;
    st.provenance = "wall-crossed family: zero on the Gieseker side";
  } else {
    st.verdict = SDVerdict::unknown;
    st.provenance = "no criterion applies";
  }
  return st;
}

SDPair propex_step_a(const SDPair& pair) {
  if (pair.p + pair.q + pair.r + pair.s != 0)
    throw std::domain_error("step (a) needs p+q+r+s = 0");
  if (pair.s < 1) throw std::domain_error("step (a) needs s >= 1");
  return make_sd_pair(pair.r + 1, pair.s - 1, pair.p, pair.q, pair.a, pair.b);
}

namespace {

/// chi = 1 normalized vector (sigma, c + (a - sigma(sigma-1))f, 1 - sigma): the
/// fiber-twist representative E~ with v(E~) = twist(v, (-p-r+1) f).
MukaiVector normalized_member(std::int64_t rank, std::int64_t self_param) {
  return {rank, {1, self_param - rank * (rank - 1)}, 1 - rank};
}

}  // namespace

PropexBResult propex_step_b(const SDPair& pair) {
  if (pair.p + pair.q + pair.r + pair.s != -2)
    throw std::domain_error("step (b) needs p+q+r+s = -2");
  PropexBResult out;
  out.transported = make_sd_pair(pair.r + 1, pair.s + 1, pair.p + 1, pair.q + 1, pair.a, pair.b);

  // normalized chi=1 member on the w side at rank s+1; it must be the fiber
  // twist of the transported w
  const MukaiVector wt = normalized_member(pair.s + 1, pair.b);
  const MukaiVector w_new = out.transported.w;
  if (twist(w_new, {0, 1 - out.transported.s - out.transported.q}) != wt) {
    throw std::logic_error("normalized transport disagrees with the closed form");
  }
  out.witness_pairing = pairing(dual(wt), line_bundle_vector({0, 2}));
  out.verdict = out.witness_pairing != 0 ? SDVerdict::zero : SDVerdict::isomorphism;
  return out;
}

SDVerdict sd_wall_transition(const MukaiVector& v, const MukaiVector& w,
                             const HyperbolicLattice& h, const EffectivenessContext& ctx,
                             const SliceSpec& slice, std::int64_t bound) {
  if (pairing(v, w) != 0) throw std::domain_error("Prop 4 needs (v, w) = 0");
  if (pairing(v, v) <= 0 || pairing(w, w) <= 0)
    throw std::domain_error("Prop 4 needs (v,v) > 0 and (w,w) > 0");
  if (has_isotropic_classes(h))
    throw std::domain_error("Prop 4 hypotheses unmet: the wall lattice is isotropic");
  const WallClassification cls = classify_wall(w, h, ctx, slice, bound);
  if (!cls.totally_semistable)
    throw std::domain_error("Prop 4 hypotheses unmet: wall not totally semistable within bound " +
                            std::to_string(bound));
  const MinimalClassResult w0 = minimal_class(w, h, ctx, slice, bound);
  return pairing(v, w0.minimal) != 0 ? SDVerdict::zero : SDVerdict::isomorphism;
}

std::vector<SDSweepRow> sd_sweep(std::int64_t rs_max, std::int64_t pq_min, std::int64_t pq_max) {
  std::vector<SDSweepRow> rows;
  for (std::int64_t r = 0; r <= rs_max; ++r) {
    for (std::int64_t s = 0; s <= rs_max; ++s) {
      if (r + s == 0) continue;
      for (std::int64_t p = pq_min; p <= pq_max; ++p) {
        for (std::int64_t q = pq_min; q <= pq_max; ++q) {
          const std::int64_t ab = 2 - (r + s) * (p + q);
          const std::int64_t a = ab - ab / 2;  // ceil for positive, matches doc
          const std::int64_t b = ab - a;
          const SDPair pair = make_sd_pair(r, s, p, q, a, b);
          rows.push_back({r, s, p, q, a, b, check_conditions(pair)});
        }
      }
    }
  }
  return rows;
}

}  // namespace k3walls
