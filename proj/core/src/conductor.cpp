#include "fbr/conductor.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "fbr/number_theory.hpp"

namespace fbr {

namespace {

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("conductor does not fit in 64 bits");
  return z.get_si();
}

}  // namespace

ConductorReport conductor(const FiberedRing& ring, int point) {
  const auto& lat = ring.lattice();
  const SpeciesPoint& pt = ring.points().at(point);
  const FiniteGroup& G = ring.group();
  const Subgroup& h = lat.at(pt.sub);
  const Subgroup& res = lat.at(ring.residual(pt.sub));
  const Subgroup& der = lat.at(ring.derived(pt.sub));

  ConductorReport rep;
  rep.point = pt;
  rep.c = to_int64(ring.idempotent(point).denominator());
  rep.lower = pt.stabilizer_order / res.order();
  rep.sqf_index = squarefree_part(res.order() / der.order());
  rep.rhs = rep.lower * rep.sqf_index;
  rep.r = rep.c % rep.lower == 0 ? rep.c / rep.lower : 0;

  const int np = std::gcd(ring.n(), G.exponent());
  rep.coprime_case = std::gcd(np, G.exponent() / np) == 1;

  std::int64_t u = 1;
  for (int k : lat.below(pt.sub)) {
    const Subgroup& kk = lat.at(k);
    if (!is_normal(kk, h)) continue;
    const Subgroup kres = join(kk, res);
    if (!kres.contains(pt.h)) continue;
    const Subgroup kder = join(kk, der);
    const std::int64_t i1 = kres.order() / kder.order();
    const std::int64_t i2 = h.order() / kres.order();
    u = lcm64(u, squarefree_part(i1) / squarefree_part(std::gcd(i1, i2)));
  }
  rep.u = u;
  return rep;
}

bool boltje_membership(const GhostElement& y) {
  if (!y.is_integral()) throw std::invalid_argument("boltje_membership: ghost element is not integral");
  const FiberedRing& ring = y.ring();
  const auto& lat = ring.lattice();
  const FiniteGroup& G = ring.group();

  for (int b = 0; b < ring.rank(); ++b) {
    const auto& entry = ring.basis()[b];
    const int hs = entry.pair.sub;
    const FiberHom& phi = ring.homs(hs)[entry.pair.hom];
    const Subgroup stab = ring.pair_stabilizer(b);
    const int modulus = stab.order() / lat.at(hs).order();
    if (modulus == 1) continue;

    CycNum sum = CycNum::zero(ring.coeff_order());
    for (int k : lat.above(hs)) {
      const Subgroup& kk = lat.at(k);
      if (!kk.is_subgroup_of(stab)) continue;
      const std::int64_t mu = lat.moebius(hs, k);
      if (mu == 0) continue;
      const int cls = lat.class_of(k);
      const int rep = lat.class_rep(cls);
      const Elem t = lat.transporter(k);
      for (const auto& psi : ring.homs(k)) {
        bool extends = true;
        for (Elem x : lat.at(hs).elements()) {
          if (psi(x) != phi(x)) {
            extends = false;
            break;
          }
        }
        if (!extends) continue;
        // ψ on K = t rep t^-1 corresponds to x -> ψ(t x t^-1) on rep.
        int a = ring.hom_index_by(rep, [&](Elem x) { return psi(G.conj(t, x)); });
        sum += y.at(cls, a) * Rational(mu);
      }
    }
    for (const Rational& q : sum.coords()) {
      mpz_class num = q.numerator();
      if (mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(modulus)) == 0) return false;
    }
  }
  return true;
}

RestrictionFibers restriction_fibers(const Subgroup& h, int n) {
  const FiniteGroup& G = h.parent();
  std::map<std::vector<int>, int> fibers;
  for (const auto& lam : hom_group(G.whole(), n)) {
    std::vector<int> key;
    key.reserve(h.elements().size());
    for (Elem x : h.elements()) key.push_back(lam(x));
    ++fibers[key];
  }
  RestrictionFibers out;
  out.image_size = static_cast<int>(fibers.size());
  out.fiber_size = fibers.begin()->second;
  for (const auto& [k, s] : fibers) out.uniform = out.uniform && s == out.fiber_size;
  return out;
}

}  // namespace fbr
