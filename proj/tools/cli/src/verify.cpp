#include "fbr_cli/verify.hpp"

#include <numeric>
#include <sstream>

#include "fbr/conductor.hpp"
#include "fbr/number_theory.hpp"

namespace fbr::cli {

namespace {

constexpr std::size_t kMaxStored = 20;

std::string elems_label(const Subgroup& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.elements().size(); ++i) out += (i ? "," : "") + std::to_string(s.elements()[i]);
  return out + "}";
}

std::string pair_text(const FiberedRing& ring, int j) {
  const auto& e = ring.basis()[j];
  std::string out = "[" + elems_label(ring.lattice().at(e.pair.sub)) + ",(";
  bool first = true;
  for (Elem x : ring.lattice().at(e.pair.sub).elements()) {
    out += (first ? "" : ",") + std::to_string(ring.homs(e.pair.sub)[e.pair.hom](x));
    first = false;
  }
  return out + ")]";
}

std::string point_text(const FiberedRing& ring, int p) {
  const auto& pt = ring.points()[p];
  return "(" + elems_label(ring.lattice().at(pt.sub)) + "," + std::to_string(pt.h) + ")";
}

std::int64_t isqf(std::int64_t v) { return squarefree_part(v); }

}  // namespace

void SuiteResult::check(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failure_count;
  if (failures.size() < kMaxStored) failures.push_back(what);
}

void SuiteResult::note(const std::string& what) {
  if (notes.size() < kMaxStored) notes.push_back(what);
}

nlohmann::json SuiteResult::to_json() const {
  return {{"suite", suite},     {"group", group},       {"n", n},         {"checks", checks},
          {"passed", passed()}, {"failure_count", failure_count}, {"failures", failures}, {"notes", notes}};
}

std::string element_label(const FBElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [j, c] : x.coeffs()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")" + pair_text(x.ring(), j);
  }
  return out;
}

SuiteResult verify_thm51(const RingPtr& ring) {
  SuiteResult r{"thm51", ring->group().name(), ring->n()};
  for (int p = 0; p < static_cast<int>(ring->points().size()); ++p) {
    const ConductorReport c = conductor(*ring, p);
    std::ostringstream who;
    who << ring->group().name() << " n=" << ring->n() << " point " << point_text(*ring, p) << ": c=" << c.c
        << " lower=" << c.lower << " rhs=" << c.rhs << " r=" << c.r << " u=" << c.u;
    if (c.coprime_case) r.check(c.c == c.rhs, who.str() + " (coprime case, expected c == rhs)");
    r.check(c.c % c.lower == 0, who.str() + " (lower does not divide c)");
    r.check(c.rhs % c.c == 0, who.str() + " (c does not divide rhs)");
    r.check(c.r != 0 && c.u % c.r == 0, who.str() + " (r does not divide u)");
    r.check(c.sqf_index % c.u == 0, who.str() + " (u does not divide [H^[n]:H']_0)");
  }
  return r;
}

SuiteResult verify_splitting(const RingPtr& ring) {
  SuiteResult r{"splitting", ring->group().name(), ring->n()};
  const int np = static_cast<int>(ring->points().size());
  const std::string tag = ring->group().name() + " n=" + std::to_string(ring->n());
  FBElement sum(ring);
  for (int p = 0; p < np; ++p) sum += ring->idempotent(p);
  const FBElement one = FBElement::one(ring);
  r.check(sum == one, tag + ": sum of idempotents is " + element_label(sum) + ", expected " + element_label(one));
  r.check(np == ring->rank(), tag + ": point count differs from rank");
  for (int p = 0; p < np; ++p) {
    const FBElement& e = ring->idempotent(p);
    for (int q = p; q < np; ++q) {
      FBElement prod = e * ring->idempotent(q);
      const bool ok = p == q ? prod == e : prod.is_zero();
      r.check(ok, tag + ": e" + point_text(*ring, p) + " * e" + point_text(*ring, q) + " = " + element_label(prod));
    }
    for (int q = 0; q < np; ++q) {
      CycNum v = ring->species_eval(q, e);
      const CycNum want = p == q ? CycNum::one(ring->coeff_order()) : CycNum::zero(ring->coeff_order());
      r.check(v == want, tag + ": species " + point_text(*ring, q) + " on e" + point_text(*ring, p) + " = " +
                             v.to_string());
    }
  }
  return r;
}

SuiteResult verify_boltje(const RingPtr& ring) {
  SuiteResult r{"boltje", ring->group().name(), ring->n()};
  const std::string tag = ring->group().name() + " n=" + std::to_string(ring->n());
  const auto& lat = ring->lattice();
  for (int j = 0; j < ring->rank(); ++j) {
    r.check(boltje_membership(ring->mark(FBElement::basis(ring, j))),
            tag + ": mark of basis " + pair_text(*ring, j) + " rejected");
    GhostElement unit(ring);
    const int sub = ring->basis()[j].pair.sub;
    const int cls = lat.class_of(sub);
    for (int a = 0; a < ring->ghost_width(cls); ++a)
      if (ring->canonical(sub, a) == j) unit.at(cls, a) = CycNum::one(ring->coeff_order());
    GhostElement scaled = unit * Rational(ring->group().order());
    r.check(boltje_membership(scaled), tag + ": |G| times ghost unit " + pair_text(*ring, j) + " rejected");
  }
  for (int p = 0; p < static_cast<int>(ring->points().size()); ++p) {
    const ConductorReport c = conductor(*ring, p);
    const GhostElement y = ring->mark(ring->idempotent(p));
    r.check(boltje_membership(y * Rational(c.c)), tag + ": c * mark(e" + point_text(*ring, p) + ") rejected");
    for (auto q : prime_divisors(c.c)) {
      GhostElement z = y * Rational(c.c / q);
      const bool member = z.is_integral() && boltje_membership(z);
      r.check(!member, tag + ": (c/" + std::to_string(q) + ") * mark(e" + point_text(*ring, p) + ") accepted");
    }
  }
  return r;
}

SuiteResult verify_lemmas(const GroupPtr& group, int n, RingCache& cache) {
  SuiteResult r{"lemmas", group->name(), n};
  const FiniteGroup& G = *group;
  const auto& lat = G.lattice();
  const std::string tag = G.name() + " n=" + std::to_string(n);

  // Residual subgroup identities, with every subgroup in the role of the ambient group.
  for (int hi = 0; hi < lat.size(); ++hi) {
    const Subgroup& h = lat.at(hi);
    int eh = 1;
    for (Elem x : h.elements()) eh = std::lcm(eh, G.element_order(x));
    const Subgroup der = derived_subgroup(h);
    const std::string who = tag + " H=" + elems_label(h);
    r.check(n_residual(h, eh) == der, who + ": H^[exp H] != H'");
    r.check(n_residual(h, 1) == h, who + ": H^[1] != H");
    const Subgroup hn = n_residual(h, n);
    for (int m : divisors(eh * n)) {
      if (m % n != 0) continue;
      r.check(n_residual(h, m).is_subgroup_of(hn), who + ": H^[" + std::to_string(m) + "] not in H^[n]");
    }
    for (int k : lat.below(hi)) {
      r.check(n_residual(lat.at(k), n).is_subgroup_of(hn), who + ": K^[n] not in H^[n] for K=" + elems_label(lat.at(k)));
    }
    GroupHom as_group = subgroup_as_group(group, h);
    GroupPtr hg = as_group.source;
    GroupHom q = quotient_group(hg, derived_subgroup(hg->whole()));
    Subgroup top_res = n_residual(q.target->whole(), n);
    Subgroup image = q.image(n_residual(hg->whole(), n));
    r.check(top_res == image, who + ": (H/H')^[n] != H^[n]/H'");
    int eab = 1;
    for (Elem x = 0; x < q.target->order(); ++x) eab = std::lcm(eab, q.target->element_order(x));
    r.check(hn == n_residual(h, std::gcd(n, eh)) && hn == n_residual(h, std::gcd(n, eab)),
            who + ": H^[n] differs from H^[(n,exp H)] or H^[(n,exp H/H')]");
  }

  // Restriction fibers and the normalizer divisibility.
  const Subgroup gres = n_residual(G.whole(), n);
  const Subgroup gder = derived_subgroup(G.whole());
  const int top = lat.size() - 1;
  for (int c = 0; c < lat.class_count(); ++c) {
    const int hi = lat.class_rep(c);
    const Subgroup& h = lat.at(hi);
    const std::string who = tag + " H=" + elems_label(h);
    RestrictionFibers f = restriction_fibers(h, n);
    const Subgroup hg = join(h, gres);
    r.check(f.image_size == hg.order() / gres.order(), who + ": restriction image size " + std::to_string(f.image_size));
    r.check(f.uniform && f.fiber_size == G.order() / hg.order(),
            who + ": restriction fiber size " + std::to_string(f.fiber_size));
    const std::int64_t nh = lat.at(lat.normalizer(hi)).order() / h.order();
    const std::int64_t rhs = lat.moebius(hi, top) * isqf(G.order() / join(h, gder).order());
    r.check(rhs % nh == 0, who + ": [N_G(H):H] does not divide mu(H,G)[G:HG']_0");
  }

  // Restriction and induction of idempotents.
  RingPtr ring = cache.get(group, n);
  for (int p = 0; p < static_cast<int>(ring->points().size()); ++p) {
    const SpeciesPoint& pt = ring->points()[p];
    const Subgroup& h = lat.at(pt.sub);
    GroupHom incl = subgroup_as_group(group, h);
    RingPtr hring = cache.get(incl.source, n);
    const FBElement& e = ring->idempotent(p);
    const std::string who = tag + " point " + point_text(*ring, p);
    const int htop = hring->lattice().size() - 1;

    FBElement res = restrict(e, incl, hring);
    FBElement want(hring);
    for (int q = 0; q < static_cast<int>(hring->points().size()); ++q) {
      const SpeciesPoint& qt = hring->points()[q];
      if (qt.sub == htop && ring->point_index(pt.sub, incl(qt.h)) == p) want += hring->idempotent(q);
    }
    r.check(res == want, who + ": res(e) = " + element_label(res) + ", expected " + element_label(want));

    FBElement back = induce(res, incl, ring);
    const int nh = lat.at(lat.normalizer(pt.sub)).order() / h.order();
    FBElement scaled = e * Rational(nh);
    r.check(back == scaled, who + ": ind(res(e)) = " + element_label(back) + ", expected " + element_label(scaled));

    const auto& hel = h.elements();
    const Elem local = static_cast<Elem>(std::lower_bound(hel.begin(), hel.end(), pt.h) - hel.begin());
    FBElement up = induce(hring->idempotent(hring->point_index(htop, local)), incl, ring);
    FBElement want_up = e * Rational(pt.stabilizer_order / h.order());
    r.check(up == want_up, who + ": ind(e_H) = " + element_label(up) + ", expected " + element_label(want_up));
  }
  return r;
}

std::vector<BisetSpec> elementary_bisets(const GroupPtr& group) {
  const FiniteGroup& G = *group;
  const auto& lat = G.lattice();
  std::vector<BisetSpec> out;
  for (int c = 0; c < lat.class_count(); ++c) {
    const Subgroup& h = lat.at(lat.class_rep(c));
    GroupHom incl = subgroup_as_group(group, h);
    out.push_back(BisetSpec::restriction(incl));
    out.push_back(BisetSpec::induction(incl));
    if (lat.is_normal(lat.class_rep(c))) {
      GroupHom proj = quotient_group(group, h);
      out.push_back(BisetSpec::inflation(proj));
      out.push_back(BisetSpec::deflation(proj));
    }
  }
  for (Elem g = 1; g < G.order(); ++g) {
    std::vector<Elem> map(static_cast<std::size_t>(G.order()));
    for (Elem x = 0; x < G.order(); ++x) map[x] = G.conj(g, x);
    out.push_back(BisetSpec::isomorphism(make_hom(group, group, std::move(map))));
  }
  return out;
}

SuiteResult verify_naturality(const GroupPtr& group, const FiberMap& f, RingCache& cache) {
  SuiteResult r{"naturality", group->name(), f.n};
  const int m = std::lcm(f.t, f.n);
  const bool injective = fiber_change_injective(f, *group);
  bool found = false;
  for (const BisetSpec& b : elementary_bisets(group)) {
    NaturalitySquare sq{cache.get(b.source(), f.t, m), cache.get(b.target(), f.t, m), cache.get(b.source(), f.n, m),
                        cache.get(b.target(), f.n, m)};
    for (int j = 0; j < sq.source_t->rank(); ++j) {
      FBElement x = FBElement::basis(sq.source_t, j);
      FBElement d = naturality_defect(f, b, x, sq);
      if (d.is_zero()) {
        r.check(true, "");
        continue;
      }
      found = true;
      const std::string desc = b.name() + " " + b.source()->name() + "->" + b.target()->name() + " on " +
                               pair_text(*sq.source_t, j) + ": defect " + element_label(d);
      r.check(!injective && !b.right_free(), "f=" + f.to_string() + " " + desc);
      r.note(desc);
    }
  }
  if (!injective) {
    r.check(found, group->name() + ": f=" + f.to_string() +
                       " is not injective on exp(G)-torsion but no nonzero defect was found");
  }
  return r;
}

}  // namespace fbr::cli
