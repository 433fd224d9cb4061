#include "fbr/biset.hpp"

#include <stdexcept>

namespace fbr {

RingPtr RingCache::get(const GroupPtr& g, int n, int coeff_order) {
  const int m = coeff_order == 0 ? n : coeff_order;
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_tuple(g.get(), n, m);
  auto it = rings_.find(key);
  if (it != rings_.end()) return it->second;
  RingPtr r = FiberedRing::create(g, n, m);
  rings_.emplace(key, r);
  return r;
}

namespace {

void check_rings(const FBElement& x, const GroupPtr& source, const RingPtr& target, const GroupPtr& target_group) {
  if (x.ring().group_ptr().get() != source.get()) throw GroupError("biset: element lives over the wrong group");
  if (target->group_ptr().get() != target_group.get()) throw GroupError("biset: target ring over the wrong group");
  if (target->n() != x.ring().n() || target->coeff_order() != x.ring().coeff_order()) {
    throw GroupError("biset: fiber or coefficient orders differ");
  }
}

int find_sub(const FiberedRing& ring, const Bitset& bits) {
  int s = ring.lattice().find(bits);
  if (s < 0) throw std::logic_error("biset: image is not a subgroup");
  return s;
}

// [K, φ] -> [f(K), φ∘f^-1] through a homomorphism f; pairs whose kernel part is
// not killed by φ are dropped (the deflation condition).
FBElement push_forward(const FBElement& x, const GroupHom& f, const RingPtr& target) {
  check_rings(x, f.source, target, f.target);
  const FiberedRing& src = x.ring();
  const FiniteGroup& T = *f.target;
  FBElement out(target);
  std::vector<int> val(static_cast<std::size_t>(T.order()));
  for (const auto& [j, coeff] : x.coeffs()) {
    const auto& pair = src.basis()[j].pair;
    const FiberHom& phi = src.homs(pair.sub)[pair.hom];
    Bitset img(T.order());
    bool killed = true;
    for (Elem k : src.lattice().at(pair.sub).elements()) {
      const Elem z = f(k);
      if (z == 0 && phi(k) != 0) {
        killed = false;
        break;
      }
      img.set(z);
      val[z] = phi(k);
    }
    if (!killed) continue;
    const int s = find_sub(*target, img);
    const int a = target->hom_index_by(s, [&](Elem z) { return val[z]; });
    out.add(target->canonical(s, a), coeff);
  }
  return out;
}

}  // namespace

FBElement restrict(const FBElement& x, const GroupHom& inclusion, const RingPtr& target) {
  if (!inclusion.is_injective()) throw GroupError("restrict: map is not an inclusion");
  check_rings(x, inclusion.target, target, inclusion.source);
  const FiberedRing& src = x.ring();
  const FiniteGroup& G = *inclusion.target;
  const FiniteGroup& H = *inclusion.source;
  const Subgroup himg = inclusion.image(H.whole());
  FBElement out(target);
  for (const auto& [j, coeff] : x.coeffs()) {
    const auto& pair = src.basis()[j].pair;
    const FiberHom& psi = src.homs(pair.sub)[pair.hom];
    for (Elem g : double_coset_reps(himg, src.lattice().at(pair.sub))) {
      const Elem gi = G.inv(g);
      const Bitset& gl = src.lattice().at(src.lattice().conj(g, pair.sub)).bits();
      Bitset pre(H.order());
      for (Elem y = 0; y < H.order(); ++y)
        if (gl.test(inclusion(y))) pre.set(y);
      const int s = find_sub(*target, pre);
      const int a = target->hom_index_by(s, [&](Elem y) { return psi(G.conj(gi, inclusion(y))); });
      out.add(target->canonical(s, a), coeff);
    }
  }
  return out;
}

FBElement induce(const FBElement& x, const GroupHom& inclusion, const RingPtr& target) {
  if (!inclusion.is_injective()) throw GroupError("induce: map is not an inclusion");
  return push_forward(x, inclusion, target);
}

FBElement inflate(const FBElement& x, const GroupHom& projection, const RingPtr& target) {
  check_rings(x, projection.target, target, projection.source);
  const FiberedRing& src = x.ring();
  const FiniteGroup& G = *projection.source;
  FBElement out(target);
  for (const auto& [j, coeff] : x.coeffs()) {
    const auto& pair = src.basis()[j].pair;
    const FiberHom& psi = src.homs(pair.sub)[pair.hom];
    const Subgroup& kbar = src.lattice().at(pair.sub);
    Bitset pre(G.order());
    for (Elem g = 0; g < G.order(); ++g)
      if (kbar.contains(projection(g))) pre.set(g);
    const int s = find_sub(*target, pre);
    const int a = target->hom_index_by(s, [&](Elem g) { return psi(projection(g)); });
    out.add(target->canonical(s, a), coeff);
  }
  return out;
}

FBElement deflate(const FBElement& x, const GroupHom& projection, const RingPtr& target) {
  if (projection.image(projection.source->whole()).order() != projection.target->order()) {
    throw GroupError("deflate: map is not a projection");
  }
  return push_forward(x, projection, target);
}

FBElement isomorph(const FBElement& x, const GroupHom& alpha, const RingPtr& target) {
  if (!alpha.is_bijective()) throw GroupError("isomorph: map is not an isomorphism");
  return push_forward(x, alpha, target);
}

GroupHom conjugation_hom(const GroupHom& from, const GroupHom& to, Elem g) {
  if (from.target.get() != to.target.get()) throw GroupError("conjugation_hom: inclusions into different groups");
  const FiniteGroup& G = *from.target;
  std::vector<Elem> back(static_cast<std::size_t>(G.order()), -1);
  for (Elem y = 0; y < to.source->order(); ++y) back[to(y)] = y;
  std::vector<Elem> map(static_cast<std::size_t>(from.source->order()));
  for (Elem x = 0; x < from.source->order(); ++x) {
    const Elem z = back[G.conj(g, from(x))];
    if (z < 0) throw GroupError("conjugation_hom: target is not gHg^-1");
    map[x] = z;
  }
  GroupHom h = make_hom(from.source, to.source, std::move(map));
  if (!h.is_bijective()) throw GroupError("conjugation_hom: target is not gHg^-1");
  return h;
}

FBElement conjugate(const FBElement& x, const GroupHom& from, const GroupHom& to, Elem g, const RingPtr& target) {
  return isomorph(x, conjugation_hom(from, to, g), target);
}

FBElement transitive_biset_apply(const SectionData& e, const FBElement& x, const RingPtr& target) {
  check_rings(x, e.right, target, e.left);
  const FiberedRing& src = x.ring();
  const auto& lat = src.lattice();
  const FiniteGroup& G = *e.right;
  const FiniteGroup& H = *e.left;
  FBElement out(target);
  std::vector<int> val(static_cast<std::size_t>(H.order()));
  for (const auto& [j, coeff] : x.coeffs()) {
    const auto& pair = src.basis()[j].pair;
    const FiberHom& phi = src.homs(pair.sub)[pair.hom];
    for (Elem g : double_coset_reps(e.p2, lat.at(pair.sub))) {
      const Elem gi = G.inv(g);
      const Subgroup& gk = lat.at(lat.conj(g, pair.sub));
      // k2(E)^g ∩ K <= ker φ, read on the conjugate side as k2(E) ∩ gK <= ker(gφ).
      bool free = true;
      for (Elem z : e.k2.elements()) {
        if (gk.contains(z) && phi(G.conj(gi, z)) != 0) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      std::fill(val.begin(), val.end(), -1);
      Bitset lg(H.order());
      for (Elem pr : e.e.elements()) {
        const Elem xx = e.second(pr);
        if (!gk.contains(xx)) continue;
        const Elem y = e.first(pr);
        const int v = phi(G.conj(gi, xx));
        if (val[y] < 0) {
          val[y] = v;
          lg.set(y);
        } else if (val[y] != v) {
          throw std::logic_error("transitive_biset_apply: psi_g is not well defined");
        }
      }
      const int s = find_sub(*target, lg);
      const int a = target->hom_index(s, val);
      if (a < 0) throw std::logic_error("transitive_biset_apply: psi_g is not a homomorphism");
      out.add(target->canonical(s, a), coeff);
    }
  }
  return out;
}

BisetSpec BisetSpec::restriction(GroupHom inclusion) {
  if (!inclusion.is_injective()) throw GroupError("restriction: map is not injective");
  return BisetSpec{Kind::Restriction, std::move(inclusion), std::nullopt};
}

BisetSpec BisetSpec::induction(GroupHom inclusion) {
  if (!inclusion.is_injective()) throw GroupError("induction: map is not injective");
  return BisetSpec{Kind::Induction, std::move(inclusion), std::nullopt};
}

BisetSpec BisetSpec::inflation(GroupHom projection) {
  if (projection.image(projection.source->whole()).order() != projection.target->order()) {
    throw GroupError("inflation: map is not surjective");
  }
  return BisetSpec{Kind::Inflation, std::move(projection), std::nullopt};
}

BisetSpec BisetSpec::deflation(GroupHom projection) {
  if (projection.image(projection.source->whole()).order() != projection.target->order()) {
    throw GroupError("deflation: map is not surjective");
  }
  return BisetSpec{Kind::Deflation, std::move(projection), std::nullopt};
}

BisetSpec BisetSpec::isomorphism(GroupHom alpha) {
  if (!alpha.is_bijective()) throw GroupError("isomorphism: map is not bijective");
  return BisetSpec{Kind::Isomorphism, std::move(alpha), std::nullopt};
}

BisetSpec BisetSpec::conjugation(const GroupHom& from, const GroupHom& to, Elem g) {
  return isomorphism(conjugation_hom(from, to, g));
}

BisetSpec BisetSpec::general(SectionData e) { return BisetSpec{Kind::General, std::nullopt, std::move(e)}; }

GroupPtr BisetSpec::source() const {
  switch (kind) {
    case Kind::Restriction:
    case Kind::Inflation:
      return map->target;
    case Kind::Induction:
    case Kind::Deflation:
    case Kind::Isomorphism:
      return map->source;
    case Kind::General:
      return section->right;
  }
  return nullptr;
}

GroupPtr BisetSpec::target() const {
  switch (kind) {
    case Kind::Restriction:
    case Kind::Inflation:
      return map->source;
    case Kind::Induction:
    case Kind::Deflation:
    case Kind::Isomorphism:
      return map->target;
    case Kind::General:
      return section->left;
  }
  return nullptr;
}

SectionData BisetSpec::as_section() const {
  switch (kind) {
    case Kind::Restriction:
      return restriction_section(*map);
    case Kind::Induction:
      return induction_section(*map);
    case Kind::Inflation:
      return inflation_section(*map);
    case Kind::Deflation:
      return deflation_section(*map);
    case Kind::Isomorphism:
      return graph_section(*map);
    case Kind::General:
      return *section;
  }
  throw std::logic_error("unknown biset kind");
}

bool BisetSpec::right_free() const {
  switch (kind) {
    case Kind::Deflation:
      return map->kernel().order() == 1;
    case Kind::General:
      return section->right_free();
    default:
      return true;
  }
}

std::string BisetSpec::name() const {
  switch (kind) {
    case Kind::Restriction:
      return "res";
    case Kind::Induction:
      return "ind";
    case Kind::Inflation:
      return "inf";
    case Kind::Deflation:
      return "def";
    case Kind::Isomorphism:
      return "iso";
    case Kind::General:
      return "biset";
  }
  return "?";
}

FBElement apply(const BisetSpec& b, const FBElement& x, const RingPtr& target) {
  switch (b.kind) {
    case BisetSpec::Kind::Restriction:
      return restrict(x, *b.map, target);
    case BisetSpec::Kind::Induction:
      return induce(x, *b.map, target);
    case BisetSpec::Kind::Inflation:
      return inflate(x, *b.map, target);
    case BisetSpec::Kind::Deflation:
      return deflate(x, *b.map, target);
    case BisetSpec::Kind::Isomorphism:
      return isomorph(x, *b.map, target);
    case BisetSpec::Kind::General:
      return transitive_biset_apply(*b.section, x, target);
  }
  throw std::logic_error("unknown biset kind");
}

}  // namespace fbr
