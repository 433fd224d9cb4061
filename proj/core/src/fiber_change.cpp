#include "fbr/fiber_change.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fbr {

FiberMap FiberMap::make(int t, int n, int k) {
  if (t < 1 || n < 1) throw std::invalid_argument("fiber map: orders must be positive");
  const long long kr = ((static_cast<long long>(k) % n) + n) % n;
  if ((kr * t) % n != 0) {
    throw std::invalid_argument("fiber map: " + std::to_string(k) + "*" + std::to_string(t) + " is not 0 mod " +
                                std::to_string(n));
  }
  return FiberMap{t, n, static_cast<int>(kr)};
}

FiberMap FiberMap::inclusion(int t, int n) {
  if (t < 1 || n % t != 0) throw std::invalid_argument("inclusion: t must divide n");
  return make(t, n, n / t);
}

FiberMap FiberMap::projection(int n, int t) {
  if (t < 1 || n % t != 0) throw std::invalid_argument("projection: t must divide n");
  return make(n, t, 1);
}

FiberMap FiberMap::parse(const std::string& text) {
  std::istringstream in(text);
  int v[3];
  char c1 = 0, c2 = 0;
  if (!(in >> v[0] >> c1 >> v[1] >> c2 >> v[2]) || c1 != ',' || c2 != ',') {
    throw std::invalid_argument("fiber map must be t,n,k: '" + text + "'");
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("fiber map must be t,n,k: '" + text + "'");
  return make(v[0], v[1], v[2]);
}

std::string FiberMap::to_string() const {
  return std::to_string(t) + "," + std::to_string(n) + "," + std::to_string(k);
}

FiberMap compose(const FiberMap& f, const FiberMap& g) {
  if (g.n != f.t) throw std::invalid_argument("compose: fiber orders do not chain");
  return FiberMap::make(g.t, f.n, static_cast<int>((static_cast<long long>(f.k) * g.k) % f.n));
}

FBElement fiber_change(const FiberMap& f, const FBElement& x, const RingPtr& target) {
  const FiberedRing& src = x.ring();
  if (src.n() != f.t || target->n() != f.n) throw std::invalid_argument("fiber_change: ring fibers do not match f");
  if (src.group_ptr().get() != target->group_ptr().get()) {
    throw std::invalid_argument("fiber_change: rings over different groups");
  }
  if (target->coeff_order() % src.coeff_order() != 0) {
    throw std::invalid_argument("fiber_change: target coefficients do not contain the source's");
  }
  FBElement out(target);
  for (const auto& [j, coeff] : x.coeffs()) {
    const auto& pair = src.basis()[j].pair;
    const FiberHom& phi = src.homs(pair.sub)[pair.hom];
    const int a = target->hom_index_by(pair.sub, [&](Elem y) { return f.apply(phi(y)); });
    out.add(target->canonical(pair.sub, a), coeff.lift(target->coeff_order()));
  }
  return out;
}

bool fiber_change_injective(const FiberMap& f, const FiniteGroup& g) {
  const int e = g.exponent();
  // The e-torsion of Z/t is generated by t / gcd(t, e).
  const int step = f.t / std::gcd(f.t, e);
  for (int v = step; v < f.t; v += step)
    if (f.apply(v) == 0) return false;
  return true;
}

bool fiber_change_iso(const FiberMap& f, const FiniteGroup& g) {
  const int e = g.exponent();
  return fiber_change_injective(f, g) && std::gcd(f.t, e) == std::gcd(f.n, e);
}

FBElement naturality_defect(const FiberMap& f, const BisetSpec& b, const FBElement& x, const NaturalitySquare& rings) {
  FBElement left = apply(b, fiber_change(f, x, rings.source_n), rings.target_n);
  FBElement right = fiber_change(f, apply(b, x, rings.target_t), rings.target_n);
  return left - right;
}

int pullback_point(const FiberMap& f, const FiberedRing& source, const FiberedRing& target, int q) {
  if (source.n() != f.t || target.n() != f.n) throw std::invalid_argument("pullback_point: ring fibers do not match f");
  const SpeciesPoint& pt = target.points().at(q);
  const long long j = static_cast<long long>(f.k) * f.t / f.n;
  return source.point_index(pt.sub, source.group().pow(pt.h, j));
}

IdempotentImage idempotent_image(const FiberMap& f, const RingPtr& source, int p, const RingPtr& target) {
  IdempotentImage out{fiber_change(f, source->idempotent(p), target), {}, FBElement(target)};
  for (int q = 0; q < static_cast<int>(target->points().size()); ++q) {
    if (pullback_point(f, *source, *target, q) != p) continue;
    out.points.push_back(q);
    out.expansion += target->idempotent(q);
  }
  return out;
}

}  // namespace fbr
