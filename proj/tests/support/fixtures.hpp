#pragma once

#include <random>
#include <string>
#include <vector>

#include "fbr/biset.hpp"
#include "fbr/cyclotomic.hpp"
#include "fbr/group_spec.hpp"
#include "fbr/number_theory.hpp"

namespace fixtures {

inline std::vector<std::string> small_catalog(int max_order) {
  std::vector<std::string> out;
  for (const auto& name : fbr::catalog_names())
    if (fbr::catalog_group(name)->order() <= max_order) out.push_back(name);
  return out;
}

inline fbr::GroupPtr group(const std::string& name) { return fbr::catalog_group(name); }

inline std::vector<int> fiber_orders(const fbr::FiniteGroup& g) { return fbr::divisors(g.exponent()); }

/// Random element with small integer coordinates on a few basis orbits.
inline fbr::FBElement random_element(const fbr::RingPtr& ring, std::mt19937& rng, int terms = 3) {
  fbr::FBElement x(ring);
  std::uniform_int_distribution<int> pick(0, ring->rank() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> power(0, ring->coeff_order() - 1);
  for (int i = 0; i < terms; ++i) {
    fbr::CycNum c(ring->coeff_order());
    c.add_root(fbr::Rational(coef(rng)), power(rng));
    x.add(pick(rng), c);
  }
  return x;
}

/// G-invariant ghost element with one value per basis orbit.
inline fbr::GhostElement ghost_from_orbits(const fbr::RingPtr& ring, const std::vector<fbr::CycNum>& values) {
  fbr::GhostElement y(ring);
  const auto& lat = ring->lattice();
  for (int c = 0; c < lat.class_count(); ++c)
    for (int a = 0; a < ring->ghost_width(c); ++a) y.at(c, a) = values[ring->canonical(lat.class_rep(c), a)];
  return y;
}

/// Random integral G-invariant ghost element. Kind 0 is uniform noise, kind 1
/// the mark of a random integral element, kind 2 such a mark shifted by a
/// random multiple of one orbit indicator.
inline fbr::GhostElement random_ghost(const fbr::RingPtr& ring, std::mt19937& rng, int kind) {
  const int m = ring->coeff_order();
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> power(0, m - 1);
  std::uniform_int_distribution<int> pick(0, ring->rank() - 1);
  if (kind == 0) {
    std::vector<fbr::CycNum> v;
    for (int j = 0; j < ring->rank(); ++j) {
      fbr::CycNum c(m);
      c.add_root(fbr::Rational(coef(rng)), power(rng));
      v.push_back(c);
    }
    return ghost_from_orbits(ring, v);
  }
  fbr::GhostElement y = ring->mark(random_element(ring, rng, 4));
  if (kind == 2) {
    std::vector<fbr::CycNum> v(ring->rank(), fbr::CycNum(m));
    v[pick(rng)].add_root(fbr::Rational(coef(rng)), power(rng));
    y += ghost_from_orbits(ring, v);
  }
  return y;
}

}  // namespace fixtures
