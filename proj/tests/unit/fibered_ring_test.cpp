#include <gtest/gtest.h>

#include <random>

#include "fbr/fibered_ring.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fbr;

namespace {

int find_basis(const RingPtr& ring, int order, bool trivial_hom) {
  for (int j = 0; j < ring->rank(); ++j) {
    const auto& p = ring->basis()[j].pair;
    if (ring->lattice().at(p.sub).order() != order) continue;
    const auto& v = ring->homs(p.sub)[p.hom].values;
    bool triv = std::all_of(v.begin(), v.end(), [](int a) { return a == 0; });
    if (triv == trivial_hom) return j;
  }
  return -1;
}

int find_point(const RingPtr& ring, int order, bool identity_tag) {
  for (int p = 0; p < static_cast<int>(ring->points().size()); ++p) {
    const auto& pt = ring->points()[p];
    if (ring->lattice().at(pt.sub).order() == order && (pt.h == 0) == identity_tag) return p;
  }
  return -1;
}

// Möbius sum over K <= H, optionally keeping only K on which every character
// vanishing on K also vanishes at h.
FBElement mobius_sum(const RingPtr& ring, int point, bool restricted) {
  const auto& g = ring->group();
  const auto& lat = ring->lattice();
  const auto& pt = ring->points()[point];
  const int n = ring->n();
  const int m = ring->coeff_order();
  const auto h = lat.at(pt.sub).elements();
  const auto res = oracle::residual(g, h, n);
  const auto norm = oracle::normalizer(g, h);
  long stab = 0;
  for (Elem x : norm) {
    Elem c = g.mul(g.mul(x, pt.h), g.inv(x));
    if (std::binary_search(res.begin(), res.end(), g.mul(g.inv(pt.h), c))) ++stab;
  }
  const auto homs = oracle::homs(g, h, n);
  auto subs = oracle::all_subgroups(g);
  FBElement out(ring);
  for (const auto& k : subs) {
    if (!oracle::subset(k, h)) continue;
    if (restricted) {
      bool keep = true;
      for (const auto& phi : homs) {
        bool kills = std::all_of(k.begin(), k.end(), [&](Elem x) { return phi[x] == 0; });
        if (kills && phi[pt.h] != 0) keep = false;
      }
      // h in K H^[n]
      bool in_product = false;
      for (Elem a : k)
        for (Elem b : res) in_product |= g.mul(a, b) == pt.h;
      EXPECT_EQ(keep, in_product);
      if (!keep) continue;
    }
    Bitset bits(g.order());
    for (Elem x : k) bits.set(x);
    const int ki = lat.find(bits);
    const long mu = oracle::moebius(subs, k, h);
    for (const auto& phi : homs) {
      std::vector<int> vals(g.order(), 0);
      for (Elem x : k) vals[x] = phi[x];
      CycNum c(m);
      c.add_root(Rational(static_cast<std::int64_t>(k.size()) * mu), static_cast<std::int64_t>(n - phi[pt.h]) * (m / n));
      FBElement term = FBElement::basis(ring, ring->canonical_values(ki, vals));
      term *= c;
      out += term;
    }
  }
  out *= Rational(static_cast<std::int64_t>(res.size()), static_cast<std::int64_t>(stab * h.size()));
  return out;
}

}  // namespace

TEST(Basis, Counts) {
  EXPECT_EQ(FiberedRing::create(catalog_group("C1"), 1)->rank(), 1);
  auto c2 = FiberedRing::create(catalog_group("C2"), 2);
  EXPECT_EQ(c2->rank(), 3);
  EXPECT_EQ(FiberedRing::create(catalog_group("S3"), 6)->rank(), 7);
  EXPECT_THROW(FiberedRing::create(catalog_group("C2"), 2, 3), std::exception);
}

TEST(Basis, RepresentativesAreClassReps) {
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    for (int n : fixtures::fiber_orders(*g)) {
      auto ring = FiberedRing::create(g, n);
      for (const auto& b : ring->basis()) EXPECT_TRUE(ring->lattice().is_rep(b.pair.sub));
      EXPECT_EQ(ring->points().size(), static_cast<std::size_t>(ring->rank())) << name << " n=" << n;
    }
  }
}

TEST(Multiply, Examples) {
  auto g = catalog_group("C2");
  auto ring = FiberedRing::create(g, 2);
  const int sigma = find_basis(ring, 2, false);
  const int top = find_basis(ring, 2, true);
  const int bottom = find_basis(ring, 1, true);
  auto s = FBElement::basis(ring, sigma);
  EXPECT_EQ(s * s, FBElement::basis(ring, top));
  auto b = FBElement::basis(ring, bottom);
  EXPECT_EQ(b * b, b * Rational(2));
  std::mt19937 rng(7);
  for (const auto& name : {"S3", "D8", "C6", "A4"}) {
    auto r = FiberedRing::create(catalog_group(name), catalog_group(name)->exponent());
    for (int i = 0; i < 10; ++i) {
      auto x = fixtures::random_element(r, rng);
      auto y = fixtures::random_element(r, rng);
      auto z = fixtures::random_element(r, rng);
      EXPECT_EQ(FBElement::one(r) * x, x);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
    }
  }
}

TEST(Species, Examples) {
  auto c1 = FiberedRing::create(catalog_group("C1"), 1);
  EXPECT_EQ(c1->species_value(0, 0), CycNum::one(1));
  auto ring = FiberedRing::create(catalog_group("C2"), 2);
  ASSERT_EQ(ring->points().size(), 3u);
  const int pg = find_point(ring, 2, false);
  EXPECT_EQ(ring->species_value(pg, find_basis(ring, 2, false)), CycNum(2, Rational(-1)));
  for (const auto& name : {"S3", "Q8", "C12", "A4"}) {
    auto g = catalog_group(name);
    auto r = FiberedRing::create(g, g->exponent());
    const int trivial_point = find_point(r, 1, true);
    for (int p = 0; p < static_cast<int>(r->points().size()); ++p)
      EXPECT_EQ(r->species_eval(p, FBElement::one(r)), CycNum::one(r->coeff_order()));
    for (int j = 0; j < r->rank(); ++j) {
      const int k = r->lattice().at(r->basis()[j].pair.sub).order();
      EXPECT_EQ(r->species_value(trivial_point, j), CycNum(r->coeff_order(), Rational(g->order() / k)));
    }
  }
}

TEST(Species, MatchOracleAndAreRingHoms) {
  std::mt19937 rng(11);
  for (const auto& name : fixtures::small_catalog(12)) {
    auto g = catalog_group(name);
    for (int n : fixtures::fiber_orders(*g)) {
      auto r = FiberedRing::create(g, n);
      const auto& pts = r->points();
      for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
        const auto h = r->lattice().at(pts[p].sub).elements();
        for (int j = 0; j < r->rank(); ++j)
          EXPECT_EQ(r->species_value(p, j), oracle::species(*r, h, pts[p].h, j)) << name << " n=" << n;
      }
      for (int i = 0; i < 4; ++i) {
        auto x = fixtures::random_element(r, rng);
        auto y = fixtures::random_element(r, rng);
        for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
          EXPECT_EQ(r->species_eval(p, x * y), r->species_eval(p, x) * r->species_eval(p, y));
          EXPECT_EQ(r->species_eval(p, x + y), r->species_eval(p, x) + r->species_eval(p, y));
        }
      }
      for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
        for (int q = p + 1; q < static_cast<int>(pts.size()); ++q) {
          bool differ = false;
          for (int j = 0; j < r->rank() && !differ; ++j) differ = !(r->species_value(p, j) == r->species_value(q, j));
          EXPECT_TRUE(differ) << name << " n=" << n;
        }
      }
    }
  }
}

TEST(Marks, Examples) {
  auto ring = FiberedRing::create(catalog_group("C2"), 2);
  auto unit = ring->mark(FBElement::one(ring));
  for (int c = 0; c < ring->lattice().class_count(); ++c) {
    for (int a = 0; a < ring->ghost_width(c); ++a) {
      const auto& vals = ring->homs(ring->lattice().class_rep(c))[a].values;
      bool triv = std::all_of(vals.begin(), vals.end(), [](int v) { return v == 0; });
      EXPECT_EQ(unit.at(c, a), triv ? CycNum::one(2) : CycNum(2));
    }
  }
  auto sigma = ring->mark(FBElement::basis(ring, find_basis(ring, 2, false)));
  const int top = ring->lattice().class_of(ring->lattice().size() - 1);
  const int bottom = ring->lattice().class_of(0);
  EXPECT_EQ(sigma.at(bottom, 0), CycNum::one(2));
  int hits = 0;
  for (int a = 0; a < ring->ghost_width(top); ++a) hits += sigma.at(top, a) == CycNum::one(2);
  EXPECT_EQ(hits, 1);
}

TEST(Marks, ClassicalTableOfMarks) {
  for (const auto& name : {"S3", "S4", "D8", "A4"}) {
    auto g = catalog_group(name);
    auto ring = FiberedRing::create(g, 1);
    const auto& lat = ring->lattice();
    for (int j = 0; j < ring->rank(); ++j) {
      auto y = ring->mark(FBElement::basis(ring, j));
      const auto hk = lat.at(ring->basis()[j].pair.sub).elements();
      for (int c = 0; c < lat.class_count(); ++c) {
        const auto k = lat.at(lat.class_rep(c)).elements();
        long fixed = 0;
        for (Elem t = 0; t < g->order(); ++t) {
          bool inside = true;
          for (Elem x : k) inside &= std::binary_search(hk.begin(), hk.end(), g->mul(g->mul(g->inv(t), x), t));
          fixed += inside;
        }
        EXPECT_EQ(y.at(c, 0), CycNum(1, Rational(fixed / static_cast<long>(hk.size()))));
      }
    }
  }
}

TEST(Marks, RingHomAndInvertible) {
  for (const auto& name : fixtures::small_catalog(12)) {
    auto g = catalog_group(name);
    for (int n : fixtures::fiber_orders(*g)) {
      auto r = FiberedRing::create(g, n);
      for (int i = 0; i < r->rank(); ++i) {
        auto bi = FBElement::basis(r, i);
        for (int j = i; j < r->rank(); ++j) {
          auto bj = FBElement::basis(r, j);
          EXPECT_EQ(r->mark(bi * bj), r->mark(bi) * r->mark(bj)) << name << " n=" << n;
        }
      }
      EXPECT_EQ(oracle::rank(oracle::mark_matrix(*r)), r->rank());
    }
  }
}

TEST(Idempotents, Examples) {
  auto c1 = FiberedRing::create(catalog_group("C1"), 1);
  EXPECT_EQ(c1->idempotent(0), FBElement::one(c1));
  auto ring = FiberedRing::create(catalog_group("C2"), 2);
  FBElement expect = FBElement::basis(ring, find_basis(ring, 2, true)) * Rational(1, 2) -
                     FBElement::basis(ring, find_basis(ring, 2, false)) * Rational(1, 2);
  EXPECT_EQ(ring->idempotent(find_point(ring, 2, false)), expect);
  auto r1 = FiberedRing::create(catalog_group("C2"), 1);
  FBElement e1 = FBElement::basis(r1, find_basis(r1, 2, true)) - FBElement::basis(r1, find_basis(r1, 1, true)) * Rational(1, 2);
  EXPECT_EQ(r1->idempotent(find_point(r1, 2, true)), e1);
}

TEST(Idempotents, MatchSpeciesSolveAndBothMobiusSums) {
  for (const auto& name : fixtures::small_catalog(12)) {
    auto g = catalog_group(name);
    for (int n : fixtures::fiber_orders(*g)) {
      auto r = FiberedRing::create(g, n);
      if (r->rank() * euler_phi(r->coeff_order()) > 160) continue;
      for (int p = 0; p < static_cast<int>(r->points().size()); ++p) {
        const auto& e = r->idempotent(p);
        EXPECT_EQ(e, oracle::idempotent_by_species(*r, p)) << name << " n=" << n << " p=" << p;
        EXPECT_EQ(e, mobius_sum(r, p, false)) << name << " n=" << n << " p=" << p;
        EXPECT_EQ(e, mobius_sum(r, p, true)) << name << " n=" << n << " p=" << p;
      }
    }
  }
}

TEST(Idempotents, SplitTheUnit) {
  for (const auto& name : {"S4", "C9xC3", "C4xC2", "Q8"}) {
    auto g = catalog_group(name);
    auto r = FiberedRing::create(g, g->exponent());
    FBElement sum(r);
    for (int p = 0; p < static_cast<int>(r->points().size()); ++p) sum += r->idempotent(p);
    EXPECT_EQ(sum, FBElement::one(r)) << name;
  }
}
