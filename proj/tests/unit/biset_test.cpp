#include <gtest/gtest.h>

#include <random>

#include "fbr/biset.hpp"
#include "fixtures.hpp"

using namespace fbr;

namespace {

FBElement pair_element(const RingPtr& r, int sub, const std::vector<int>& dense) {
  return FBElement::basis(r, r->canonical_values(sub, dense));
}

int sub_of_order(const SubgroupLattice& lat, int order) {
  for (int i = 0; i < lat.size(); ++i)
    if (lat.at(i).order() == order) return i;
  return -1;
}

std::vector<int> zeros(const FiniteGroup& g) { return std::vector<int>(g.order(), 0); }

}  // namespace

TEST(Restriction, Examples) {
  RingCache cache;
  auto c2 = catalog_group("C2");
  auto inc = subgroup_as_group(c2, c2->trivial());
  auto r2 = cache.get(c2, 2);
  auto r1 = cache.get(inc.source, 2);
  auto sigma = pair_element(r2, 1, {0, 1});
  EXPECT_EQ(restrict(sigma, inc, r1), FBElement::one(r1));

  auto s3 = catalog_group("S3");
  const auto& lat = s3->lattice();
  auto c3 = subgroup_as_group(s3, lat.at(sub_of_order(lat, 3)));
  auto rs = cache.get(s3, 1);
  auto rc = cache.get(c3.source, 1);
  auto x = pair_element(rs, sub_of_order(lat, 2), zeros(*s3));
  FBElement bottom = pair_element(rc, 0, zeros(*c3.source));
  EXPECT_EQ(restrict(x, c3, rc), bottom);
}

TEST(Induction, Examples) {
  RingCache cache;
  auto s3 = catalog_group("S3");
  const auto& lat = s3->lattice();
  auto c2 = subgroup_as_group(s3, lat.at(sub_of_order(lat, 2)));
  auto rs = cache.get(s3, 6);
  auto rc = cache.get(c2.source, 6);
  auto bottom = pair_element(rc, 0, zeros(*c2.source));
  EXPECT_EQ(induce(bottom, c2, rs), pair_element(rs, 0, zeros(*s3)));
}

TEST(Induction, RestrictionOfIdempotentsScalesByNormalizerIndex) {
  RingCache cache;
  for (const auto& name : {"S3", "D8", "A4", "C6", "Q8"}) {
    auto g = catalog_group(name);
    for (int n : fixtures::fiber_orders(*g)) {
      auto rg = cache.get(g, n);
      const auto& lat = rg->lattice();
      for (int p = 0; p < static_cast<int>(rg->points().size()); ++p) {
        const int h = rg->points()[p].sub;
        auto inc = subgroup_as_group(g, lat.at(h));
        auto rh = cache.get(inc.source, n);
        const auto& e = rg->idempotent(p);
        const int idx = lat.at(lat.normalizer(h)).order() / lat.at(h).order();
        EXPECT_EQ(induce(restrict(e, inc, rh), inc, rg), e * Rational(idx)) << name << " n=" << n;
      }
    }
  }
}

TEST(Induction, FrobeniusIdentity) {
  RingCache cache;
  std::mt19937 rng(5);
  for (const auto& name : {"S3", "D8", "C4xC2", "A4"}) {
    auto g = catalog_group(name);
    auto rg = cache.get(g, g->exponent());
    const auto& lat = g->lattice();
    for (int h : lat.class_reps()) {
      auto inc = subgroup_as_group(g, lat.at(h));
      auto rh = cache.get(inc.source, g->exponent());
      auto x = fixtures::random_element(rg, rng);
      auto y = fixtures::random_element(rh, rng);
      EXPECT_EQ(induce(restrict(x, inc, rh) * y, inc, rg), x * induce(y, inc, rg)) << name;
      // ind(res(x)) = [H,1]_G x
      auto hh = pair_element(rg, h, zeros(*g));
      EXPECT_EQ(induce(restrict(x, inc, rh), inc, rg), hh * x);
    }
  }
}

TEST(InflationDeflation, Examples) {
  RingCache cache;
  auto c4 = catalog_group("C4");
  auto id = quotient_group(c4, c4->trivial());
  auto r = cache.get(c4, 4);
  auto rq = cache.get(id.target, 4);
  std::mt19937 rng(1);
  for (int i = 0; i < 5; ++i) {
    auto x = fixtures::random_element(r, rng);
    EXPECT_EQ(inflate(deflate(x, id, rq), id, r), x);
  }
  for (int n : {2, 3, 4}) {
    auto cn = catalog_group("C" + std::to_string(n));
    auto pr = quotient_group(cn, cn->whole());
    auto rn = cache.get(cn, n);
    auto r1 = cache.get(pr.target, n);
    std::vector<int> faithful(n);
    for (int v = 0; v < n; ++v) faithful[v] = v;
    auto x = pair_element(rn, rn->lattice().size() - 1, faithful);
    EXPECT_TRUE(deflate(x, pr, r1).is_zero());
  }
  std::vector<Elem> two{2};
  auto pr = quotient_group(c4, c4->generate(two));
  auto rq2 = cache.get(pr.target, 2);
  auto r2 = cache.get(c4, 2);
  auto chi = pair_element(rq2, 1, {0, 1});
  std::vector<int> pulled(4);
  for (Elem x = 0; x < 4; ++x) pulled[x] = pr(x) == 0 ? 0 : 1;
  EXPECT_EQ(inflate(chi, pr, r2), pair_element(r2, r2->lattice().size() - 1, pulled));
}

TEST(Isomorphism, Examples) {
  RingCache cache;
  auto c4 = catalog_group("C4");
  auto r = cache.get(c4, 4);
  auto ident = make_hom(c4, c4, {0, 1, 2, 3});
  std::mt19937 rng(2);
  auto x = fixtures::random_element(r, rng);
  EXPECT_EQ(isomorph(x, ident, r), x);
  auto cube = make_hom(c4, c4, {0, 3, 2, 1});
  auto chi = pair_element(r, 2, {0, 1, 2, 3});
  EXPECT_EQ(isomorph(chi, cube, r), pair_element(r, 2, {0, 3, 2, 1}));
}

TEST(GeneralBiset, DiagonalIsIdentity) {
  RingCache cache;
  std::mt19937 rng(9);
  for (const auto& name : {"S3", "Q8", "C6"}) {
    auto g = catalog_group(name);
    auto r = cache.get(g, g->exponent());
    auto d = diagonal_section(g);
    for (int i = 0; i < 5; ++i) {
      auto x = fixtures::random_element(r, rng);
      EXPECT_EQ(transitive_biset_apply(d, x, r), x);
    }
  }
}

TEST(GeneralBiset, AgreesWithElementaryOperations) {
  RingCache cache;
  for (const auto& name : {"S3", "D8", "C4xC2", "A4"}) {
    auto g = catalog_group(name);
    for (int n : fixtures::fiber_orders(*g)) {
      const auto& lat = g->lattice();
      std::vector<BisetSpec> ops;
      for (int h : lat.class_reps()) {
        auto inc = subgroup_as_group(g, lat.at(h));
        ops.push_back(BisetSpec::restriction(inc));
        ops.push_back(BisetSpec::induction(inc));
        if (lat.is_normal(h)) {
          auto pr = quotient_group(g, lat.at(h));
          ops.push_back(BisetSpec::inflation(pr));
          ops.push_back(BisetSpec::deflation(pr));
        }
      }
      for (int h = 0; h < lat.size(); ++h) {
        if (lat.is_rep(h)) continue;
        auto from = subgroup_as_group(g, lat.at(lat.class_rep(lat.class_of(h))));
        ops.push_back(BisetSpec::conjugation(from, subgroup_as_group(g, lat.at(h)), lat.transporter(h)));
      }
      for (const auto& b : ops) {
        auto rs = cache.get(b.source(), n);
        auto rt = cache.get(b.target(), n);
        const auto sec = b.as_section();
        for (int j = 0; j < rs->rank(); ++j) {
          auto x = FBElement::basis(rs, j);
          EXPECT_EQ(apply(b, x, rt), transitive_biset_apply(sec, x, rt)) << name << " " << b.name();
        }
      }
    }
  }
}

TEST(BisetSpec, Validation) {
  auto c4 = catalog_group("C4");
  auto pr = quotient_group(c4, c4->trivial());
  auto spec = BisetSpec::deflation(pr);
  EXPECT_TRUE(spec.right_free());
  std::vector<Elem> two{2};
  EXPECT_FALSE(BisetSpec::deflation(quotient_group(c4, c4->generate(two))).right_free());
  EXPECT_TRUE(BisetSpec::induction(subgroup_as_group(c4, c4->generate(two))).right_free());
  EXPECT_EQ(spec.name(), "def");
  auto s3 = catalog_group("S3");
  EXPECT_THROW(BisetSpec::isomorphism(make_hom(s3, s3, {0, 0, 0, 0, 0, 0})), std::exception);
}
