#include "fbr/section.hpp"

#include <unordered_map>

namespace fbr {

SectionData make_section(const GroupPtr& left, const GroupPtr& right, const GroupPtr& product,
                         Subgroup e) {
  if (product->order() != left->order() * right->order()) {
    throw GroupError("make_section: product order mismatch");
  }
  if (&e.parent() != product.get()) throw GroupError("make_section: E is not a subgroup of the product");
  const int b = right->order();
  Bitset p1(left->order()), k1(left->order()), p2(b), k2(b);
  for (Elem x : e.elements()) {
    Elem h = x / b;
    Elem g = x % b;
    p1.set(h);
    p2.set(g);
    if (g == 0) k1.set(h);
    if (h == 0) k2.set(g);
  }
  SectionData s{left,
                right,
                product,
                std::move(e),
                Subgroup(*left, std::move(p1)),
                Subgroup(*left, std::move(k1)),
                Subgroup(*right, std::move(p2)),
                Subgroup(*right, std::move(k2))};
  if (s.p1.order() * s.k2.order() != s.p2.order() * s.k1.order()) {
    throw std::logic_error("make_section: section orders violate |p1/k1| = |p2/k2|");
  }
  return s;
}

SectionData make_section(const GroupPtr& left, const GroupPtr& right,
                         const std::vector<std::pair<Elem, Elem>>& pairs) {
  GroupPtr product = direct_product(left, right);
  std::vector<Elem> elems;
  elems.reserve(pairs.size());
  for (auto [h, g] : pairs) {
    if (h < 0 || h >= left->order() || g < 0 || g >= right->order()) {
      throw GroupError("make_section: pair out of range");
    }
    elems.push_back(h * right->order() + g);
  }
  Subgroup e = product->make_subgroup(elems);
  return make_section(left, right, product, std::move(e));
}

SectionData star_product(const SectionData& t, const SectionData& e) {
  if (t.right.get() != e.left.get()) throw GroupError("star_product: middle groups differ");
  std::unordered_multimap<Elem, Elem> by_middle;
  for (Elem x : e.e.elements()) by_middle.emplace(e.first(x), e.second(x));
  GroupPtr product = direct_product(t.left, e.right);
  Bitset bits(product->order());
  for (Elem x : t.e.elements()) {
    Elem k = t.first(x);
    auto [lo, hi] = by_middle.equal_range(t.second(x));
    for (auto it = lo; it != hi; ++it) bits.set(k * e.right->order() + it->second);
  }
  return make_section(t.left, e.right, product, Subgroup(*product, std::move(bits)));
}

SectionData diagonal_section(const GroupPtr& g) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < g->order(); ++x) pairs.emplace_back(x, x);
  return make_section(g, g, pairs);
}

SectionData graph_section(const GroupHom& alpha) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < alpha.source->order(); ++x) pairs.emplace_back(alpha(x), x);
  return make_section(alpha.target, alpha.source, pairs);
}

SectionData restriction_section(const GroupHom& inclusion) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem h = 0; h < inclusion.source->order(); ++h) pairs.emplace_back(h, inclusion(h));
  return make_section(inclusion.source, inclusion.target, pairs);
}

SectionData induction_section(const GroupHom& inclusion) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem h = 0; h < inclusion.source->order(); ++h) pairs.emplace_back(inclusion(h), h);
  return make_section(inclusion.target, inclusion.source, pairs);
}

SectionData inflation_section(const GroupHom& projection) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem g = 0; g < projection.source->order(); ++g) pairs.emplace_back(g, projection(g));
  return make_section(projection.source, projection.target, pairs);
}

SectionData deflation_section(const GroupHom& projection) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem g = 0; g < projection.source->order(); ++g) pairs.emplace_back(projection(g), g);
  return make_section(projection.target, projection.source, pairs);
}

}  // namespace fbr
