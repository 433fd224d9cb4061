#pragma once

#include "fbr/group.hpp"

namespace fbr {

/// A subgroup E of a direct product H x G with its four section subgroups:
///   k1 = {h : (h,1) in E} ⊴ p1 = {h : (h,g) in E for some g} <= H
///   k2 = {g : (1,g) in E} ⊴ p2 = {g : (h,g) in E for some h} <= G
/// The product group is owned here, so `e` stays valid as long as this value lives.
struct SectionData {
  GroupPtr left;     // H
  GroupPtr right;    // G
  GroupPtr product;  // H x G, (h,g) at h*|G| + g
  Subgroup e;
  Subgroup p1, k1, p2, k2;

  Elem pair(Elem h, Elem g) const { return h * right->order() + g; }
  Elem first(Elem x) const { return x / right->order(); }
  Elem second(Elem x) const { return x % right->order(); }
  bool contains(Elem h, Elem g) const { return e.contains(pair(h, g)); }
  /// k2(E) = 1, i.e. the biset H x G / E is right-free.
  bool right_free() const { return k2.order() == 1; }
};

/// Builds E from its pairs, validating that it is a subgroup of H x G.
SectionData make_section(const GroupPtr& left, const GroupPtr& right,
                         const std::vector<std::pair<Elem, Elem>>& pairs);
SectionData make_section(const GroupPtr& left, const GroupPtr& right, const GroupPtr& product,
                         Subgroup e);

/// T ★ E = {(k,g) : (k,h) in T and (h,g) in E for some h}, for T <= K x H and E <= H x G.
SectionData star_product(const SectionData& t, const SectionData& e);

/// Δ(G) <= G x G.
SectionData diagonal_section(const GroupPtr& g);
/// {(α(g), g)} <= H x G for a homomorphism α: G -> H.
SectionData graph_section(const GroupHom& alpha);
/// {(h, ι(h))} <= H x G for an inclusion ι: H -> G; acts as restriction to H.
SectionData restriction_section(const GroupHom& inclusion);
/// {(ι(h), h)} <= G x H; acts as induction from H.
SectionData induction_section(const GroupHom& inclusion);
/// {(g, π(g))} <= G x G/N; acts as inflation.
SectionData inflation_section(const GroupHom& projection);
/// {(π(g), g)} <= G/N x G; acts as deflation.
SectionData deflation_section(const GroupHom& projection);

}  // namespace fbr
