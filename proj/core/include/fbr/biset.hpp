#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <tuple>

#include "fbr/fibered_ring.hpp"
#include "fbr/section.hpp"

namespace fbr {

/// Shared rings keyed by (group, n, coefficient order). Holds its groups alive.
class RingCache {
public:
  RingPtr get(const GroupPtr& g, int n, int coeff_order = 0);

private:
  std::mutex mu_;
  std::map<std::tuple<const FiniteGroup*, int, int>, RingPtr> rings_;
};

// Elementary operations. `target` is the ring the result lives in; it must share
// the fiber and coefficient orders of x's ring.

/// res^G_H, for `inclusion`: H -> G and x over G.
FBElement restrict(const FBElement& x, const GroupHom& inclusion, const RingPtr& target);
/// ind^G_H, for `inclusion`: H -> G and x over H.
FBElement induce(const FBElement& x, const GroupHom& inclusion, const RingPtr& target);
/// inf^G_{G/N}, for `projection`: G -> G/N and x over G/N.
FBElement inflate(const FBElement& x, const GroupHom& projection, const RingPtr& target);
/// def^G_{G/N}, for `projection`: G -> G/N and x over G.
FBElement deflate(const FBElement& x, const GroupHom& projection, const RingPtr& target);
/// iso(α) for an isomorphism α: G -> H and x over G.
FBElement isomorph(const FBElement& x, const GroupHom& alpha, const RingPtr& target);

/// The isomorphism H -> gHg^-1 between two subgroups given by their inclusions into G.
GroupHom conjugation_hom(const GroupHom& from, const GroupHom& to, Elem g);
/// c_g from H to gHg^-1.
FBElement conjugate(const FBElement& x, const GroupHom& from, const GroupHom& to, Elem g,
                    const RingPtr& target);

/// Action of the transitive biset H x G / E on x over G, by the general
/// double-coset formula. The result lives over H = e.left.
FBElement transitive_biset_apply(const SectionData& e, const FBElement& x, const RingPtr& target);

/// An elementary biset or a general transitive one, acting from source() to target().
struct BisetSpec {
  enum class Kind { Restriction, Induction, Inflation, Deflation, Isomorphism, General };

  Kind kind = Kind::General;
  std::optional<GroupHom> map;  // inclusion, projection or isomorphism
  std::optional<SectionData> section;

  static BisetSpec restriction(GroupHom inclusion);
  static BisetSpec induction(GroupHom inclusion);
  static BisetSpec inflation(GroupHom projection);
  static BisetSpec deflation(GroupHom projection);
  static BisetSpec isomorphism(GroupHom alpha);
  static BisetSpec conjugation(const GroupHom& from, const GroupHom& to, Elem g);
  static BisetSpec general(SectionData e);

  /// Group the input lives over.
  GroupPtr source() const;
  /// Group the output lives over.
  GroupPtr target() const;
  /// E <= target x source realizing this biset.
  SectionData as_section() const;
  bool right_free() const;
  std::string name() const;
};

/// Applies b through its dedicated elementary formula, or the general engine for General.
FBElement apply(const BisetSpec& b, const FBElement& x, const RingPtr& target);

}  // namespace fbr
