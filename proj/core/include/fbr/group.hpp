#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fbr/bitset.hpp"

namespace fbr {

/// Dense element index; the identity is always 0.
using Elem = int;

class FiniteGroup;
class SubgroupLattice;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Thrown for malformed group data: bad tables, non-subgroups, failed homomorphism checks.
class GroupError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Subset of a finite group closed under multiplication and inversion.
///
/// Holds a non-owning pointer to its parent; the parent group must outlive it.
/// Two subgroups of the same parent are equal iff their element sets are equal.
class Subgroup {
public:
  Subgroup() = default;
  Subgroup(const FiniteGroup& parent, Bitset members);

  const FiniteGroup& parent() const { return *parent_; }
  int order() const { return static_cast<int>(elems_.size()); }
  bool contains(Elem x) const { return bits_.test(x); }
  const std::vector<Elem>& elements() const { return elems_; }
  const Bitset& bits() const { return bits_; }
  bool is_subgroup_of(const Subgroup& o) const { return bits_.is_subset_of(o.bits_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.bits_ == b.bits_;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems_ < b.elems_;
  }

private:
  const FiniteGroup* parent_ = nullptr;
  Bitset bits_;
  std::vector<Elem> elems_;
};

/// Finite group given by an immutable multiplication table.
class FiniteGroup {
public:
  /// Validates identity at index 0, associativity, and two-sided inverses.
  static GroupPtr from_table(std::string name, int order, std::vector<Elem> mul);
  /// Skips the O(n^3) associativity check; only for tables built from validated groups.
  static GroupPtr from_trusted_table(std::string name, int order, std::vector<Elem> mul);

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;
  ~FiniteGroup();

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem pow(Elem a, long long k) const;
  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv_[g]); }
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
  int element_order(Elem a) const { return elem_order_[a]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const;
  std::span<const Elem> table() const { return mul_; }

  Subgroup whole() const;
  Subgroup trivial() const;
  /// Smallest subgroup containing `gens`.
  Subgroup generate(std::span<const Elem> gens) const;
  /// Wraps an element set, throwing GroupError unless it is a subgroup.
  Subgroup make_subgroup(std::span<const Elem> elems) const;

  /// Subgroup lattice, built on first use and immutable afterwards.
  const SubgroupLattice& lattice() const;

private:
  FiniteGroup(std::string name, int order, std::vector<Elem> mul);

  std::string name_;
  int order_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<int> elem_order_;
  int exponent_ = 1;
  mutable std::once_flag lattice_once_;
  mutable std::unique_ptr<SubgroupLattice> lattice_;
};

/// Closure of `base` (a subgroup) together with extra generators.
Bitset close_subgroup(const FiniteGroup& g, const Bitset& base, std::span<const Elem> base_gens,
                      std::span<const Elem> extra);

Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// Subgroup generated by a and b.
Subgroup join(const Subgroup& a, const Subgroup& b);
/// gHg^-1
Subgroup conjugate(const Subgroup& h, Elem g);
Subgroup normalizer(const Subgroup& h);
bool is_normal(const Subgroup& n, const Subgroup& in);
/// [big : small]; throws if small is not contained in big.
int index(const Subgroup& big, const Subgroup& small);

/// Smallest normal subgroup of H with abelian quotient, generated by commutators.
Subgroup derived_subgroup(const Subgroup& h);
/// H^[n] = <H', h^n : h in H>, the smallest normal subgroup with abelian n-torsion quotient.
Subgroup n_residual(const Subgroup& h, int n);

/// One representative per H\G/K double coset, the minimal element index of each.
std::vector<Elem> double_coset_reps(const Subgroup& h, const Subgroup& k);
/// One representative per left coset gH, the minimal element index of each.
std::vector<Elem> left_coset_reps(const Subgroup& h);

/// Stabilizer of the coset h*H^[n] in N_G(H) under conjugation. Contains H.
Subgroup coset_stabilizer(const Subgroup& h_sub, Elem h, int n);

/// Group homomorphism between table groups, checked on construction.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
  bool is_injective() const;
  bool is_bijective() const;
  /// Image of a subgroup of the source.
  Subgroup image(const Subgroup& s) const;
  /// Full preimage of a subgroup of the target.
  Subgroup preimage(const Subgroup& t) const;
  Subgroup kernel() const;
};

GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<Elem> map);

/// The subgroup H <= G as a group in its own right (elements relabeled in
/// increasing parent order) with the inclusion into G.
GroupHom subgroup_as_group(const GroupPtr& g, const Subgroup& h);

/// G/N as a group with the canonical projection G -> G/N. Cosets are numbered by
/// their minimal element, so the identity coset is 0.
GroupHom quotient_group(const GroupPtr& g, const Subgroup& n);

/// H x G with (h, g) stored at index h*|G| + g.
GroupPtr direct_product(const GroupPtr& left, const GroupPtr& right);

/// Same group with elements permuted by `perm` (perm[0] must be 0); returns the
/// isomorphism from `g` onto the relabeled copy.
GroupHom relabeled_copy(const GroupPtr& g, const std::vector<Elem>& perm, std::string name);

}  // namespace fbr
