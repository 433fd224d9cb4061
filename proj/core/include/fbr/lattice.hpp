#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "fbr/group.hpp"

namespace fbr {

/// All subgroups of a finite group with conjugacy, normalizer, containment and
/// Möbius data.
///
/// Subgroups are indexed 0..size()-1 in increasing (order, sorted element list)
/// order, so index order is a linear extension of containment and the first
/// member of each conjugacy class is its lexicographically smallest one, which
/// is the class representative.
class SubgroupLattice {
public:
  explicit SubgroupLattice(const FiniteGroup& g);
  ~SubgroupLattice();

  const FiniteGroup& group() const { return *group_; }
  int size() const { return static_cast<int>(subs_.size()); }
  const Subgroup& at(int i) const { return subs_[i]; }
  /// A small generating set for subgroup i.
  const std::vector<Elem>& generators(int i) const { return gens_[i]; }

  /// -1 when the set is not a subgroup.
  int find(const Bitset& members) const;
  int index_of(const Subgroup& s) const;

  bool leq(int k, int h) const { return above_bits_[k].test(h); }
  /// Indices of all K <= H, increasing.
  const std::vector<int>& below(int h) const { return below_[h]; }
  /// Indices of all H >= K, increasing.
  const std::vector<int>& above(int k) const { return above_[k]; }

  /// Index of g H g^-1.
  int conj(Elem g, int h) const { return conj_[static_cast<std::size_t>(g) * subs_.size() + h]; }

  int class_count() const { return static_cast<int>(class_reps_.size()); }
  int class_of(int h) const { return class_of_[h]; }
  int class_rep(int c) const { return class_reps_[c]; }
  const std::vector<int>& class_members(int c) const { return classes_[c]; }
  const std::vector<int>& class_reps() const { return class_reps_; }
  bool is_rep(int h) const { return class_reps_[class_of_[h]] == h; }
  /// Some t with t * rep * t^-1 = H, where rep represents H's class.
  Elem transporter(int h) const { return transporter_[h]; }
  int normalizer(int h) const { return normalizer_[h]; }
  bool is_normal(int h) const { return normalizer_[h] == size() - 1; }

  /// μ(K, H) in the subgroup poset; throws unless K <= H.
  std::int64_t moebius(int k, int h) const;

private:
  const std::vector<std::int64_t>& moebius_row(int k) const;

  const FiniteGroup* group_;
  std::vector<Subgroup> subs_;
  std::vector<std::vector<Elem>> gens_;
  std::unordered_map<Bitset, int, BitsetHash> index_;
  std::vector<Bitset> above_bits_;
  std::vector<std::vector<int>> below_;
  std::vector<std::vector<int>> above_;
  std::vector<int> conj_;
  std::vector<int> class_of_;
  std::vector<int> class_reps_;
  std::vector<std::vector<int>> classes_;
  std::vector<Elem> transporter_;
  std::vector<int> normalizer_;

  std::unique_ptr<std::once_flag[]> moebius_once_;
  mutable std::vector<std::vector<std::int64_t>> moebius_rows_;
};

}  // namespace fbr
