#include "fbr/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace fbr {

SubgroupLattice::SubgroupLattice(const FiniteGroup& g) : group_(&g) {
  const int n = g.order();

  // Cyclic subgroups first; every subgroup is a join of cyclic ones.
  std::vector<Bitset> found;
  std::vector<std::vector<Elem>> found_gens;
  std::unordered_map<Bitset, int, BitsetHash> seen;
  auto add = [&](Bitset b, std::vector<Elem> gens) {
    if (seen.emplace(b, static_cast<int>(found.size())).second) {
      found.push_back(std::move(b));
      found_gens.push_back(std::move(gens));
    }
  };
  Bitset trivial(n);
  trivial.set(0);
  add(trivial, {});
  std::vector<Elem> cyclic_gens;
  for (Elem x = 1; x < n; ++x) {
    Elem one[] = {x};
    Bitset c = close_subgroup(g, trivial, {}, one);
    if (!seen.contains(c)) cyclic_gens.push_back(x);
    add(std::move(c), {x});
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem c : cyclic_gens) {
      if (found[i].test(c)) continue;
      Elem extra[] = {c};
      Bitset joined = close_subgroup(g, found[i], found_gens[i], extra);
      if (seen.contains(joined)) continue;
      std::vector<Elem> gens = found_gens[i];
      gens.push_back(c);
      add(std::move(joined), std::move(gens));
    }
  }

  std::vector<int> order_idx(found.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::vector<Subgroup> tmp;
  tmp.reserve(found.size());
  for (auto& b : found) tmp.emplace_back(g, b);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) { return tmp[a] < tmp[b]; });
  for (int i : order_idx) {
    subs_.push_back(tmp[i]);
    gens_.push_back(found_gens[i]);
  }
  const int s = size();
  for (int i = 0; i < s; ++i) index_.emplace(subs_[i].bits(), i);

  above_bits_.assign(static_cast<std::size_t>(s), Bitset(s));
  below_.assign(static_cast<std::size_t>(s), {});
  above_.assign(static_cast<std::size_t>(s), {});
  for (int k = 0; k < s; ++k) {
    for (int h = k; h < s; ++h) {
      if (subs_[k].bits().is_subset_of(subs_[h].bits())) {
        above_bits_[k].set(h);
        above_[k].push_back(h);
        below_[h].push_back(k);
      }
    }
  }

  conj_.assign(static_cast<std::size_t>(n) * s, -1);
  for (Elem x = 0; x < n; ++x) {
    for (int h = 0; h < s; ++h) {
      Bitset b(n);
      for (Elem y : subs_[h].elements()) b.set(g.conj(x, y));
      conj_[static_cast<std::size_t>(x) * s + h] = index_.at(b);
    }
  }

  class_of_.assign(static_cast<std::size_t>(s), -1);
  transporter_.assign(static_cast<std::size_t>(s), -1);
  normalizer_.assign(static_cast<std::size_t>(s), -1);
  for (int h = 0; h < s; ++h) {
    if (class_of_[h] >= 0) continue;
    const int c = class_count();
    class_reps_.push_back(h);
    std::vector<int> members;
    for (Elem x = 0; x < n; ++x) {
      int j = conj(x, h);
      if (class_of_[j] < 0) {
        class_of_[j] = c;
        transporter_[j] = x;
        members.push_back(j);
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
  }
  for (int h = 0; h < s; ++h) {
    Bitset b(n);
    for (Elem x = 0; x < n; ++x)
      if (conj(x, h) == h) b.set(x);
    normalizer_[h] = index_.at(b);
  }

  moebius_once_ = std::make_unique<std::once_flag[]>(static_cast<std::size_t>(s));
  moebius_rows_.resize(static_cast<std::size_t>(s));
}

SubgroupLattice::~SubgroupLattice() = default;

int SubgroupLattice::find(const Bitset& members) const {
  auto it = index_.find(members);
  return it == index_.end() ? -1 : it->second;
}

int SubgroupLattice::index_of(const Subgroup& sub) const {
  if (&sub.parent() != group_) throw GroupError("index_of: subgroup of a different group");
  int i = find(sub.bits());
  if (i < 0) throw GroupError("index_of: not a subgroup");
  return i;
}

const std::vector<std::int64_t>& SubgroupLattice::moebius_row(int k) const {
  std::call_once(moebius_once_[k], [this, k] {
    std::vector<std::int64_t> row(static_cast<std::size_t>(size()), 0);
    const auto& up = above_[k];
    for (int h : up) {
      if (h == k) {
        row[h] = 1;
        continue;
      }
      std::int64_t sum = 0;
      for (int l : up) {
        if (l >= h) break;
        if (leq(l, h)) sum += row[l];
      }
      row[h] = -sum;
    }
    moebius_rows_[k] = std::move(row);
  });
  return moebius_rows_[k];
}

std::int64_t SubgroupLattice::moebius(int k, int h) const {
  if (!leq(k, h)) throw GroupError("moebius: K is not contained in H");
  return moebius_row(k)[h];
}

}  // namespace fbr
