#include "fbr/group.hpp"

#include <algorithm>
#include <numeric>

#include "fbr/lattice.hpp"

namespace fbr {

Subgroup::Subgroup(const FiniteGroup& parent, Bitset members)
    : parent_(&parent), bits_(std::move(members)), elems_(bits_.elements()) {}

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<Elem> mul)
    : name_(std::move(name)), order_(order), mul_(std::move(mul)) {}

FiniteGroup::~FiniteGroup() = default;

namespace {

void fill_derived(int order, const std::vector<Elem>& mul, std::vector<Elem>& inv,
                  std::vector<int>& elem_order, int& exponent) {
  inv.assign(static_cast<std::size_t>(order), -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (mul[static_cast<std::size_t>(a) * order + b] == 0) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0) throw GroupError("element " + std::to_string(a) + " has no inverse");
    if (mul[static_cast<std::size_t>(inv[a]) * order + a] != 0) {
      throw GroupError("inverse of element " + std::to_string(a) + " is not two-sided");
    }
  }
  elem_order.assign(static_cast<std::size_t>(order), 0);
  exponent = 1;
  for (int a = 0; a < order; ++a) {
    int k = 1;
    Elem x = a;
    while (x != 0) {
      x = mul[static_cast<std::size_t>(x) * order + a];
      ++k;
      if (k > order) throw GroupError("element " + std::to_string(a) + " has no finite order");
    }
    elem_order[a] = k;
    exponent = std::lcm(exponent, k);
  }
}

}  // namespace

GroupPtr FiniteGroup::from_table(std::string name, int order, std::vector<Elem> mul) {
  if (order < 1) throw GroupError("group order must be positive");
  if (mul.size() != static_cast<std::size_t>(order) * order) {
    throw GroupError("multiplication table must be order x order");
  }
  for (Elem x : mul) {
    if (x < 0 || x >= order) throw GroupError("table entry out of range: " + std::to_string(x));
  }
  auto at = [&](Elem a, Elem b) { return mul[static_cast<std::size_t>(a) * order + b]; };
  for (int a = 0; a < order; ++a) {
    if (at(0, a) != a || at(a, 0) != a) throw GroupError("element 0 is not the identity");
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const Elem ab = at(a, b);
      for (int c = 0; c < order; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          throw GroupError("table is not associative at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return from_trusted_table(std::move(name), order, std::move(mul));
}

GroupPtr FiniteGroup::from_trusted_table(std::string name, int order, std::vector<Elem> mul) {
  std::shared_ptr<FiniteGroup> g(new FiniteGroup(std::move(name), order, std::move(mul)));
  fill_derived(order, g->mul_, g->inv_, g->elem_order_, g->exponent_);
  return g;
}

Elem FiniteGroup::pow(Elem a, long long k) const {
  long long o = elem_order_[a];
  k %= o;
  if (k < 0) k += o;
  Elem r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Subgroup FiniteGroup::whole() const {
  Bitset b(order_);
  for (int i = 0; i < order_; ++i) b.set(i);
  return Subgroup(*this, std::move(b));
}

Subgroup FiniteGroup::trivial() const {
  Bitset b(order_);
  b.set(0);
  return Subgroup(*this, std::move(b));
}

Bitset close_subgroup(const FiniteGroup& g, const Bitset& base, std::span<const Elem> base_gens,
                      std::span<const Elem> extra) {
  Bitset bits = base;
  std::vector<Elem> gens(base_gens.begin(), base_gens.end());
  bool grew = false;
  for (Elem e : extra) {
    gens.push_back(e);
    if (!bits.test(e)) grew = true;
  }
  if (!grew) return bits;
  std::vector<Elem> list = bits.elements();
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Elem y : gens) {
      Elem z = g.mul(list[i], y);
      if (!bits.test(z)) {
        bits.set(z);
        list.push_back(z);
      }
    }
  }
  return bits;
}

Subgroup FiniteGroup::generate(std::span<const Elem> gens) const {
  Bitset base(order_);
  base.set(0);
  for (Elem e : gens) {
    if (e < 0 || e >= order_) throw GroupError("generator out of range");
  }
  return Subgroup(*this, close_subgroup(*this, base, {}, gens));
}

Subgroup FiniteGroup::make_subgroup(std::span<const Elem> elems) const {
  Bitset b(order_);
  for (Elem e : elems) {
    if (e < 0 || e >= order_) throw GroupError("element out of range");
    b.set(e);
  }
  if (!b.test(0)) throw GroupError("subset does not contain the identity");
  auto list = b.elements();
  for (Elem x : list) {
    if (!b.test(inv(x))) throw GroupError("subset is not closed under inverses");
    for (Elem y : list) {
      if (!b.test(mul(x, y))) throw GroupError("subset is not closed under multiplication");
    }
  }
  return Subgroup(*this, std::move(b));
}

const SubgroupLattice& FiniteGroup::lattice() const {
  std::call_once(lattice_once_, [this] { lattice_ = std::make_unique<SubgroupLattice>(*this); });
  return *lattice_;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  if (&a.parent() != &b.parent()) throw GroupError("intersection: different parents");
  return Subgroup(a.parent(), a.bits() & b.bits());
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  if (&a.parent() != &b.parent()) throw GroupError("join: different parents");
  return Subgroup(a.parent(), close_subgroup(a.parent(), a.bits(), a.elements(), b.elements()));
}

Subgroup conjugate(const Subgroup& h, Elem g) {
  const FiniteGroup& G = h.parent();
  Bitset b(G.order());
  for (Elem x : h.elements()) b.set(G.conj(g, x));
  return Subgroup(G, std::move(b));
}

Subgroup normalizer(const Subgroup& h) {
  const FiniteGroup& G = h.parent();
  Bitset b(G.order());
  for (Elem g = 0; g < G.order(); ++g) {
    bool fixes = std::all_of(h.elements().begin(), h.elements().end(),
                             [&](Elem x) { return h.contains(G.conj(g, x)); });
    if (fixes) b.set(g);
  }
  return Subgroup(G, std::move(b));
}

bool is_normal(const Subgroup& n, const Subgroup& in) {
  if (!n.is_subgroup_of(in)) return false;
  const FiniteGroup& G = n.parent();
  for (Elem g : in.elements())
    for (Elem x : n.elements())
      if (!n.contains(G.conj(g, x))) return false;
  return true;
}

int index(const Subgroup& big, const Subgroup& small) {
  if (!small.is_subgroup_of(big)) throw GroupError("index: not a subgroup");
  return big.order() / small.order();
}

Subgroup derived_subgroup(const Subgroup& h) {
  const FiniteGroup& G = h.parent();
  std::vector<Elem> comms;
  Bitset seen(G.order());
  for (Elem a : h.elements()) {
    for (Elem b : h.elements()) {
      Elem c = G.commutator(a, b);
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    }
  }
  return G.generate(comms);
}

Subgroup n_residual(const Subgroup& h, int n) {
  if (n < 1) throw GroupError("n_residual: n must be positive");
  const FiniteGroup& G = h.parent();
  Subgroup d = derived_subgroup(h);
  std::vector<Elem> powers;
  for (Elem x : h.elements()) {
    Elem p = G.pow(x, n);
    if (!d.contains(p)) powers.push_back(p);
  }
  return Subgroup(G, close_subgroup(G, d.bits(), d.elements(), powers));
}

std::vector<Elem> double_coset_reps(const Subgroup& h, const Subgroup& k) {
  const FiniteGroup& G = h.parent();
  Bitset covered(G.order());
  std::vector<Elem> reps;
  for (Elem g = 0; g < G.order(); ++g) {
    if (covered.test(g)) continue;
    reps.push_back(g);
    for (Elem x : h.elements()) {
      Elem xg = G.mul(x, g);
      for (Elem y : k.elements()) covered.set(G.mul(xg, y));
    }
  }
  return reps;
}

std::vector<Elem> left_coset_reps(const Subgroup& h) {
  const FiniteGroup& G = h.parent();
  Bitset covered(G.order());
  std::vector<Elem> reps;
  for (Elem g = 0; g < G.order(); ++g) {
    if (covered.test(g)) continue;
    reps.push_back(g);
    for (Elem x : h.elements()) covered.set(G.mul(g, x));
  }
  return reps;
}

Subgroup coset_stabilizer(const Subgroup& h_sub, Elem h, int n) {
  if (!h_sub.contains(h)) throw GroupError("coset_stabilizer: element not in subgroup");
  const FiniteGroup& G = h_sub.parent();
  Subgroup res = n_residual(h_sub, n);
  Subgroup norm = normalizer(h_sub);
  const Elem h_inv = G.inv(h);
  Bitset b(G.order());
  for (Elem g : norm.elements()) {
    if (res.contains(G.mul(h_inv, G.conj(g, h)))) b.set(g);
  }
  return Subgroup(G, std::move(b));
}

bool GroupHom::is_injective() const {
  int kernel_size = 0;
  for (Elem x = 0; x < source->order(); ++x)
    if (map[x] == 0) ++kernel_size;
  return kernel_size == 1;
}

bool GroupHom::is_bijective() const { return is_injective() && source->order() == target->order(); }

Subgroup GroupHom::image(const Subgroup& s) const {
  if (&s.parent() != source.get()) throw GroupError("image: subgroup of a different group");
  Bitset b(target->order());
  for (Elem x : s.elements()) b.set(map[x]);
  return Subgroup(*target, std::move(b));
}

Subgroup GroupHom::preimage(const Subgroup& t) const {
  if (&t.parent() != target.get()) throw GroupError("preimage: subgroup of a different group");
  Bitset b(source->order());
  for (Elem x = 0; x < source->order(); ++x)
    if (t.contains(map[x])) b.set(x);
  return Subgroup(*source, std::move(b));
}

Subgroup GroupHom::kernel() const { return preimage(target->trivial()); }

GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<Elem> map) {
  if (!source || !target) throw GroupError("make_hom: null group");
  if (static_cast<int>(map.size()) != source->order()) throw GroupError("make_hom: map size");
  for (Elem y : map) {
    if (y < 0 || y >= target->order()) throw GroupError("make_hom: value out of range");
  }
  for (Elem a = 0; a < source->order(); ++a) {
    for (Elem b = 0; b < source->order(); ++b) {
      if (map[source->mul(a, b)] != target->mul(map[a], map[b])) {
        throw GroupError("make_hom: map is not multiplicative");
      }
    }
  }
  return GroupHom{std::move(source), std::move(target), std::move(map)};
}

GroupHom subgroup_as_group(const GroupPtr& g, const Subgroup& h) {
  if (&h.parent() != g.get()) throw GroupError("subgroup_as_group: foreign subgroup");
  const auto& el = h.elements();
  const int k = h.order();
  std::vector<int> pos(static_cast<std::size_t>(g->order()), -1);
  for (int i = 0; i < k; ++i) pos[el[i]] = i;
  std::vector<Elem> mul(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) mul[static_cast<std::size_t>(i) * k + j] = pos[g->mul(el[i], el[j])];
  auto sub = FiniteGroup::from_trusted_table(g->name() + "<" + std::to_string(k) + ">", k, std::move(mul));
  return GroupHom{sub, g, el};
}

GroupHom quotient_group(const GroupPtr& g, const Subgroup& n) {
  if (&n.parent() != g.get()) throw GroupError("quotient_group: foreign subgroup");
  if (!is_normal(n, g->whole())) throw GroupError("quotient_group: subgroup is not normal");
  const int order = g->order();
  std::vector<Elem> proj(static_cast<std::size_t>(order), -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < order; ++x) {
    if (proj[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Elem y : n.elements()) proj[g->mul(x, y)] = id;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<Elem> mul(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) mul[static_cast<std::size_t>(i) * q + j] = proj[g->mul(reps[i], reps[j])];
  auto quo = FiniteGroup::from_trusted_table(g->name() + "/" + std::to_string(n.order()), q, std::move(mul));
  return GroupHom{g, quo, std::move(proj)};
}

GroupPtr direct_product(const GroupPtr& left, const GroupPtr& right) {
  const int a = left->order();
  const int b = right->order();
  const int n = a * b;
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      Elem h = left->mul(x / b, y / b);
      Elem g = right->mul(x % b, y % b);
      mul[static_cast<std::size_t>(x) * n + y] = h * b + g;
    }
  }
  return FiniteGroup::from_trusted_table(left->name() + "x" + right->name(), n, std::move(mul));
}

GroupHom relabeled_copy(const GroupPtr& g, const std::vector<Elem>& perm, std::string name) {
  const int n = g->order();
  if (static_cast<int>(perm.size()) != n || perm[0] != 0) {
    throw GroupError("relabeled_copy: permutation must fix the identity");
  }
  std::vector<Elem> inv(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n || inv[perm[i]] >= 0) throw GroupError("relabeled_copy: not a permutation");
    inv[perm[i]] = i;
  }
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) mul[static_cast<std::size_t>(x) * n + y] = perm[g->mul(inv[x], inv[y])];
  auto copy = FiniteGroup::from_trusted_table(std::move(name), n, std::move(mul));
  return make_hom(g, copy, perm);
}

}  // namespace fbr
