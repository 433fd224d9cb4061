#include "fbr/fibered_ring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace fbr {

// ---------------------------------------------------------------------------
// Homomorphisms

std::vector<FiberHom> hom_group(const Subgroup& h, int n) {
  if (n < 1) throw GroupError("hom_group: n must be positive");
  const FiniteGroup& G = h.parent();
  const int domain = G.lattice().index_of(h);
  const Subgroup res = n_residual(h, n);

  // Greedy generators of H modulo H^[n], with the order of each in the quotient.
  std::vector<Elem> gens;
  std::vector<int> gen_order;
  Bitset span = res.bits();
  std::vector<Elem> span_gens = res.elements();
  for (Elem x : h.elements()) {
    if (span.test(x)) continue;
    int k = 1;
    for (Elem y = x; !res.contains(y); y = G.mul(y, x)) ++k;
    gens.push_back(x);
    gen_order.push_back(k);
    Elem extra[] = {x};
    span = close_subgroup(G, span, span_gens, extra);
    span_gens.push_back(x);
  }

  // Admissible values per generator: v with order * v = 0 mod n.
  std::vector<std::vector<int>> choices;
  for (int o : gen_order) {
    std::vector<int> c;
    for (int v = 0; v < n; ++v)
      if ((static_cast<long long>(o) * v) % n == 0) c.push_back(v);
    choices.push_back(std::move(c));
  }

  std::vector<FiberHom> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  const std::vector<Elem>& el = h.elements();
  while (true) {
    std::vector<int> values(static_cast<std::size_t>(G.order()), 0);
    std::vector<char> set(static_cast<std::size_t>(G.order()), 0);
    std::vector<Elem> queue;
    for (Elem r : res.elements()) {
      set[r] = 1;
      queue.push_back(r);
    }
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Elem z = G.mul(queue[i], gens[k]);
        int v = (values[queue[i]] + choices[k][pick[k]]) % n;
        if (!set[z]) {
          set[z] = 1;
          values[z] = v;
          queue.push_back(z);
        } else if (values[z] != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      for (Elem a : el) {
        for (Elem b : el) {
          if (values[G.mul(a, b)] != (values[a] + values[b]) % n) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
    }
    if (ok) out.push_back(FiberHom{domain, std::move(values)});

    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }

  if (static_cast<int>(out.size()) * res.order() != h.order()) {
    throw std::logic_error("hom_group: |Hom(H, C_n)| != [H : H^[n]]");
  }
  std::sort(out.begin(), out.end(), [&](const FiberHom& a, const FiberHom& b) {
    for (Elem x : el) {
      if (a.values[x] != b.values[x]) return a.values[x] < b.values[x];
    }
    return false;
  });
  return out;
}

Subgroup hom_stabilizer(const Subgroup& h, const FiberHom& phi) {
  const FiniteGroup& G = h.parent();
  Subgroup norm = normalizer(h);
  Bitset b(G.order());
  for (Elem g : norm.elements()) {
    const Elem gi = G.inv(g);
    bool fixed = std::all_of(h.elements().begin(), h.elements().end(),
                             [&](Elem x) { return phi(G.conj(gi, x)) == phi(x); });
    if (fixed) b.set(g);
  }
  return Subgroup(G, std::move(b));
}

int normalize_fiber_order(const FiniteGroup& g, int n) {
  if (n < 1) throw GroupError("fiber order must be positive");
  return std::gcd(n, g.exponent());
}

// ---------------------------------------------------------------------------
// FiberedRing construction

RingPtr FiberedRing::create(GroupPtr group, int n, int coeff_order) {
  if (!group) throw GroupError("FiberedRing: null group");
  if (n < 1) throw GroupError("FiberedRing: fiber order must be positive");
  int m = coeff_order == 0 ? n : coeff_order;
  if (m < 1 || m % n != 0) {
    throw GroupError("FiberedRing: coefficient order must be a multiple of n");
  }
  return RingPtr(new FiberedRing(std::move(group), n, m));
}

FiberedRing::FiberedRing(GroupPtr group, int n, int m)
    : group_(std::move(group)), lattice_(&group_->lattice()), n_(n), m_(m) {
  build_homs();
  build_basis();
  build_points();
  const int s = lattice_->size();
  sum_once_ = std::make_unique<std::once_flag[]>(static_cast<std::size_t>(s));
  hom_sum_.resize(static_cast<std::size_t>(s));
  struct_once_ = std::make_unique<std::once_flag[]>(basis_.size());
  struct_.resize(basis_.size());
  mark_once_ = std::make_unique<std::once_flag[]>(basis_.size());
  marks_.resize(basis_.size());
  idem_once_ = std::make_unique<std::once_flag[]>(points_.size());
  idempotents_.resize(points_.size());
}

FiberedRing::~FiberedRing() = default;

std::int64_t FiberedRing::hom_key(int sub, const std::vector<int>& values_on_gens) const {
  (void)sub;
  std::int64_t key = 0;
  for (auto it = values_on_gens.rbegin(); it != values_on_gens.rend(); ++it) key = key * n_ + *it;
  return key;
}

void FiberedRing::build_homs() {
  const int s = lattice_->size();
  homs_.resize(static_cast<std::size_t>(s));
  hom_lookup_.resize(static_cast<std::size_t>(s));
  residual_.resize(static_cast<std::size_t>(s));
  derived_.resize(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) {
    const Subgroup& h = lattice_->at(i);
    const auto& gens = lattice_->generators(i);
    double bits = static_cast<double>(gens.size()) * std::log2(static_cast<double>(n_) + 1.0);
    if (bits > 62.0) throw GroupError("FiberedRing: fiber order too large for this group");
    homs_[i] = hom_group(h, n_);
    for (std::size_t a = 0; a < homs_[i].size(); ++a) {
      std::vector<int> v;
      for (Elem x : gens) v.push_back(homs_[i][a].values[x]);
      hom_lookup_[i].emplace(hom_key(i, v), static_cast<int>(a));
    }
    residual_[i] = lattice_->index_of(n_residual(h, n_));
    derived_[i] = lattice_->index_of(derived_subgroup(h));
  }
}

void FiberedRing::build_basis() {
  const int s = lattice_->size();
  const FiniteGroup& G = *group_;
  pair_offset_.assign(static_cast<std::size_t>(s) + 1, 0);
  for (int i = 0; i < s; ++i) pair_offset_[i + 1] = pair_offset_[i] + static_cast<int>(homs_[i].size());
  pair_orbit_.assign(static_cast<std::size_t>(pair_offset_[s]), -1);

  for (int c = 0; c < lattice_->class_count(); ++c) {
    const int r = lattice_->class_rep(c);
    const Subgroup& norm = lattice_->at(lattice_->normalizer(r));
    for (int a = 0; a < static_cast<int>(homs_[r].size()); ++a) {
      if (pair_orbit_[pair_offset_[r] + a] >= 0) continue;
      const int b = static_cast<int>(basis_.size());
      const FiberHom& phi = homs_[r][a];
      int orbit = 0;
      for (Elem g : norm.elements()) {
        const Elem gi = G.inv(g);
        int img = hom_index_by(r, [&](Elem x) { return phi(G.conj(gi, x)); });
        int& slot = pair_orbit_[pair_offset_[r] + img];
        if (slot < 0) {
          slot = b;
          ++orbit;
        }
      }
      basis_.push_back(BasisEntry{MonomialPair{r, a}, norm.order() / orbit});
    }
    for (int sub : lattice_->class_members(c)) {
      if (sub == r) continue;
      const Elem t = lattice_->transporter(sub);
      for (int a = 0; a < static_cast<int>(homs_[sub].size()); ++a) {
        const FiberHom& psi = homs_[sub][a];
        int pulled = hom_index_by(r, [&](Elem x) { return psi(G.conj(t, x)); });
        pair_orbit_[pair_offset_[sub] + a] = pair_orbit_[pair_offset_[r] + pulled];
      }
    }
  }
}

void FiberedRing::build_points() {
  const FiniteGroup& G = *group_;
  const int classes = lattice_->class_count();
  coset_of_.assign(static_cast<std::size_t>(classes), {});
  coset_point_.assign(static_cast<std::size_t>(classes), {});
  for (int c = 0; c < classes; ++c) {
    const int r = lattice_->class_rep(c);
    const Subgroup& h = lattice_->at(r);
    const Subgroup& res = lattice_->at(residual_[r]);
    auto& coset = coset_of_[c];
    coset.assign(static_cast<std::size_t>(G.order()), -1);
    int ids = 0;
    for (Elem x : h.elements()) {
      if (coset[x] >= 0) continue;
      for (Elem y : res.elements()) coset[G.mul(x, y)] = ids;
      ++ids;
    }
    auto& to_point = coset_point_[c];
    to_point.assign(static_cast<std::size_t>(ids), -1);
    const Subgroup& norm = lattice_->at(lattice_->normalizer(r));
    for (Elem x : h.elements()) {
      if (to_point[coset[x]] >= 0) continue;
      const int p = static_cast<int>(points_.size());
      int orbit = 0;
      for (Elem g : norm.elements()) {
        int& slot = to_point[coset[G.conj(g, x)]];
        if (slot < 0) {
          slot = p;
          ++orbit;
        }
      }
      points_.push_back(SpeciesPoint{r, x, norm.order() / orbit});
    }
  }
}

// ---------------------------------------------------------------------------
// Lookups

int FiberedRing::hom_index(int sub, const std::vector<int>& dense_values) const {
  if (static_cast<int>(dense_values.size()) != group_->order()) return -1;
  int idx = hom_index_by(sub, [&](Elem x) { return dense_values[x]; });
  if (idx < 0) return -1;
  for (Elem x : lattice_->at(sub).elements()) {
    if (((dense_values[x] % n_) + n_) % n_ != homs_[sub][idx].values[x]) return -1;
  }
  return idx;
}

int FiberedRing::hom_sum(int sub, int a, int b) const {
  std::call_once(sum_once_[sub], [this, sub] {
    const auto& hs = homs_[sub];
    const int k = static_cast<int>(hs.size());
    std::vector<int> table(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        table[static_cast<std::size_t>(i) * k + j] =
            hom_index_by(sub, [&](Elem x) { return hs[i].values[x] + hs[j].values[x]; });
    hom_sum_[sub] = std::move(table);
  });
  return hom_sum_[sub][static_cast<std::size_t>(a) * homs_[sub].size() + b];
}

int FiberedRing::canonical_values(int sub, const std::vector<int>& dense_values) const {
  int a = hom_index(sub, dense_values);
  if (a < 0) throw GroupError("canonical_values: values do not define a homomorphism");
  return canonical(sub, a);
}

Subgroup FiberedRing::pair_stabilizer(int basis_index) const {
  const auto& e = basis_.at(basis_index);
  return hom_stabilizer(lattice_->at(e.pair.sub), homs_[e.pair.sub][e.pair.hom]);
}

int FiberedRing::point_index(int sub, Elem h) const {
  if (!lattice_->at(sub).contains(h)) throw GroupError("point_index: element not in subgroup");
  const int c = lattice_->class_of(sub);
  const Elem t = lattice_->transporter(sub);
  const Elem pulled = group_->conj(group_->inv(t), h);
  return coset_point_[c][coset_of_[c][pulled]];
}

Subgroup FiberedRing::point_stabilizer(int p) const {
  const auto& pt = points_.at(p);
  return coset_stabilizer(lattice_->at(pt.sub), pt.h, n_);
}

CycNum FiberedRing::root(std::int64_t k) const {
  return CycNum::root_of_unity(m_, k * (m_ / n_));
}

int FiberedRing::ghost_width(int cls) const {
  return static_cast<int>(homs_[lattice_->class_rep(cls)].size());
}

// ---------------------------------------------------------------------------
// Multiplication

const std::vector<std::pair<int, std::int64_t>>& FiberedRing::structure_constants(int i, int j) const {
  std::call_once(struct_once_[i], [this, i] {
    const FiniteGroup& G = *group_;
    const auto& bi = basis_[i];
    const Subgroup& h = lattice_->at(bi.pair.sub);
    const FiberHom& phi = homs_[bi.pair.sub][bi.pair.hom];
    std::vector<std::vector<std::pair<int, std::int64_t>>> row(basis_.size());
    for (std::size_t j2 = 0; j2 < basis_.size(); ++j2) {
      const auto& bj = basis_[j2];
      const Subgroup& k = lattice_->at(bj.pair.sub);
      const FiberHom& psi = homs_[bj.pair.sub][bj.pair.hom];
      std::map<int, std::int64_t> acc;
      for (Elem g : double_coset_reps(h, k)) {
        const Elem gi = G.inv(g);
        const int gk = lattice_->conj(g, bj.pair.sub);
        const int inter = lattice_->find(h.bits() & lattice_->at(gk).bits());
        int a = hom_index_by(inter, [&](Elem x) { return phi(x) + psi(G.conj(gi, x)); });
        ++acc[canonical(inter, a)];
      }
      row[j2].assign(acc.begin(), acc.end());
    }
    struct_[i] = std::move(row);
  });
  return struct_[i][j];
}

FBElement FiberedRing::multiply(const FBElement& a, const FBElement& b) const {
  if (a.ring_ptr().get() != this || b.ring_ptr().get() != this) {
    throw GroupError("multiply: elements of a different ring");
  }
  std::map<int, CycNum> acc;
  for (const auto& [i, x] : a.coeffs()) {
    for (const auto& [j, y] : b.coeffs()) {
      CycNum xy = x * y;
      for (const auto& [k, c] : structure_constants(i, j)) {
        auto it = acc.find(k);
        CycNum term = xy * Rational(c);
        if (it == acc.end()) {
          acc.emplace(k, std::move(term));
        } else {
          it->second += term;
        }
      }
    }
  }
  FBElement out(a.ring_ptr());
  for (auto& [k, v] : acc) out.add(k, v);
  return out;
}

// ---------------------------------------------------------------------------
// Marks

const std::vector<FiberedRing::MarkEntry>& FiberedRing::mark_column(int j) const {
  std::call_once(mark_once_[j], [this, j] {
    const FiniteGroup& G = *group_;
    const auto& bj = basis_[j];
    const Subgroup& h = lattice_->at(bj.pair.sub);
    const FiberHom& phi = homs_[bj.pair.sub][bj.pair.hom];
    std::map<std::pair<int, int>, std::int64_t> acc;
    for (Elem g : left_coset_reps(h)) {
      const Elem gi = G.inv(g);
      const int gh = lattice_->conj(g, bj.pair.sub);
      for (int c = 0; c < lattice_->class_count(); ++c) {
        const int k = lattice_->class_rep(c);
        if (!lattice_->leq(k, gh)) continue;
        int a = hom_index_by(k, [&](Elem x) { return phi(G.conj(gi, x)); });
        ++acc[{c, a}];
      }
    }
    std::vector<MarkEntry> col;
    for (const auto& [key, cnt] : acc) col.push_back(MarkEntry{key.first, key.second, cnt});
    marks_[j] = std::move(col);
  });
  return marks_[j];
}

GhostElement FiberedRing::mark(const FBElement& x) const {
  if (x.ring_ptr().get() != this) throw GroupError("mark: element of a different ring");
  GhostElement out(x.ring_ptr());
  for (const auto& [j, coeff] : x.coeffs()) {
    for (const auto& e : mark_column(j)) out.at(e.cls, e.hom) += coeff * Rational(e.count);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Species and idempotents

const CycNum& FiberedRing::species_value(int p, int j) const {
  std::call_once(species_once_, [this] {
    const FiniteGroup& G = *group_;
    const std::size_t rk = basis_.size();
    std::vector<CycNum> table;
    table.reserve(points_.size() * rk);
    for (const auto& pt : points_) {
      for (const auto& be : basis_) {
        const FiberHom& phi = homs_[be.pair.sub][be.pair.hom];
        std::vector<std::int64_t> bins(static_cast<std::size_t>(n_), 0);
        for (Elem g : left_coset_reps(lattice_->at(be.pair.sub))) {
          if (!lattice_->leq(pt.sub, lattice_->conj(g, be.pair.sub))) continue;
          int v = phi(G.conj(G.inv(g), pt.h));
          ++bins[v];
        }
        CycNum value(m_);
        for (int e = 0; e < n_; ++e) {
          if (bins[e]) value.add_root(Rational(bins[e]), static_cast<std::int64_t>(e) * (m_ / n_));
        }
        table.push_back(std::move(value));
      }
    }
    species_ = std::move(table);
  });
  return species_[static_cast<std::size_t>(p) * basis_.size() + j];
}

CycNum FiberedRing::species_eval(int p, const FBElement& x) const {
  if (x.ring_ptr().get() != this) throw GroupError("species_eval: element of a different ring");
  CycNum out(m_);
  for (const auto& [j, c] : x.coeffs()) out += c * species_value(p, j);
  return out;
}

const FBElement& FiberedRing::idempotent(int p) const {
  std::call_once(idem_once_[p], [this, p] {
    const auto& pt = points_[p];
    const int r = pt.sub;
    const Subgroup& h = lattice_->at(r);
    const int res_order = lattice_->at(residual_[r]).order();
    const auto& hs = homs_[r];
    std::map<int, std::vector<std::int64_t>> acc;
    for (int k : lattice_->below(r)) {
      const std::int64_t mu = lattice_->moebius(k, r);
      if (mu == 0) continue;
      const std::int64_t weight = static_cast<std::int64_t>(lattice_->at(k).order()) * mu;
      for (const auto& phi : hs) {
        int a = hom_index_by(k, [&](Elem x) { return phi(x); });
        int b = canonical(k, a);
        auto& bins = acc[b];
        if (bins.empty()) bins.assign(static_cast<std::size_t>(n_), 0);
        bins[(n_ - phi(pt.h)) % n_] += weight;
      }
    }
    const Rational scale(res_order, static_cast<std::int64_t>(pt.stabilizer_order) * h.order());
    FBElement e(shared_from_this());
    for (const auto& [b, bins] : acc) {
      CycNum c(m_);
      for (int v = 0; v < n_; ++v) {
        if (bins[v]) c.add_root(Rational(bins[v]), static_cast<std::int64_t>(v) * (m_ / n_));
      }
      c *= scale;
      e.add(b, c);
    }
    idempotents_[p] = std::make_unique<FBElement>(std::move(e));
  });
  return *idempotents_[p];
}

// ---------------------------------------------------------------------------
// FBElement

FBElement::FBElement(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw GroupError("FBElement: null ring");
}

FBElement FBElement::basis(RingPtr ring, int index) {
  if (index < 0 || index >= ring->rank()) throw GroupError("FBElement::basis: index out of range");
  FBElement e(ring);
  e.coeffs_.emplace(index, CycNum::one(ring->coeff_order()));
  return e;
}

FBElement FBElement::one(RingPtr ring) {
  const auto& lat = ring->lattice();
  const int top = lat.size() - 1;
  int idx = ring->canonical(top, 0);  // the trivial homomorphism sorts first
  return basis(std::move(ring), idx);
}

CycNum FBElement::coeff(int index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? CycNum::zero(ring_->coeff_order()) : it->second;
}

void FBElement::add(int index, const CycNum& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(index);
  if (it == coeffs_.end()) {
    coeffs_.emplace(index, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

bool FBElement::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second.is_integral(); });
}

mpz_class FBElement::denominator() const {
  mpz_class d = 1;
  for (const auto& [k, c] : coeffs_) {
    mpz_class cd = c.denominator();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), cd.get_mpz_t());
  }
  return d;
}

void FBElement::check_ring(const FBElement& o) const {
  if (ring_.get() != o.ring_.get()) throw GroupError("FBElement: elements of different rings");
}

FBElement FBElement::operator-() const {
  FBElement r(ring_);
  for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
  return r;
}

FBElement& FBElement::operator+=(const FBElement& o) {
  check_ring(o);
  for (const auto& [k, c] : o.coeffs_) add(k, c);
  return *this;
}

FBElement& FBElement::operator-=(const FBElement& o) {
  check_ring(o);
  for (const auto& [k, c] : o.coeffs_) add(k, -c);
  return *this;
}

FBElement& FBElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, c] : coeffs_) c *= s;
  return *this;
}

FBElement& FBElement::operator*=(const CycNum& s) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    it->second *= s;
    if (it->second.is_zero()) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

FBElement operator*(const FBElement& a, const FBElement& b) { return a.ring().multiply(a, b); }

bool operator==(const FBElement& a, const FBElement& b) {
  return a.ring_.get() == b.ring_.get() && a.coeffs_ == b.coeffs_;
}

std::string FBElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")*b" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// GhostElement

GhostElement::GhostElement(RingPtr ring) : ring_(std::move(ring)) {
  const auto& lat = ring_->lattice();
  coords_.resize(static_cast<std::size_t>(lat.class_count()));
  for (int c = 0; c < lat.class_count(); ++c) {
    coords_[c].assign(static_cast<std::size_t>(ring_->ghost_width(c)), CycNum::zero(ring_->coeff_order()));
  }
}

bool GhostElement::is_integral() const {
  for (const auto& row : coords_)
    for (const auto& v : row)
      if (!v.is_integral()) return false;
  return true;
}

GhostElement& GhostElement::operator+=(const GhostElement& o) {
  if (ring_.get() != o.ring_.get()) throw GroupError("GhostElement: different rings");
  for (std::size_t c = 0; c < coords_.size(); ++c)
    for (std::size_t a = 0; a < coords_[c].size(); ++a) coords_[c][a] += o.coords_[c][a];
  return *this;
}

GhostElement& GhostElement::operator-=(const GhostElement& o) {
  if (ring_.get() != o.ring_.get()) throw GroupError("GhostElement: different rings");
  for (std::size_t c = 0; c < coords_.size(); ++c)
    for (std::size_t a = 0; a < coords_[c].size(); ++a) coords_[c][a] -= o.coords_[c][a];
  return *this;
}

GhostElement& GhostElement::operator*=(const Rational& s) {
  for (auto& row : coords_)
    for (auto& v : row) v *= s;
  return *this;
}

GhostElement operator*(const GhostElement& a, const GhostElement& b) {
  if (a.ring_.get() != b.ring_.get()) throw GroupError("GhostElement: different rings");
  const FiberedRing& R = *a.ring_;
  GhostElement out(a.ring_);
  for (std::size_t c = 0; c < a.coords_.size(); ++c) {
    const int rep = R.lattice().class_rep(static_cast<int>(c));
    const auto& x = a.coords_[c];
    const auto& y = b.coords_[c];
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j].is_zero()) continue;
        out.coords_[c][R.hom_sum(rep, static_cast<int>(i), static_cast<int>(j))] += x[i] * y[j];
      }
    }
  }
  return out;
}

bool operator==(const GhostElement& a, const GhostElement& b) {
  return a.ring_.get() == b.ring_.get() && a.coords_ == b.coords_;
}

// ---------------------------------------------------------------------------
// Free functions

std::vector<BasisEntry> monomial_basis(const RingPtr& ring) { return ring->basis(); }
FBElement multiply(const FBElement& x, const FBElement& y) { return x.ring().multiply(x, y); }
GhostElement mark(const FBElement& x) { return x.ring().mark(x); }
std::vector<SpeciesPoint> species_points(const RingPtr& ring) { return ring->points(); }
CycNum species_eval(int point, const FBElement& x) { return x.ring().species_eval(point, x); }
FBElement idempotent(const RingPtr& ring, int point) { return ring->idempotent(point); }

}  // namespace fbr
