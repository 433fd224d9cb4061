#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "fbr/cyclotomic.hpp"
#include "fbr/group.hpp"
#include "fbr/lattice.hpp"

namespace fbr {

/// A homomorphism φ: H -> Z/n (the value v stands for ζ_n^v).
///
/// Values are stored densely over the parent group, zero outside the domain.
struct FiberHom {
  int domain = -1;  // lattice index of H in the parent group
  std::vector<int> values;

  int operator()(Elem x) const { return values[x]; }
};

/// Hom(H, Z/n), enumerated by lifting characters of H/H^[n]; sorted by the value
/// vector on H's sorted elements. Exactly [H : H^[n]] entries.
std::vector<FiberHom> hom_group(const Subgroup& h, int n);

/// {g in N_G(H) : φ(g^-1 x g) = φ(x) for all x in H}.
Subgroup hom_stabilizer(const Subgroup& h, const FiberHom& phi);

/// Index pair into a ring's tables: subgroup `sub` (lattice index) and `hom`
/// (index into homs(sub)).
struct MonomialPair {
  int sub = -1;
  int hom = -1;
  friend bool operator==(const MonomialPair&, const MonomialPair&) = default;
};

/// Canonical representative of one orbit [H, φ]_G.
struct BasisEntry {
  MonomialPair pair;
  int stabilizer_order = 0;  // |N_G(H, φ)|
};

/// Canonical representative (H, hH^[n]) of one species / primitive idempotent.
/// H is a class representative and h the least element index over the orbit.
struct SpeciesPoint {
  int sub = -1;
  Elem h = 0;
  int stabilizer_order = 0;  // |N_G(H, hH^[n])|
  friend bool operator==(const SpeciesPoint&, const SpeciesPoint&) = default;
};

class FiberedRing;
using RingPtr = std::shared_ptr<const FiberedRing>;

/// Element of B^{C_n}_{Q(ζ_m)}(G): a sparse combination of canonical basis orbits.
class FBElement {
public:
  explicit FBElement(RingPtr ring);

  static FBElement basis(RingPtr ring, int index);
  /// The unit [G, 1]_G.
  static FBElement one(RingPtr ring);

  const FiberedRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const std::map<int, CycNum>& coeffs() const { return coeffs_; }
  CycNum coeff(int index) const;

  void add(int index, const CycNum& c);
  bool is_zero() const { return coeffs_.empty(); }
  bool is_integral() const;
  /// Least t >= 1 with t * this integral; 1 for zero.
  mpz_class denominator() const;

  FBElement operator-() const;
  FBElement& operator+=(const FBElement& o);
  FBElement& operator-=(const FBElement& o);
  FBElement& operator*=(const Rational& s);
  FBElement& operator*=(const CycNum& s);

  friend FBElement operator+(FBElement a, const FBElement& b) { return a += b; }
  friend FBElement operator-(FBElement a, const FBElement& b) { return a -= b; }
  friend FBElement operator*(const FBElement& a, const FBElement& b);
  friend FBElement operator*(FBElement a, const Rational& s) { return a *= s; }
  friend FBElement operator*(const Rational& s, FBElement a) { return a *= s; }

  friend bool operator==(const FBElement& a, const FBElement& b);

  /// e.g. "1/2*[2,1] - 1/2*[2,σ1]" using basis indices: "1/2*b1 - 1/2*b2".
  std::string to_string() const;

private:
  void check_ring(const FBElement& o) const;

  RingPtr ring_;
  std::map<int, CycNum> coeffs_;
};

/// Element of the ghost ring, stored at conjugacy class representatives K as
/// formal combinations over Hom(K, Z/n). Values at conjugates follow by transport.
class GhostElement {
public:
  explicit GhostElement(RingPtr ring);

  const FiberedRing& ring() const { return *ring_; }
  /// coords()[c][a]: coefficient of the a-th homomorphism of class c's representative.
  const std::vector<std::vector<CycNum>>& coords() const { return coords_; }
  CycNum& at(int cls, int hom) { return coords_[cls][hom]; }
  const CycNum& at(int cls, int hom) const { return coords_[cls][hom]; }

  bool is_integral() const;

  GhostElement& operator+=(const GhostElement& o);
  GhostElement& operator-=(const GhostElement& o);
  GhostElement& operator*=(const Rational& s);
  friend GhostElement operator+(GhostElement a, const GhostElement& b) { return a += b; }
  friend GhostElement operator-(GhostElement a, const GhostElement& b) { return a -= b; }
  friend GhostElement operator*(GhostElement a, const Rational& s) { return a *= s; }
  /// Coordinatewise product; at each K the group-ring product in Q(ζ)[Hom(K, C_n)].
  friend GhostElement operator*(const GhostElement& a, const GhostElement& b);
  friend bool operator==(const GhostElement& a, const GhostElement& b);

private:
  RingPtr ring_;
  std::vector<std::vector<CycNum>> coords_;
};

/// The fibered Burnside ring B^{C_n}(G) with coefficients in Q(ζ_m), n | m.
///
/// All tables are built at construction or lazily behind once-only barriers, so a
/// ring may be shared by concurrent readers.
class FiberedRing : public std::enable_shared_from_this<FiberedRing> {
public:
  /// `coeff_order` 0 means m = n.
  static RingPtr create(GroupPtr group, int n, int coeff_order = 0);

  FiberedRing(const FiberedRing&) = delete;
  FiberedRing& operator=(const FiberedRing&) = delete;
  ~FiberedRing();

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const SubgroupLattice& lattice() const { return *lattice_; }
  int n() const { return n_; }
  int coeff_order() const { return m_; }

  // Homomorphisms
  const std::vector<FiberHom>& homs(int sub) const { return homs_[sub]; }
  /// Index of the homomorphism on subgroup `sub` with the given dense values; -1 if none.
  int hom_index(int sub, const std::vector<int>& dense_values) const;
  template <class F>
  int hom_index_by(int sub, F&& eval) const;
  /// Index of the pointwise sum φ_a + φ_b in Hom(sub).
  int hom_sum(int sub, int a, int b) const;
  /// Lattice index of H^[n] and H' for subgroup `sub`.
  int residual(int sub) const { return residual_[sub]; }
  int derived(int sub) const { return derived_[sub]; }

  // Standard basis
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisEntry>& basis() const { return basis_; }
  /// Basis index of the orbit of (H_sub, homs(sub)[hom]).
  int canonical(int sub, int hom) const { return pair_orbit_[pair_offset_[sub] + hom]; }
  int canonical_values(int sub, const std::vector<int>& dense_values) const;
  Subgroup pair_stabilizer(int basis_index) const;

  /// Integer structure constants of [b_i][b_j] as (basis index, multiplicity).
  const std::vector<std::pair<int, std::int64_t>>& structure_constants(int i, int j) const;
  FBElement multiply(const FBElement& a, const FBElement& b) const;

  // Ghost ring and mark morphism
  /// Column of the mark matrix for basis j: (class, hom of rep, γ count).
  struct MarkEntry {
    int cls;
    int hom;
    std::int64_t count;
  };
  const std::vector<MarkEntry>& mark_column(int j) const;
  GhostElement mark(const FBElement& x) const;
  /// Number of ghost coordinates per class (|Hom(K_c, C_n)|).
  int ghost_width(int cls) const;

  // Species and idempotents
  const std::vector<SpeciesPoint>& points() const { return points_; }
  /// Canonical point index of (H_sub, hH^[n]) for any subgroup and any h in it.
  int point_index(int sub, Elem h) const;
  Subgroup point_stabilizer(int p) const;
  /// s_p(b_j) = sum over cosets gK with H <= gKg^-1 of ζ^{(gφ)(h)}.
  const CycNum& species_value(int p, int j) const;
  CycNum species_eval(int p, const FBElement& x) const;
  /// Primitive idempotent of point p, by the unrestricted Möbius sum.
  const FBElement& idempotent(int p) const;

  /// ζ_n^k as an element of Q(ζ_m).
  CycNum root(std::int64_t k) const;

private:
  FiberedRing(GroupPtr group, int n, int m);
  void build_homs();
  void build_basis();
  void build_points();
  std::int64_t hom_key(int sub, const std::vector<int>& values_on_gens) const;

  GroupPtr group_;
  const SubgroupLattice* lattice_;
  int n_;
  int m_;

  std::vector<std::vector<FiberHom>> homs_;
  std::vector<std::unordered_map<std::int64_t, int>> hom_lookup_;
  std::vector<int> residual_;
  std::vector<int> derived_;
  std::vector<int> pair_offset_;
  std::vector<int> pair_orbit_;
  std::vector<BasisEntry> basis_;
  std::vector<SpeciesPoint> points_;
  std::vector<std::vector<int>> coset_of_;   // per class rep: element -> coset id (-1 outside)
  std::vector<std::vector<int>> coset_point_;  // per class rep: coset id -> point

  std::unique_ptr<std::once_flag[]> sum_once_;
  mutable std::vector<std::vector<int>> hom_sum_;

  std::unique_ptr<std::once_flag[]> struct_once_;
  mutable std::vector<std::vector<std::vector<std::pair<int, std::int64_t>>>> struct_;

  std::unique_ptr<std::once_flag[]> mark_once_;
  mutable std::vector<std::vector<MarkEntry>> marks_;

  mutable std::once_flag species_once_;
  mutable std::vector<CycNum> species_;

  std::unique_ptr<std::once_flag[]> idem_once_;
  mutable std::vector<std::unique_ptr<FBElement>> idempotents_;
};

template <class F>
int FiberedRing::hom_index_by(int sub, F&& eval) const {
  const auto& gens = lattice_->generators(sub);
  std::vector<int> v;
  v.reserve(gens.size());
  for (Elem x : gens) v.push_back(((eval(x) % n_) + n_) % n_);
  auto it = hom_lookup_[sub].find(hom_key(sub, v));
  return it == hom_lookup_[sub].end() ? -1 : it->second;
}

/// Replaces n by gcd(n, exp(G)), which leaves Hom(H, C_n) unchanged for all H <= G.
int normalize_fiber_order(const FiniteGroup& g, int n);

// Free-function forms of the ring operations.
std::vector<BasisEntry> monomial_basis(const RingPtr& ring);
FBElement multiply(const FBElement& x, const FBElement& y);
GhostElement mark(const FBElement& x);
std::vector<SpeciesPoint> species_points(const RingPtr& ring);
CycNum species_eval(int point, const FBElement& x);
FBElement idempotent(const RingPtr& ring, int point);

}  // namespace fbr
