#pragma once

#include <string>
#include <vector>

#include "fbr/biset.hpp"

namespace fbr {

/// Homomorphism C_t -> C_n, ζ_t -> ζ_n^k; on exponents v -> k*v mod n.
struct FiberMap {
  int t = 1;
  int n = 1;
  int k = 0;

  /// Validates k*t = 0 mod n and reduces k into [0, n).
  static FiberMap make(int t, int n, int k);
  /// i_{t,n}: C_t -> C_n, requires t | n.
  static FiberMap inclusion(int t, int n);
  /// π_{n,t}: C_n -> C_t, ζ_n -> ζ_t, requires t | n.
  static FiberMap projection(int n, int t);
  static FiberMap identity(int n) { return make(n, n, 1); }
  /// Parses "t,n,k".
  static FiberMap parse(const std::string& text);

  int apply(int v) const { return static_cast<int>((static_cast<long long>(k) * v) % n); }
  std::string to_string() const;
  friend bool operator==(const FiberMap&, const FiberMap&) = default;
};

/// f∘g (apply g first); requires g.n == f.t.
FiberMap compose(const FiberMap& f, const FiberMap& g);

/// [H, φ] -> [H, f∘φ]. `target` is over the same group with fiber f.n; its
/// coefficient order must be a multiple of x's.
FBElement fiber_change(const FiberMap& f, const FBElement& x, const RingPtr& target);

/// f restricted to the exp(G)-torsion of C_t is injective.
bool fiber_change_injective(const FiberMap& f, const FiniteGroup& g);
/// Additionally onto the exp(G)-torsion of C_n.
bool fiber_change_iso(const FiberMap& f, const FiniteGroup& g);

/// Rings over the source and target groups of a biset, at both fibers.
struct NaturalitySquare {
  RingPtr source_t;
  RingPtr target_t;
  RingPtr source_n;
  RingPtr target_n;
};

/// b(f(x)) - f(b(x)) for x over b's source group at fiber f.t.
FBElement naturality_defect(const FiberMap& f, const BisetSpec& b, const FBElement& x,
                            const NaturalitySquare& rings);

/// Point q of the fiber-n ring pulled back along f: (K, k^j K^[t]) with j = k*t/n.
int pullback_point(const FiberMap& f, const FiberedRing& source, const FiberedRing& target, int q);

struct IdempotentImage {
  FBElement image;           // f(e_p), computed by fiber change
  std::vector<int> points;   // target points q with pullback(q) = p
  FBElement expansion;       // sum of e_q over those points
  bool matches() const { return image == expansion; }
};

/// f(e_p) together with its expansion in the target's primitive idempotents.
IdempotentImage idempotent_image(const FiberMap& f, const RingPtr& source, int p, const RingPtr& target);

}  // namespace fbr
