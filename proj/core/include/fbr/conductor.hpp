#pragma once

#include <cstdint>

#include "fbr/fibered_ring.hpp"

namespace fbr {

/// Conductor data of one primitive idempotent e_{H,h}.
struct ConductorReport {
  SpeciesPoint point;
  std::int64_t c = 0;          // least t >= 1 with t * e integral
  std::int64_t lower = 0;      // [N_G(H, hH^[n]) : H^[n]]
  std::int64_t sqf_index = 0;  // [H^[n] : H']_0
  std::int64_t rhs = 0;        // lower * sqf_index
  std::int64_t r = 0;          // c / lower, or 0 when lower does not divide c
  std::int64_t u = 0;
  bool coprime_case = false;   // gcd(n', exp(G)/n') == 1 with n' = gcd(n, exp(G))

  bool matches() const { return c == rhs; }
};

ConductorReport conductor(const FiberedRing& ring, int point);

/// Membership of an integral ghost element in the image of the integral ring
/// under the mark morphism, decided by the congruences modulo [N_G(H, φ) : H].
/// Throws std::invalid_argument on a non-integral coordinate.
bool boltje_membership(const GhostElement& y);

struct RestrictionFibers {
  int image_size = 0;
  int fiber_size = 0;  // size of the first nonempty fiber
  bool uniform = true;  // all nonempty fibers have the same size
};

/// Fibers of res: Hom(G, C_n) -> Hom(H, C_n), with G the parent of H.
RestrictionFibers restriction_fibers(const Subgroup& h, int n);

}  // namespace fbr
