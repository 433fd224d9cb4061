#pragma once

#include <cstdint>
#include <vector>

namespace fbr {

/// Product of the distinct primes dividing n (n_0); squarefree_part(1) == 1.
std::int64_t squarefree_part(std::int64_t n);

std::vector<std::int64_t> prime_divisors(std::int64_t n);

/// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace fbr
