#include "fbr/number_theory.hpp"

#include <numeric>
#include <stdexcept>

namespace fbr {

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("prime_divisors: n must be positive");
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t squarefree_part(std::int64_t n) {
  std::int64_t r = 1;
  for (auto p : prime_divisors(n)) r *= p;
  return r;
}

std::vector<int> divisors(int n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace fbr
