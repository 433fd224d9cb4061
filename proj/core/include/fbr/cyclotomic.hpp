#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fbr/rational.hpp"

namespace fbr {

/// Integer polynomial coefficients, lowest degree first.
using IntPoly = std::vector<std::int64_t>;

/// The m-th cyclotomic polynomial, computed as (x^m - 1) / prod_{d | m, d < m} Phi_d.
IntPoly cyclotomic_polynomial(int m);

int euler_phi(int m);

/// Reduction data for Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1).
///
/// `power(k)` is the coordinate vector of zeta^k for 0 <= k < max(m, 2*phi(m) - 1).
/// Obtained through `field(m)`, which caches one instance per m for the
/// lifetime of the process.
class CyclotomicField {
public:
  explicit CyclotomicField(int m);

  int order() const { return m_; }
  int degree() const { return degree_; }
  const IntPoly& modulus() const { return phi_; }
  std::span<const std::int64_t> power(int k) const;

private:
  int m_;
  int degree_;
  IntPoly phi_;
  int table_len_;
  std::vector<std::int64_t> powers_;  // row-major, table_len_ x degree_
};

const CyclotomicField& field(int m);

/// Exact element of Q(zeta_m), zeta_m = exp(2 pi i / m).
class CycNum {
public:
  CycNum() : CycNum(1) {}
  explicit CycNum(int m);
  CycNum(int m, const Rational& scalar);
  CycNum(int m, std::vector<Rational> coords);

  static CycNum root_of_unity(int m, std::int64_t k);
  static CycNum zero(int m) { return CycNum(m); }
  static CycNum one(int m) { return CycNum(m, Rational(1)); }

  int order() const { return m_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const;
  /// Least t >= 1 such that t * this has integer coordinates.
  mpz_class denominator() const;

  /// Complex conjugation, the automorphism zeta -> zeta^-1.
  CycNum conj() const;
  /// Image under zeta_m -> zeta_M^(M/m); requires m | M.
  CycNum lift(int big_m) const;

  /// this += scalar * zeta^k
  void add_root(const Rational& scalar, std::int64_t k);

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const Rational& s);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator*(CycNum a, const Rational& s) { return a *= s; }
  friend CycNum operator*(const Rational& s, CycNum a) { return a *= s; }

  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Comma separated power-basis coordinates, e.g. "1/2,0,-1".
  std::string coord_string() const;
  /// Human readable form, e.g. "1/2 - z6".
  std::string to_string() const;

private:
  void check_same(const CycNum& o) const;

  int m_;
  std::vector<Rational> c_;
};

/// Least t >= 1 with t*c integral for every c; throws on an empty collection.
mpz_class denominator_lcm(std::span<const CycNum> values);

}  // namespace fbr
