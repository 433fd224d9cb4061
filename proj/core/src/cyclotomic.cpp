#include "fbr/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fbr {

namespace {

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(const IntPoly& num, const IntPoly& den) {
  IntPoly rem = num;
  const std::size_t dd = den.size() - 1;
  if (rem.size() < den.size()) throw std::logic_error("divide_monic: degree");
  IntPoly quot(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    std::int64_t c = rem[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dd; ++j) {
    if (rem[j] != 0) throw std::logic_error("divide_monic: nonzero remainder");
  }
  return quot;
}

IntPoly multiply_poly(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

int euler_phi(int m) {
  if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
  int result = m;
  int x = m;
  for (int p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      result -= result / p;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

IntPoly cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  IntPoly num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[m] = 1;
  IntPoly den{1};
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) den = multiply_poly(den, cyclotomic_polynomial(d));
  }
  return divide_monic(num, den);
}

CyclotomicField::CyclotomicField(int m)
    : m_(m), degree_(euler_phi(m)), phi_(cyclotomic_polynomial(m)) {
  table_len_ = std::max(m_, 2 * degree_ - 1);
  powers_.assign(static_cast<std::size_t>(table_len_) * degree_, 0);
  std::vector<std::int64_t> cur(degree_, 0);
  cur[0] = 1;  // degree_ >= 1 always
  for (int k = 0; k < table_len_; ++k) {
    std::copy(cur.begin(), cur.end(), powers_.begin() + static_cast<std::ptrdiff_t>(k) * degree_);
    // cur <- x * cur mod phi
    std::int64_t top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < degree_; ++i) cur[i] -= top * phi_[i];
    }
  }
}

std::span<const std::int64_t> CyclotomicField::power(int k) const {
  if (k < 0 || k >= table_len_) throw std::out_of_range("CyclotomicField::power");
  return {powers_.data() + static_cast<std::ptrdiff_t>(k) * degree_,
          static_cast<std::size_t>(degree_)};
}

const CyclotomicField& field(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) {
    it = cache.emplace(m, std::make_unique<CyclotomicField>(m)).first;
  }
  return *it->second;
}

CycNum::CycNum(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("CycNum: order must be positive");
  c_.assign(static_cast<std::size_t>(field(m).degree()), Rational(0));
}

CycNum::CycNum(int m, const Rational& scalar) : CycNum(m) { c_[0] = scalar; }

CycNum::CycNum(int m, std::vector<Rational> coords) : m_(m), c_(std::move(coords)) {
  if (m < 1) throw std::invalid_argument("CycNum: order must be positive");
  if (static_cast<int>(c_.size()) != field(m).degree()) {
    throw std::invalid_argument("CycNum: coordinate count must equal phi(m)");
  }
}

CycNum CycNum::root_of_unity(int m, std::int64_t k) {
  CycNum r(m);
  r.add_root(Rational(1), k);
  return r;
}

bool CycNum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool CycNum::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool CycNum::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_integer(); });
}

mpz_class CycNum::denominator() const {
  mpz_class d = 1;
  for (const auto& r : c_) {
    if (r.is_integer()) continue;
    mpz_class rd = r.denominator();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), rd.get_mpz_t());
  }
  return d;
}

void CycNum::add_root(const Rational& scalar, std::int64_t k) {
  if (scalar.is_zero()) return;
  int e = static_cast<int>(((k % m_) + m_) % m_);
  auto row = field(m_).power(e);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (row[i] != 0) c_[i] += scalar * Rational(row[i]);
  }
}

CycNum CycNum::conj() const {
  CycNum r(m_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) r.add_root(c_[i], -static_cast<std::int64_t>(i));
  }
  return r;
}

CycNum CycNum::lift(int big_m) const {
  if (big_m == m_) return *this;
  if (big_m < 1 || big_m % m_ != 0) {
    throw std::invalid_argument("CycNum::lift: target order must be a multiple of " +
                                std::to_string(m_));
  }
  const std::int64_t step = big_m / m_;
  CycNum r(big_m);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) r.add_root(c_[i], static_cast<std::int64_t>(i) * step);
  }
  return r;
}

void CycNum::check_same(const CycNum& o) const {
  if (m_ != o.m_) {
    throw std::invalid_argument("CycNum: mixed orders " + std::to_string(m_) + " and " +
                                std::to_string(o.m_));
  }
}

CycNum CycNum::operator-() const {
  CycNum r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  }
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  }
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  a.check_same(b);
  const int deg = static_cast<int>(a.c_.size());
  if (deg == 1) return CycNum(a.m_, std::vector<Rational>{a.c_[0] * b.c_[0]});
  std::vector<Rational> conv(static_cast<std::size_t>(2 * deg - 1), Rational(0));
  bool any = false;
  for (int i = 0; i < deg; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < deg; ++j) {
      if (b.c_[j].is_zero()) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
      any = true;
    }
  }
  CycNum r(a.m_);
  if (!any) return r;
  const auto& f = field(a.m_);
  for (int k = 0; k < 2 * deg - 1; ++k) {
    if (conv[k].is_zero()) continue;
    if (k < deg) {
      r.c_[k] += conv[k];
      continue;
    }
    auto row = f.power(k);
    for (int i = 0; i < deg; ++i) {
      if (row[i] != 0) r.c_[i] += conv[k] * Rational(row[i]);
    }
  }
  return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  *this = *this * o;
  return *this;
}

CycNum& CycNum::operator*=(const Rational& s) {
  for (auto& x : c_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) { return a.m_ == b.m_ && a.c_ == b.c_; }

std::string CycNum::coord_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += c_[i].to_string();
  }
  return s;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& r = c_[i];
    if (r.is_zero()) continue;
    Rational mag = r.sign() < 0 ? -r : r;
    if (first) {
      if (r.sign() < 0) os << '-';
    } else {
      os << (r.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!(mag == Rational(1))) os << mag << '*';
    os << 'z' << m_;
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

mpz_class denominator_lcm(std::span<const CycNum> values) {
  if (values.empty()) throw std::invalid_argument("denominator_lcm: empty collection");
  mpz_class d = 1;
  const int m = values.front().order();
  for (const auto& v : values) {
    if (v.order() != m) throw std::invalid_argument("denominator_lcm: mixed orders");
    mpz_class vd = v.denominator();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), vd.get_mpz_t());
  }
  return d;
}

}  // namespace fbr
