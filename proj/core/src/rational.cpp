#include "fbr/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace fbr {

namespace {

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

bool fits_small(__int128 v) { return v > -kSmallLimit && v < kSmallLimit; }

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

mpq_class small_to_mpq(std::int64_t n, std::int64_t d) {
  mpq_class q(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
  return q;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if (fits_small(value)) {
    num_ = value;
  } else {
    assign_big(mpq_class(mpz_class(static_cast<long>(value))));
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  assign_wide(num, den);
}

Rational::Rational(const mpq_class& q) { assign_big(q); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
  if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  q.canonicalize();
  return Rational(q);
}

void Rational::assign_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (fits_small(num) && fits_small(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
  } else {
    mpq_class q(to_mpz(num), to_mpz(den));
    q.canonicalize();
    assign_big(std::move(q));
  }
}

void Rational::assign_big(mpq_class q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    long ln = n.get_si();
    long ld = d.get_si();
    if (fits_small(ln) && fits_small(ld)) {
      num_ = ln;
      den_ = ld;
      big_.reset();
      return;
    }
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const mpq_class>(std::move(q));
}

bool Rational::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
  return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  return big_ ? *big_ : small_to_mpq(num_, den_);
}

double Rational::to_double() const {
  return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign_big(-*big_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (o.num_ == 0) return *this;
    if (den_ == 1 && o.den_ == 1) {
      assign_wide(static_cast<__int128>(num_) + o.num_, 1);
      return *this;
    }
    std::int64_t g = std::gcd(den_, o.den_);
    __int128 t = static_cast<__int128>(num_) * (o.den_ / g) +
                 static_cast<__int128>(o.num_) * (den_ / g);
    __int128 d = static_cast<__int128>(den_ / g) * o.den_;
    assign_wide(t, d);
    return *this;
  }
  assign_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::int64_t g1 = std::gcd(num_, o.den_);
    std::int64_t g2 = std::gcd(o.num_, den_);
    __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
    __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
    assign_wide(n, d);
    return *this;
  }
  assign_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!big_ && !o.big_) {
    std::int64_t g1 = std::gcd(num_, o.num_);
    std::int64_t g2 = std::gcd(den_, o.den_);
    if (g1 == 0) g1 = 1;
    __int128 n = static_cast<__int128>(num_ / g1) * (o.den_ / g2);
    __int128 d = static_cast<__int128>(den_ / g2) * (o.num_ / g1);
    assign_wide(n, d);
    return *this;
  }
  assign_big(to_mpq() / o.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms never mix representations for equal values
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

}  // namespace fbr
