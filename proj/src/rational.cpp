#include "toroidal/rational.hpp"

#include <limits>
#include <stdexcept>

namespace toroidal {

namespace {

using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(__int128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(__int128 v) {
  const bool neg = v < 0;
  u128 m = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits(const mpz_class &z) {
  return z.fits_slong_p() && z != std::numeric_limits<long>::min();
}

} // namespace

Rational::Rational(long long n) {
  if (n == std::numeric_limits<long long>::min())
    assign(mpq_class(mpz_class(std::to_string(n))));
  else
    num_ = n;
}

Rational::Rational(long long n, long long d) {
  if (d == 0)
    throw std::domain_error("rational with zero denominator");
  assign(static_cast<__int128>(n), static_cast<__int128>(d));
}

Rational::Rational(const mpq_class &q) { assign(q); }

Rational Rational::parse(std::string_view text) {
  if (text.empty())
    throw std::invalid_argument("empty rational literal");
  mpq_class q;
  std::string s(text);
  if (!s.empty() && s.front() == '+')
    s.erase(0, 1);
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0)
    throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return Rational(q);
}

void Rational::assign(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  u128 g = gcd128(uabs(n), static_cast<u128>(d));
  n /= static_cast<__int128>(g);
  d /= static_cast<__int128>(g);
  if (uabs(n) <= static_cast<u128>(kMax) && static_cast<u128>(d) <= static_cast<u128>(kMax)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(n), to_mpz(d));
  big_ = std::make_shared<const mpq_class>(std::move(q));
  num_ = 0;
  den_ = 1;
}

void Rational::assign(mpq_class q) {
  q.canonicalize();
  if (fits(q.get_num()) && fits(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
    return;
  }
  big_ = std::make_shared<const mpq_class>(std::move(q));
  num_ = 0;
  den_ = 1;
}

bool Rational::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_)
    return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  if (big_)
    return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

long long Rational::to_int64() const {
  if (!is_integer())
    throw std::domain_error("rational " + str() + " is not an integer");
  if (big_)
    throw std::overflow_error("rational " + str() + " exceeds int64");
  return num_;
}

std::string Rational::str() const {
  if (big_)
    return big_->get_str();
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_)
    r.assign(mpq_class(-*big_));
  else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational &Rational::operator+=(const Rational &o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(num_, o.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
        num_ = s;
        return *this;
      }
    }
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    assign(n, d);
    return *this;
  }
  assign(to_mpq() + o.to_mpq());
  return *this;
}

Rational &Rational::operator-=(const Rational &o) { return *this += -o; }

Rational &Rational::operator*=(const Rational &o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(num_, o.num_, &p) && p != std::numeric_limits<std::int64_t>::min()) {
        num_ = p;
        return *this;
      }
    }
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    assign(n, d);
    return *this;
  }
  assign(to_mpq() * o.to_mpq());
  return *this;
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::domain_error("division by zero");
  if (!big_ && !o.big_) {
    __int128 n = static_cast<__int128>(num_) * o.den_;
    __int128 d = static_cast<__int128>(den_) * o.num_;
    assign(n, d);
    return *this;
  }
  assign(to_mpq() / o.to_mpq());
  return *this;
}

bool operator==(const Rational &a, const Rational &b) {
  if (!a.big_ && !b.big_)
    return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_)
    return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  if (!a.big_ && !b.big_) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

} // namespace toroidal
