#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace toroidal {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in int64 are held
/// inline; anything larger is promoted to a GMP rational. The representation
/// is canonical (a value is big only if it does not fit inline), so equality
/// is structural.
class Rational {
public:
  Rational() = default;
  Rational(long long n); // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);
  explicit Rational(const mpq_class &q);

  /// Parses "p" or "p/q" with an optional leading sign.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  int sign() const;
  bool is_big() const { return static_cast<bool>(big_); }

  /// Numerator and denominator as GMP integers (denominator > 0).
  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;
  /// Requires is_integer() and a value in int64 range.
  long long to_int64() const;

  std::string str() const;

  Rational operator-() const;
  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b);
  friend std::strong_ordering operator<=>(const Rational &a,
                                          const Rational &b);

private:
  void assign(__int128 n, __int128 d);
  void assign(mpq_class q);

  // Inline value num_/den_, den_ > 0, gcd 1; unused when big_ is set.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

} // namespace toroidal
