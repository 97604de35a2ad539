#pragma once

#include <string>

#include "toroidal/rational.hpp"

namespace toroidal {

/// Element a + b*sqrt(2) of the field Q(sqrt 2).
class Coeff {
public:
  Coeff() = default;
  Coeff(long long n) : a_(n) {} // NOLINT(google-explicit-constructor)
  Coeff(Rational a) : a_(std::move(a)) {} // NOLINT(google-explicit-constructor)
  Coeff(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Coeff sqrt2() { return {Rational(0), Rational(1)}; }
  /// 1/sqrt(2) = sqrt(2)/2
  static Coeff inv_sqrt2() { return {Rational(0), Rational(1, 2)}; }

  const Rational &rational_part() const { return a_; }
  const Rational &sqrt2_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  bool is_integer() const { return b_.is_zero() && a_.is_integer(); }
  /// Requires is_integer().
  long long to_int64() const;

  /// Galois conjugate a - b*sqrt(2).
  Coeff conjugate() const { return {a_, -b_}; }
  /// Field norm a^2 - 2 b^2.
  Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }

  /// Canonical text form, e.g. "-1/2", "sqrt2", "1/2 - 3*sqrt2".
  std::string str() const;

  Coeff operator-() const { return {-a_, -b_}; }
  Coeff &operator+=(const Coeff &o);
  Coeff &operator-=(const Coeff &o);
  Coeff &operator*=(const Coeff &o);
  Coeff &operator/=(const Coeff &o);

  friend Coeff operator+(Coeff x, const Coeff &y) { return x += y; }
  friend Coeff operator-(Coeff x, const Coeff &y) { return x -= y; }
  friend Coeff operator*(Coeff x, const Coeff &y) { return x *= y; }
  friend Coeff operator/(Coeff x, const Coeff &y) { return x /= y; }

  friend bool operator==(const Coeff &x, const Coeff &y) = default;

private:
  Rational a_;
  Rational b_;
};

} // namespace toroidal
