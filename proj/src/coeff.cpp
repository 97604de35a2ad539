#include "toroidal/coeff.hpp"

#include <stdexcept>

namespace toroidal {

long long Coeff::to_int64() const {
  if (!b_.is_zero())
    throw std::domain_error("coefficient " + str() + " is irrational");
  return a_.to_int64();
}

std::string Coeff::str() const {
  if (b_.is_zero())
    return a_.str();
  std::string irr;
  if (b_ == Rational(1))
    irr = "sqrt2";
  else if (b_ == Rational(-1))
    irr = "-sqrt2";
  else
    irr = b_.str() + "*sqrt2";
  if (a_.is_zero())
    return irr;
  if (irr.front() == '-')
    return a_.str() + " - " + irr.substr(1);
  return a_.str() + " + " + irr;
}

Coeff &Coeff::operator+=(const Coeff &o) {
  a_ += o.a_;
  if (!o.b_.is_zero())
    b_ += o.b_;
  return *this;
}

Coeff &Coeff::operator-=(const Coeff &o) {
  a_ -= o.a_;
  if (!o.b_.is_zero())
    b_ -= o.b_;
  return *this;
}

Coeff &Coeff::operator*=(const Coeff &o) {
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + Rational(2) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Coeff &Coeff::operator/=(const Coeff &o) {
  if (o.is_zero())
    throw std::domain_error("division by zero in Q(sqrt2)");
  if (o.b_.is_zero()) {
    a_ /= o.a_;
    if (!b_.is_zero())
      b_ /= o.a_;
    return *this;
  }
  // x / y = x * conj(y) / N(y); N(y) != 0 since sqrt2 is irrational.
  Rational n = o.norm();
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

} // namespace toroidal
