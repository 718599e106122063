#pragma once

#include <gmpxx.h>

#include <string>

#include "defo/errors.hpp"

namespace defo {

// Exact rational number. Always kept in canonical reduced form:
// gcd(|num|, den) = 1 and den > 0. All arithmetic is exact.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Scalar(long num, long den) {
    if (den == 0) throw DomainError("Scalar: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Scalar(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Scalar(const mpz_class& z) : v_(z) {}

  static Scalar from_decimal_string(const std::string& digits) {
    return Scalar(mpz_class(digits, 10));
  }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Scalar operator-() const { return Scalar(mpq_class(-v_)); }
  Scalar operator+(const Scalar& o) const { return Scalar(mpq_class(v_ + o.v_)); }
  Scalar operator-(const Scalar& o) const { return Scalar(mpq_class(v_ - o.v_)); }
  Scalar operator*(const Scalar& o) const { return Scalar(mpq_class(v_ * o.v_)); }
  Scalar operator/(const Scalar& o) const {
    if (o.is_zero()) throw DomainError("Scalar: division by zero");
    return Scalar(mpq_class(v_ / o.v_));
  }
  Scalar& operator+=(const Scalar& o) {
    v_ += o.v_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    v_ -= o.v_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    v_ *= o.v_;
    return *this;
  }

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return v_ != o.v_; }
  bool operator<(const Scalar& o) const { return v_ < o.v_; }

  // Prints "p" when the denominator is 1, "p/q" otherwise.
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  mpq_class v_;
};

inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }

}  // namespace defo
