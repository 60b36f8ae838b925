#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace seqinfer {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Invariants: always in lowest terms, denominator > 0.
// The multiprecision backend maintains both on every operation; this wrapper
// exists to pin the engine-facing contract (explicit divide-by-zero throw,
// exact integer pow, exact decimal conversion, canonical printing).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // implicit: plain integers are rationals
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den);

  // Exact conversion of an unsigned decimal literal such as "7", "0.25", "3.".
  static Rational from_decimal(const std::string& text);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const;
  bool is_negative() const { return v_ < 0; }

  Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }

  Rational operator-() const { return Rational(-v_); }
  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  // Exact power with integer exponent. 0 raised to a negative power throws;
  // 0**0 is 1 (the convention the evaluator uses as well).
  Rational pow(long long e) const;

  double to_double() const;

  // "3", "-6", "1/2", "-3/4". Integers print without a denominator.
  std::string str() const;

 private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : v_(std::move(v)) {}
  Backend v_;
};

}  // namespace seqinfer
