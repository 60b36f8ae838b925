#include "seqinfer/rational.hpp"

#include <utility>

namespace seqinfer {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  // the backend reduces to lowest terms but insists on a positive denominator
  if (den < 0)
    v_ = Backend(-num, -den);
  else
    v_ = Backend(num, den);
}

Rational Rational::from_decimal(const std::string& text) {
  auto dot = text.find('.');
  bool has_digit = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i == dot) continue;
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("bad decimal literal '" + text + "'");
    has_digit = true;
  }
  if (!has_digit) throw std::invalid_argument("bad decimal literal '" + text + "'");
  if (dot == std::string::npos) return Rational(BigInt(text));
  std::string whole = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  BigInt num = whole.empty() ? BigInt(0) : BigInt(whole);
  BigInt den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  return Rational(num, den);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(v_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(v_); }

bool Rational::is_integer() const { return denominator() == 1; }

Rational Rational::operator/(const Rational& o) const {
  if (o.v_ == 0) throw std::domain_error("rational: division by zero");
  return Rational(Backend(v_ / o.v_));
}

Rational Rational::pow(long long e) const {
  if (e == 0) return Rational(1);
  if (v_ == 0) {
    if (e < 0) throw std::domain_error("rational: zero to a negative power");
    return Rational(0);
  }
  bool invert = e < 0;
  unsigned long long n = invert ? static_cast<unsigned long long>(-(e + 1)) + 1
                                : static_cast<unsigned long long>(e);
  BigInt num = boost::multiprecision::pow(numerator(), static_cast<unsigned>(n));
  BigInt den = boost::multiprecision::pow(denominator(), static_cast<unsigned>(n));
  return invert ? Rational(den, num) : Rational(num, den);
}

double Rational::to_double() const { return v_.convert_to<double>(); }

std::string Rational::str() const {
  std::string s = numerator().str();
  if (!is_integer()) s += "/" + denominator().str();
  return s;
}

}  // namespace seqinfer
