#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rotorlab {

// Exact rational number on 64-bit integers, always stored reduced with a
// positive denominator. Core predicates never go through floating point.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    num = g ? n / g : n;
    den = g ? d / g : d;
  }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(std::int64_t k, Rational a) {
    return Rational(k * a.num, a.den);
  }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(Rational a, Rational b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(Rational a, Rational b) { return a == b || a < b; }
  friend bool operator>(Rational a, Rational b) { return b < a; }
  friend bool operator>=(Rational a, Rational b) { return b <= a; }

  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace rotorlab
