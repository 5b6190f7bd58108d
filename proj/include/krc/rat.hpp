/*
  rat.hpp — exact rational arithmetic for alcove-walk bookkeeping.
  Values stay tiny (weights at rank <= 5), so int64 never overflows here.
*/
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace krc {

struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(Rat a, Rat b) { return Rat(a.num * b.den, a.den * b.num); }
  Rat operator-() const { return Rat(-num, den); }
  Rat& operator+=(Rat b) { *this = *this + b; return *this; }
  Rat& operator-=(Rat b) { *this = *this - b; return *this; }

  friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(Rat a, Rat b) { return !(a == b); }
  friend bool operator<(Rat a, Rat b) { return a.num * b.den < b.num * a.den; }
  friend bool operator>(Rat a, Rat b) { return b < a; }
  friend bool operator<=(Rat a, Rat b) { return !(b < a); }
  friend bool operator>=(Rat a, Rat b) { return !(a < b); }

  int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
};

} // namespace krc
