// SPDX-License-Identifier: MIT
//
// Rational angles: elements of Q/Z, i.e. exponents of roots of unity.
//
// A character value e^{2*pi*i*(n/d)} is stored as the reduced fraction n/d
// with 0 <= n < d.  Addition of angles is multiplication of the underlying
// roots of unity; this is the exact currency all character tables trade in.

#pragma once

#include <cstdint>
#include <string>

#include "pint/rational.hpp"

namespace pint {

struct Angle {
  std::int64_t num{0};
  std::int64_t den{1};  // invariant: den >= 1, 0 <= num < den, gcd = 1

  Angle() = default;
  Angle(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  // n/d reduced into [0, 1).
  static Angle make(__int128 n, __int128 d) {
    if (d == 0) throw DomainError("angle with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    n %= d;
    if (n < 0) n += d;
    __int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Angle a;
    a.num = detail::narrow_i64(n, "angle numerator");
    a.den = detail::narrow_i64(d, "angle denominator");
    return a;
  }

  static Angle zero() { return Angle(); }
  static Angle half() { return Angle(1, 2); }
  static Angle from_rat(const Rat& r) { return make(r.num, r.den); }

  bool is_zero() const { return num == 0; }

  // Value in [0,1) as an exact rational.
  Rat to_rat() const { return Rat(num, den); }

  friend Angle operator+(const Angle& a, const Angle& b) {
    return make(static_cast<__int128>(a.num) * b.den +
                    static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
  }
  friend Angle operator-(const Angle& a, const Angle& b) {
    return make(static_cast<__int128>(a.num) * b.den -
                    static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
  }
  Angle operator-() const { return make(-static_cast<__int128>(num), den); }

  // k-th multiple (value of the k-th power of the root of unity).
  Angle times(std::int64_t k) const {
    return make(static_cast<__int128>(num) * k, den);
  }

  friend bool operator==(const Angle& a, const Angle& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Angle& a, const Angle& b) { return !(a == b); }
  friend bool operator<(const Angle& a, const Angle& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }

  // Multiplicative order of the root of unity this angle represents.
  std::int64_t order() const { return den; }

  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace pint
