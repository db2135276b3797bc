// SPDX-License-Identifier: MIT
//
// Exact rational numbers on int64 with overflow-checked arithmetic.
//
// All coefficient arithmetic in the library (cyclotomic coordinates, Haar
// weights, report values) runs through this type.  Intermediates are widened
// to __int128 and results are checked back into int64; anything larger
// raises OverflowError instead of wrapping.  Values are kept reduced with a
// positive denominator, so representation equality is value equality.

#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "pint/errors.hpp"

namespace pint {

namespace detail {

inline std::int64_t narrow_i64(__int128 v, const char* what) {
  if (v > static_cast<__int128>(INT64_MAX) ||
      v < static_cast<__int128>(INT64_MIN))
    throw OverflowError(std::string("int64 overflow in ") + what);
  return static_cast<std::int64_t>(v);
}

inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

struct Rat {
  std::int64_t num{0};
  std::int64_t den{1};  // invariant: den > 0, gcd(num, den) == 1

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rat(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  static Rat make(__int128 n, __int128 d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rat r;
    r.num = detail::narrow_i64(n, "rational numerator");
    r.den = detail::narrow_i64(d, "rational denominator");
    return r;
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(static_cast<__int128>(a.num) * b.den +
                    static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(static_cast<__int128>(a.num) * b.den -
                    static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(static_cast<__int128>(a.num) * b.num,
                static_cast<__int128>(a.den) * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw DomainError("rational division by zero");
    return make(static_cast<__int128>(a.num) * b.den,
                static_cast<__int128>(a.den) * b.num);
  }
  Rat operator-() const {
    Rat r = *this;
    r.num = -r.num;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  double approx() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

// p-adic valuation of a nonzero rational (negative when p divides den).
inline int val_p(const Rat& r, std::int64_t p) {
  if (r.num == 0) throw DomainError("valuation of zero rational");
  int v = 0;
  std::int64_t n = r.num < 0 ? -r.num : r.num;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  std::int64_t d = r.den;
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

// Checked p^k for k >= 0; guards the "fits in int64 with headroom" invariant
// every truncated-scalar operation relies on.
inline std::int64_t pow_i64(std::int64_t base, int exp) {
  PINT_CHECK_MSG(exp >= 0, "pow_i64 exponent must be >= 0");
  __int128 r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > (static_cast<__int128>(1) << 62))
      throw OverflowError("p^k exceeds 2^62; lower the precision");
  }
  return static_cast<std::int64_t>(r);
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(
      (static_cast<__int128>(a) * b) % m);
}

inline std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t m) {
  PINT_CHECK(e >= 0 && m > 0);
  std::int64_t r = 1 % m;
  a %= m;
  if (a < 0) a += m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Inverse of a mod m (gcd(a, m) = 1 required).
inline std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, new_t = 1, r = m, new_r = a % m;
  if (new_r < 0) new_r += m;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw DomainError("inv_mod: argument not invertible");
  if (t < 0) t += m;
  return t;
}

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

inline std::int64_t lcm_i64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  __int128 l = static_cast<__int128>(a) / std::gcd(a, b) * b;
  return detail::narrow_i64(l < 0 ? -l : l, "lcm");
}

}  // namespace pint
