// SPDX-License-Identifier: MIT
//
// Exact cyclotomic numbers: Q(zeta_N) with rational coordinates in the power
// basis 1, zeta, ..., zeta^(phi(N)-1), canonically reduced modulo the N-th
// cyclotomic polynomial.
//
// Character sums, Gauss sums and period values live here.  Values of
// different orders interoperate by promotion to the lcm order; a hard cap
// guards against runaway orders (the engine's configurable cap is enforced
// where sums are assembled, in AngleSum::value).  The square root of q is
// *defined* by the classical Gauss-sum evaluation, which pins every sign
// convention downstream.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pint/angle.hpp"
#include "pint/rational.hpp"

namespace pint {

std::int64_t euler_phi(std::int64_t n);

// Coefficients of the N-th cyclotomic polynomial, ascending, monic, length
// phi(N) + 1.  Memoized; safe for the moderate orders this library uses.
const std::vector<std::int64_t>& cyclotomic_poly(std::int64_t n);

class Cyclo {
 public:
  // Promotion beyond this order is always a bug somewhere upstream.
  static constexpr std::int64_t kHardOrderCap = 100000;

  Cyclo() : n_(1), c_(1, Rat(0)) {}

  static Cyclo zero() { return Cyclo(); }
  static Cyclo rational(const Rat& r);
  // e^{2 pi i a}.
  static Cyclo root(const Angle& a);
  // r * e^{2 pi i a}.
  static Cyclo phased(const Rat& r, const Angle& a);
  // The canonical square root of an odd prime q: the Gauss sum
  // g = sum_x zeta_q^(x^2) for q = 1 mod 4, and -i*g for q = 3 mod 4.
  static Cyclo sqrt_q(std::int64_t q);

  std::int64_t order() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  // Re-express in Q(zeta_N) for n | N.
  Cyclo promoted(std::int64_t N) const;

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  Cyclo operator-() const;
  Cyclo scaled(const Rat& r) const;
  Cyclo conj() const;
  // x * conj(x); real and nonnegative, not necessarily rational.
  Cyclo abs2() const;

  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  bool is_zero() const;
  bool is_rational() const;
  Rat to_rat() const;  // DomainError when not rational

  std::complex<double> approx() const;
  std::string str() const;

 private:
  std::int64_t n_;
  std::vector<Rat> c_;

  void reduce_tail(std::vector<Rat>& raw) const;
};

// Accumulator for sums of weight * root-of-unity terms.  Keeps the exact
// angle decomposition; value() assembles the cyclotomic number, enforcing
// the configured order cap.
class AngleSum {
 public:
  void add(const Angle& a, const Rat& w);
  void add_phased(const Angle& a, const Rat& w, const Angle& extra) {
    add(a + extra, w);
  }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Angle, Rat>& terms() const { return terms_; }

  Cyclo value(std::int64_t order_cap) const;

 private:
  std::map<Angle, Rat> terms_;
};

}  // namespace pint
