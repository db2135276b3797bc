// SPDX-License-Identifier: MIT
//
// Truncated p-adic scalars: exact arithmetic in Q_p to a tracked absolute
// precision.
//
// A nonzero value is stored as p^v * u + O(p^abs) with v the valuation,
// u the unit part reduced into [1, p^(abs-v)) and coprime to p, and abs the
// absolute precision (the value is known modulo p^abs).  A "zero" carries
// only its precision bound O(p^abs).  Every operation propagates precision
// with the standard ultrametric rules and raises PrecisionLoss the moment a
// result would have no known digits, so silent garbage cannot propagate.
//
// The per-scalar prime keeps values self-describing; mixing primes is an
// internal error.  Units are capped by p^rel <= 2^62 (enforced at
// construction), so all arithmetic fits __int128 intermediates.

#pragma once

#include <cstdint>
#include <string>

#include "pint/angle.hpp"
#include "pint/errors.hpp"
#include "pint/rational.hpp"

namespace pint {

class PAdic {
 public:
  // Valuation/precision sentinel for exact zero ("+infinity").
  static constexpr int kInf = 1 << 28;

  PAdic() = default;

  // O(p^abs_prec): zero to the given precision.
  static PAdic zero(std::int64_t p, int abs_prec);

  // Exact zero (known to infinite precision).
  static PAdic exact_zero(std::int64_t p);

  // n + O(p^abs_prec).
  static PAdic from_int(std::int64_t p, std::int64_t n, int abs_prec);

  // r + O(p^abs_prec).
  static PAdic from_rat(std::int64_t p, const Rat& r, int abs_prec);

  // p^v * u + O(p^abs_prec); u need not be reduced or coprime to p.
  static PAdic from_unit(std::int64_t p, int v, std::int64_t u, int abs_prec);

  std::int64_t prime() const { return p_; }
  bool is_zero() const { return u_ == 0; }

  // Valuation; calling it on a (truncated) zero is a domain error because
  // only the lower bound abs() is known then.
  int val() const;

  // Valuation if nonzero, otherwise the precision bound (a lower bound for
  // the true valuation either way).
  int val_bound() const { return is_zero() ? abs_ : v_; }

  int abs_prec() const { return abs_; }
  int rel_prec() const { return is_zero() ? 0 : abs_ - v_; }

  // Unit part modulo p^k (requires k digits of relative precision).
  std::int64_t unit_mod(int k) const;

  // Representative of the value modulo p^k in [0, p^k); requires val >= 0
  // and abs_prec >= k.
  std::int64_t residue(int k) const;

  // Truncate to absolute precision a (a <= abs_prec).
  PAdic truncated(int a) const;

  friend PAdic operator+(const PAdic& a, const PAdic& b);
  friend PAdic operator-(const PAdic& a, const PAdic& b);
  friend PAdic operator*(const PAdic& a, const PAdic& b);
  friend PAdic operator/(const PAdic& a, const PAdic& b);
  PAdic operator-() const;
  PAdic inv() const;
  PAdic pow(int e) const;

  // Equality at the coarser of the two precisions (the only equality that
  // makes sense for truncated values).
  friend bool operator==(const PAdic& a, const PAdic& b);
  friend bool operator!=(const PAdic& a, const PAdic& b) { return !(a == b); }

  // Square root via Hensel lifting (p odd).  Requires even valuation and a
  // unit that is a quadratic residue; DomainError otherwise.
  PAdic sqrt() const;

  // True if the value is a square in Q_p (needs >= 1 digit).
  bool is_square() const;

  // Whether x is congruent to a square modulo p^m (p odd).  Needs x known
  // mod p^m.
  static bool is_square_mod(const PAdic& x, int m);

  // Angle of the standard additive character: x mod Z_p negated, i.e.
  // psi(x) = e^{2 pi i angle}.  Needs abs_prec >= 0.
  Angle psi_angle() const;

  std::string str() const;

 private:
  std::int64_t p_{0};
  int v_{kInf};          // valuation (kInf when zero)
  std::int64_t u_{0};    // unit part; 0 iff zero
  int abs_{0};           // absolute precision

  void canonicalize();
};

// Legendre symbol (a/p) for odd prime p; 0 when p | a.
int legendre(std::int64_t a, std::int64_t p);

}  // namespace pint
