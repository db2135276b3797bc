// SPDX-License-Identifier: MIT
//
// Quadratic extensions E = F(sqrt(D)) of F = Q_p and their elements.
//
// D is a non-square with valuation 0 (inert/unramified E) or 1 (ramified E);
// p stays odd throughout.  Elements are pairs x + y*sqrt(D) of truncated
// p-adic scalars.  The normalized E-valuation extends v_F with index e:
// v_E(x + y sqrt D) = min(e*v(x), e*v(y) + v(D)) since sqrt(D) has
// valuation v(D)/e... concretely min(2 v(x), 2 v(y) + 1) when ramified and
// min(v(x), v(y)) when inert.  The canonical uniformizer is sqrt(D)
// (ramified) or p (inert).

#pragma once

#include <string>

#include "pint/padic.hpp"

namespace pint {

struct QuadExt {
  std::int64_t p{0};
  PAdic D;    // the defining non-square
  Rat d_rat;  // the same value as an exact rational
  int e{0};   // ramification index: 2 iff v(D) = 1, else 1

  QuadExt() = default;

  // Build from D given exactly as a rational; prec is the working absolute
  // precision for the stored scalar.
  static QuadExt make(std::int64_t p, const Rat& D, int prec);

  bool ramified() const { return e == 2; }

  // For ramified E: the unit xi with D = xi * p.
  PAdic xi() const;

  // Residue field size (F = Q_p, so q = p in both cases for the *F*-side
  // computations; the inert residue extension is handled where it matters).
  std::int64_t q() const { return p; }

  // Same field descriptor (same p, same D at the coarser precision).
  friend bool operator==(const QuadExt& a, const QuadExt& b);
  friend bool operator!=(const QuadExt& a, const QuadExt& b) {
    return !(a == b);
  }

  std::string str() const;
};

struct EElem {
  QuadExt E;
  PAdic x, y;  // x + y*sqrt(D)

  EElem() = default;
  EElem(const QuadExt& ext, const PAdic& xx, const PAdic& yy)
      : E(ext), x(xx), y(yy) {}

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  std::string str() const;
};

// Constructors.
EElem elem_int(const QuadExt& E, std::int64_t x, std::int64_t y, int prec);
EElem elem_rat(const QuadExt& E, const Rat& x, const Rat& y, int prec);
EElem sqrtD(const QuadExt& E, int prec);   // the element sqrt(D)
EElem one(const QuadExt& E, int prec);
EElem uniformizer(const QuadExt& E, int prec);  // sqrt(D) or p

// Arithmetic.
EElem operator+(const EElem& a, const EElem& b);
EElem operator-(const EElem& a, const EElem& b);
EElem operator*(const EElem& a, const EElem& b);
EElem operator*(const PAdic& c, const EElem& a);
EElem operator/(const EElem& a, const EElem& b);
EElem neg(const EElem& a);
EElem conj(const EElem& a);     // x - y*sqrt(D)
PAdic trace(const EElem& a);    // a + conj(a) = 2x
PAdic norm(const EElem& a);     // a * conj(a) = x^2 - y^2 D
EElem inv(const EElem& a);

bool operator==(const EElem& a, const EElem& b);
inline bool operator!=(const EElem& a, const EElem& b) { return !(a == b); }

// Normalized E-valuation (v_E(uniformizer) = 1).  DomainError on zero.
int val_E(const EElem& a);

// Lower bound for v_E from the precision bounds (valid also for zero).
int val_E_bound(const EElem& a);

// Split a nonzero element as uniformizer^v * u with u a unit; returns
// (v, u).
std::pair<int, EElem> unit_split(const EElem& a);

// Power of the canonical uniformizer.
EElem uniformizer_pow(const QuadExt& E, int k, int prec);

}  // namespace pint
