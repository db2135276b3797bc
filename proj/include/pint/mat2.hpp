// SPDX-License-Identifier: MIT
//
// 2x2 matrices over truncated p-adic scalars, plus the standard embedding of
// a quadratic extension into M_2(F).
//
// Everything the library needs from linear algebra is here: products,
// inverses via the adjugate, determinant/trace, and the embedding
// x + y sqrt(D) |-> [[x, y], [y D, x]], under which det = norm and
// tr = trace of the extension.

#pragma once

#include <string>

#include "pint/quadext.hpp"

namespace pint {

struct Mat2 {
  PAdic a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity(std::int64_t p, int prec);
  static Mat2 diag(const PAdic& x, const PAdic& y);
  // Upper unipotent [[1, u], [0, 1]].
  static Mat2 upper(const PAdic& u, int prec);
  // The standard test matrix [[v, u], [0, 1]] = upper(u) * diag(v, 1).
  static Mat2 test_matrix(const PAdic& v, const PAdic& u, int prec);

  PAdic det() const { return a * d - b * c; }
  PAdic tr() const { return a + d; }

  friend Mat2 operator*(const Mat2& m, const Mat2& n);
  friend Mat2 operator*(const PAdic& s, const Mat2& m);
  friend Mat2 operator+(const Mat2& m, const Mat2& n);
  friend Mat2 operator-(const Mat2& m, const Mat2& n);
  Mat2 inv() const;

  friend bool operator==(const Mat2& m, const Mat2& n);
  friend bool operator!=(const Mat2& m, const Mat2& n) { return !(m == n); }

  std::string str() const;
};

// Standard embedding of E into M_2(F).
Mat2 embed(const EElem& t);

}  // namespace pint
