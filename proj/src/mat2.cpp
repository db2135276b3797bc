// SPDX-License-Identifier: MIT

#include "pint/mat2.hpp"

#include <sstream>

namespace pint {

Mat2 Mat2::identity(std::int64_t p, int prec) {
  Mat2 m;
  m.a = PAdic::from_int(p, 1, prec);
  m.b = PAdic::zero(p, prec);
  m.c = PAdic::zero(p, prec);
  m.d = PAdic::from_int(p, 1, prec);
  return m;
}

Mat2 Mat2::diag(const PAdic& x, const PAdic& y) {
  Mat2 m;
  m.a = x;
  m.d = y;
  int prec = x.abs_prec() < y.abs_prec() ? x.abs_prec() : y.abs_prec();
  m.b = PAdic::zero(x.prime(), prec);
  m.c = PAdic::zero(x.prime(), prec);
  return m;
}

Mat2 Mat2::upper(const PAdic& u, int prec) {
  Mat2 m = identity(u.prime(), prec);
  m.b = u;
  return m;
}

Mat2 Mat2::test_matrix(const PAdic& v, const PAdic& u, int prec) {
  Mat2 m = identity(v.prime(), prec);
  m.a = v;
  m.b = u;
  return m;
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
  Mat2 r;
  r.a = m.a * n.a + m.b * n.c;
  r.b = m.a * n.b + m.b * n.d;
  r.c = m.c * n.a + m.d * n.c;
  r.d = m.c * n.b + m.d * n.d;
  return r;
}

Mat2 operator*(const PAdic& s, const Mat2& m) {
  Mat2 r;
  r.a = s * m.a;
  r.b = s * m.b;
  r.c = s * m.c;
  r.d = s * m.d;
  return r;
}

Mat2 operator+(const Mat2& m, const Mat2& n) {
  Mat2 r;
  r.a = m.a + n.a;
  r.b = m.b + n.b;
  r.c = m.c + n.c;
  r.d = m.d + n.d;
  return r;
}

Mat2 operator-(const Mat2& m, const Mat2& n) {
  Mat2 r;
  r.a = m.a - n.a;
  r.b = m.b - n.b;
  r.c = m.c - n.c;
  r.d = m.d - n.d;
  return r;
}

Mat2 Mat2::inv() const {
  PAdic di = det().inv();
  Mat2 r;
  r.a = d * di;
  r.b = -(b * di);
  r.c = -(c * di);
  r.d = a * di;
  return r;
}

bool operator==(const Mat2& m, const Mat2& n) {
  return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
}

std::string Mat2::str() const {
  std::ostringstream os;
  os << "[[" << a.str() << ", " << b.str() << "], [" << c.str() << ", "
     << d.str() << "]]";
  return os.str();
}

Mat2 embed(const EElem& t) {
  Mat2 m;
  m.a = t.x;
  m.b = t.y;
  m.c = t.y * t.E.D;
  m.d = t.x;
  return m;
}

}  // namespace pint
