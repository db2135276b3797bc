// SPDX-License-Identifier: MIT

#include "pint/quadext.hpp"

#include <sstream>

namespace pint {

QuadExt QuadExt::make(std::int64_t p, const Rat& D, int prec) {
  if (p <= 2) throw DomainError("base prime must be odd");
  if (D.is_zero()) throw DomainError("D must be nonzero");
  PAdic d = PAdic::from_rat(p, D, prec);
  if (d.is_zero()) throw DomainError("D vanishes at the working precision");
  int v = d.val();
  if (v != 0 && v != 1)
    throw DomainError("D must have valuation 0 or 1, got " +
                      std::to_string(v));
  if (v == 0 && legendre(d.unit_mod(1), p) == 1)
    throw DomainError("D is a square unit: E would not be a field");
  QuadExt E;
  E.p = p;
  E.D = d;
  E.d_rat = D;
  E.e = (v == 1) ? 2 : 1;
  return E;
}

PAdic QuadExt::xi() const {
  PINT_CHECK_MSG(ramified(), "xi() only for ramified extensions");
  return D / PAdic::from_int(p, p, D.abs_prec() + 1);
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  return a.p == b.p && a.e == b.e && a.D == b.D;
}

std::string QuadExt::str() const {
  std::ostringstream os;
  os << "Q_" << p << "(sqrt(" << D.str() << "))"
     << (ramified() ? " [ramified]" : " [inert]");
  return os.str();
}

std::string EElem::str() const {
  return "(" + x.str() + ") + (" + y.str() + ")*sqrtD";
}

EElem elem_int(const QuadExt& E, std::int64_t x, std::int64_t y, int prec) {
  return EElem(E, PAdic::from_int(E.p, x, prec),
               PAdic::from_int(E.p, y, prec));
}

EElem elem_rat(const QuadExt& E, const Rat& x, const Rat& y, int prec) {
  return EElem(E, PAdic::from_rat(E.p, x, prec),
               PAdic::from_rat(E.p, y, prec));
}

EElem sqrtD(const QuadExt& E, int prec) { return elem_int(E, 0, 1, prec); }

EElem one(const QuadExt& E, int prec) { return elem_int(E, 1, 0, prec); }

EElem uniformizer(const QuadExt& E, int prec) {
  return E.ramified() ? sqrtD(E, prec) : elem_int(E, E.p, 0, prec);
}

namespace {
void require_same_field(const EElem& a, const EElem& b) {
  PINT_CHECK_MSG(a.E == b.E, "mixed quadratic extensions");
}
}  // namespace

EElem operator+(const EElem& a, const EElem& b) {
  require_same_field(a, b);
  return EElem(a.E, a.x + b.x, a.y + b.y);
}

EElem operator-(const EElem& a, const EElem& b) {
  require_same_field(a, b);
  return EElem(a.E, a.x - b.x, a.y - b.y);
}

EElem operator*(const EElem& a, const EElem& b) {
  require_same_field(a, b);
  // (x1 + y1 s)(x2 + y2 s) = x1 x2 + y1 y2 D + (x1 y2 + x2 y1) s
  return EElem(a.E, a.x * b.x + a.y * b.y * a.E.D, a.x * b.y + b.x * a.y);
}

EElem operator*(const PAdic& c, const EElem& a) {
  return EElem(a.E, c * a.x, c * a.y);
}

EElem neg(const EElem& a) { return EElem(a.E, -a.x, -a.y); }

EElem conj(const EElem& a) { return EElem(a.E, a.x, -a.y); }

PAdic trace(const EElem& a) { return a.x + a.x; }

PAdic norm(const EElem& a) { return a.x * a.x - a.y * a.y * a.E.D; }

EElem inv(const EElem& a) {
  PAdic n = norm(a);
  // conj(a)/N(a); PAdic::inv raises on zero norm.
  PAdic ni = n.inv();
  return EElem(a.E, a.x * ni, -(a.y * ni));
}

EElem operator/(const EElem& a, const EElem& b) {
  require_same_field(a, b);
  return a * inv(b);
}

bool operator==(const EElem& a, const EElem& b) {
  require_same_field(a, b);
  return a.x == b.x && a.y == b.y;
}

int val_E(const EElem& a) {
  if (a.is_zero()) throw DomainError("E-valuation of zero");
  // Bounds from both coordinates; PrecisionLoss if the minimum is not
  // certain (both coordinates zero to precision can't happen here).
  if (a.E.ramified()) {
    int vx = a.x.is_zero() ? PAdic::kInf : 2 * a.x.val();
    int vy = a.y.is_zero() ? PAdic::kInf : 2 * a.y.val() + 1;
    // A zero coordinate bounds its term below by precision; the min is only
    // trustworthy if the nonzero term is below that bound.
    int bx = a.x.is_zero() ? 2 * a.x.abs_prec() : vx;
    int by = a.y.is_zero() ? 2 * a.y.abs_prec() + 1 : vy;
    int v = vx < vy ? vx : vy;
    if (v > (bx < by ? bx : by))
      throw PrecisionLoss("E-valuation not determined at this precision");
    return v;
  }
  int vx = a.x.is_zero() ? PAdic::kInf : a.x.val();
  int vy = a.y.is_zero() ? PAdic::kInf : a.y.val();
  int bx = a.x.is_zero() ? a.x.abs_prec() : vx;
  int by = a.y.is_zero() ? a.y.abs_prec() : vy;
  int v = vx < vy ? vx : vy;
  if (v > (bx < by ? bx : by))
    throw PrecisionLoss("E-valuation not determined at this precision");
  return v;
}

int val_E_bound(const EElem& a) {
  if (a.E.ramified()) {
    int bx = 2 * a.x.val_bound();
    int by = 2 * a.y.val_bound() + 1;
    return bx < by ? bx : by;
  }
  int bx = a.x.val_bound();
  int by = a.y.val_bound();
  return bx < by ? bx : by;
}

EElem uniformizer_pow(const QuadExt& E, int k, int prec) {
  (void)prec;
  if (E.ramified()) {
    // sqrt(D)^k = D^h when k = 2h, D^h * sqrt(D) when k = 2h + 1.
    int h = k >= 0 ? k / 2 : -((-k + 1) / 2);
    int r = k - 2 * h;  // 0 or 1
    PAdic dpow = E.D.pow(h);
    if (r == 0) return EElem(E, dpow, PAdic::zero(E.p, dpow.abs_prec()));
    return EElem(E, PAdic::zero(E.p, dpow.abs_prec() + 1), dpow);
  }
  PAdic pk = PAdic::from_int(E.p, E.p, prec + (k < 0 ? -k : k) + 1).pow(k);
  return EElem(E, pk, PAdic::zero(E.p, pk.abs_prec()));
}

std::pair<int, EElem> unit_split(const EElem& a) {
  int v = val_E(a);
  EElem u = a * uniformizer_pow(a.E, -v, a.x.abs_prec() + (v < 0 ? -v : v) + 2);
  PINT_CHECK(val_E(u) == 0);
  return {v, u};
}

}  // namespace pint
