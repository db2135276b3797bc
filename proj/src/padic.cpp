// SPDX-License-Identifier: MIT

#include "pint/padic.hpp"

#include <sstream>

namespace pint {

namespace {

void require_same_prime(const PAdic& a, const PAdic& b) {
  PINT_CHECK_MSG(a.prime() == b.prime(), "mixed primes in p-adic arithmetic");
}

}  // namespace

PAdic PAdic::zero(std::int64_t p, int abs_prec) {
  PINT_CHECK_MSG(p > 2, "prime must be odd and > 2");
  PAdic x;
  x.p_ = p;
  x.v_ = kInf;
  x.u_ = 0;
  x.abs_ = abs_prec;
  return x;
}

PAdic PAdic::exact_zero(std::int64_t p) { return zero(p, kInf); }

PAdic PAdic::from_unit(std::int64_t p, int v, std::int64_t u, int abs_prec) {
  PINT_CHECK_MSG(p > 2, "prime must be odd and > 2");
  if (abs_prec <= v) {
    // No digit of the unit is representable at this precision.
    return zero(p, abs_prec < v ? abs_prec : v);
  }
  int rel = abs_prec - v;
  std::int64_t m = pow_i64(p, rel);
  std::int64_t uu = u % m;
  if (uu < 0) uu += m;
  if (uu == 0) return zero(p, abs_prec);
  PAdic x;
  x.p_ = p;
  x.v_ = v;
  x.u_ = uu;
  x.abs_ = abs_prec;
  x.canonicalize();
  return x;
}

void PAdic::canonicalize() {
  // Pull p-factors out of the unit part (after modular reduction the stored
  // residue may have picked some up).
  if (u_ == 0) {
    v_ = kInf;
    return;
  }
  while (u_ % p_ == 0) {
    u_ /= p_;
    ++v_;
    if (v_ >= abs_) {
      u_ = 0;
      v_ = kInf;
      return;
    }
  }
  std::int64_t m = pow_i64(p_, abs_ - v_);
  u_ %= m;
  PINT_CHECK(u_ > 0 && u_ % p_ != 0);
}

PAdic PAdic::from_int(std::int64_t p, std::int64_t n, int abs_prec) {
  if (n == 0) {
    PAdic z = zero(p, abs_prec);
    return z;
  }
  int v = 0;
  std::int64_t nn = n;
  while (nn % p == 0) {
    nn /= p;
    ++v;
  }
  return from_unit(p, v, nn, abs_prec);
}

PAdic PAdic::from_rat(std::int64_t p, const Rat& r, int abs_prec) {
  if (r.num == 0) return zero(p, abs_prec);
  int v = val_p(r, p);
  std::int64_t n = r.num, d = r.den;
  while (n % p == 0) n /= p;
  while (d % p == 0) d /= p;
  if (abs_prec <= v) return zero(p, abs_prec < v ? abs_prec : v);
  std::int64_t m = pow_i64(p, abs_prec - v);
  std::int64_t nn = n % m;
  if (nn < 0) nn += m;
  std::int64_t dd = d % m;
  if (dd < 0) dd += m;
  return from_unit(p, v, mul_mod(nn, inv_mod(dd, m), m), abs_prec);
}

int PAdic::val() const {
  if (is_zero())
    throw DomainError("valuation of zero at precision O(p^" +
                      (abs_ >= kInf ? std::string("inf")
                                    : std::to_string(abs_)) +
                      ") is only bounded below");
  return v_;
}

std::int64_t PAdic::unit_mod(int k) const {
  if (is_zero()) throw PrecisionLoss("unit part of zero");
  PINT_CHECK(k >= 1);
  if (rel_prec() < k)
    throw PrecisionLoss("unit known mod p^" + std::to_string(rel_prec()) +
                        ", requested mod p^" + std::to_string(k));
  return u_ % pow_i64(p_, k);
}

std::int64_t PAdic::residue(int k) const {
  PINT_CHECK(k >= 0);
  if (k == 0) return 0;
  if (is_zero()) {
    if (abs_ < k) throw PrecisionLoss("residue beyond precision of zero");
    return 0;
  }
  if (v_ < 0) throw DomainError("residue of a value with negative valuation");
  if (abs_ < k) throw PrecisionLoss("residue beyond absolute precision");
  if (v_ >= k) return 0;
  std::int64_t m = pow_i64(p_, k);
  return mul_mod(u_ % m, pow_i64(p_, v_) % m, m);
}

PAdic PAdic::truncated(int a) const {
  if (a > abs_) throw PrecisionLoss("cannot raise absolute precision");
  if (is_zero()) return zero(p_, a);
  return from_unit(p_, v_, u_, a);
}

PAdic operator+(const PAdic& a, const PAdic& b) {
  require_same_prime(a, b);
  int prec = a.abs_ < b.abs_ ? a.abs_ : b.abs_;
  if (a.is_zero() && b.is_zero()) return PAdic::zero(a.p_, prec);
  if (a.is_zero()) return b.truncated(prec);
  if (b.is_zero()) return a.truncated(prec);
  int v0 = a.v_ < b.v_ ? a.v_ : b.v_;
  if (v0 >= prec) return PAdic::zero(a.p_, prec);
  std::int64_t m = pow_i64(a.p_, prec - v0);
  std::int64_t s = 0;
  if (a.v_ - v0 < prec - v0)
    s += mul_mod(a.u_ % m, pow_i64(a.p_, a.v_ - v0) % m, m);
  if (b.v_ - v0 < prec - v0)
    s = (s + mul_mod(b.u_ % m, pow_i64(b.p_, b.v_ - v0) % m, m)) % m;
  return PAdic::from_unit(a.p_, v0, s, prec);
}

PAdic PAdic::operator-() const {
  if (is_zero()) return *this;
  std::int64_t m = pow_i64(p_, abs_ - v_);
  return from_unit(p_, v_, m - u_, abs_);
}

PAdic operator-(const PAdic& a, const PAdic& b) { return a + (-b); }

PAdic operator*(const PAdic& a, const PAdic& b) {
  require_same_prime(a, b);
  if (a.is_zero() || b.is_zero()) {
    // v(ab) >= abs(zero factor) + val_bound(other): all digits unknown.
    long prec = static_cast<long>(a.is_zero() ? a.abs_ : a.v_) +
                static_cast<long>(b.is_zero() ? b.abs_ : b.v_);
    if (prec > PAdic::kInf) prec = PAdic::kInf;
    return PAdic::zero(a.p_, static_cast<int>(prec));
  }
  int rel = a.rel_prec() < b.rel_prec() ? a.rel_prec() : b.rel_prec();
  std::int64_t m = pow_i64(a.p_, rel);
  return PAdic::from_unit(a.p_, a.v_ + b.v_, mul_mod(a.u_ % m, b.u_ % m, m),
                          a.v_ + b.v_ + rel);
}

PAdic PAdic::inv() const {
  if (is_zero()) {
    if (abs_ >= kInf) throw DomainError("division by exact zero");
    throw PrecisionLoss("inverting a value that is zero to precision");
  }
  std::int64_t m = pow_i64(p_, rel_prec());
  return from_unit(p_, -v_, inv_mod(u_, m), -v_ + rel_prec());
}

PAdic operator/(const PAdic& a, const PAdic& b) { return a * b.inv(); }

PAdic PAdic::pow(int e) const {
  if (e == 0) {
    PINT_CHECK_MSG(!is_zero(), "0^0");
    return from_int(p_, 1, rel_prec());
  }
  if (e < 0) return inv().pow(-e);
  if (is_zero()) {
    long prec = static_cast<long>(abs_) * e;
    return zero(p_, prec > kInf ? kInf : static_cast<int>(prec));
  }
  std::int64_t m = pow_i64(p_, rel_prec());
  std::int64_t u = pow_mod(u_, e, m);
  long v = static_cast<long>(v_) * e;
  PINT_CHECK(v < kInf && v > -kInf);
  return from_unit(p_, static_cast<int>(v), u, static_cast<int>(v) + rel_prec());
}

bool operator==(const PAdic& a, const PAdic& b) {
  require_same_prime(a, b);
  int prec = a.abs_ < b.abs_ ? a.abs_ : b.abs_;
  PAdic ta = a.truncated(prec), tb = b.truncated(prec);
  if (ta.is_zero() || tb.is_zero()) return ta.is_zero() && tb.is_zero();
  return ta.v_ == tb.v_ && ta.u_ == tb.u_;
}

int legendre(std::int64_t a, std::int64_t p) {
  PINT_CHECK_MSG(p > 2, "legendre defined for odd primes");
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  std::int64_t r = pow_mod(a, (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

PAdic PAdic::sqrt() const {
  if (is_zero()) {
    if (abs_ >= kInf) return *this;  // sqrt of exact zero
    throw PrecisionLoss("sqrt of a value that is zero to precision");
  }
  if (v_ % 2 != 0)
    throw DomainError("sqrt: odd valuation " + std::to_string(v_));
  if (legendre(u_ % p_, p_) != 1)
    throw DomainError("sqrt: unit part is not a quadratic residue");
  int rel = rel_prec();
  // Hensel: find the root mod p, then lift doubling the precision each step.
  std::int64_t r = 0;
  for (std::int64_t c = 1; c < p_; ++c) {
    if (mul_mod(c, c, p_) == u_ % p_) {
      r = c;
      break;
    }
  }
  PINT_CHECK(r != 0);
  int have = 1;
  while (have < rel) {
    int next = have * 2 < rel ? have * 2 : rel;
    std::int64_t mm = pow_i64(p_, next);
    // r <- (r + u/r) / 2 mod p^next
    std::int64_t inv_r = inv_mod(r % mm, mm);
    std::int64_t t = mul_mod(u_ % mm, inv_r, mm);
    t = (t + r) % mm;
    t = mul_mod(t, inv_mod(2 % mm, mm), mm);
    r = t;
    have = next;
  }
  // y known mod p^(abs - v/2): relative precision rel is preserved.
  return from_unit(p_, v_ / 2, r, v_ / 2 + rel);
}

bool PAdic::is_square() const {
  if (is_zero()) {
    if (abs_ >= kInf) return true;
    throw PrecisionLoss("is_square of a value that is zero to precision");
  }
  return v_ % 2 == 0 && legendre(u_ % p_, p_) == 1;
}

bool PAdic::is_square_mod(const PAdic& x, int m) {
  PINT_CHECK(m >= 1);
  if (x.abs_ < m)
    throw PrecisionLoss("is_square_mod: value not known mod p^" +
                        std::to_string(m));
  if (x.is_zero() || x.v_ >= m) return true;  // 0 is a square
  // For odd p and v(x) < m: x = y^2 + O(p^m) forces v even and the unit a
  // residue (the unit is determined mod p^(m-v), m-v >= 1).
  return x.v_ % 2 == 0 && legendre(x.u_ % x.p_, x.p_) == 1;
}

Angle PAdic::psi_angle() const {
  if (abs_ < 0)
    throw PrecisionLoss("additive character needs the value known mod Z_p");
  if (is_zero() || v_ >= 0) return Angle::zero();
  std::int64_t den = pow_i64(p_, -v_);
  std::int64_t frac = u_ % den;  // x = frac/den + integer part
  return Angle::make(-static_cast<__int128>(frac), den);
}

std::string PAdic::str() const {
  std::ostringstream os;
  if (is_zero()) {
    os << "O(" << p_ << '^';
    if (abs_ >= kInf)
      os << "inf";
    else
      os << abs_;
    os << ')';
    return os.str();
  }
  os << p_ << '^' << v_ << '*' << u_ << " + O(" << p_ << '^' << abs_ << ')';
  return os.str();
}

}  // namespace pint
