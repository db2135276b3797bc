// SPDX-License-Identifier: MIT
//
// Truncated p-adic scalars: arithmetic against the rational-number oracle,
// precision propagation, square roots, squares modulo p^m, additive
// character angles.

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pint/padic.hpp"

using namespace pint;

namespace {
constexpr int kPrec = 12;

Rat random_rat(std::mt19937_64& rng, std::int64_t p) {
  std::uniform_int_distribution<std::int64_t> num(-200, 200);
  // denominators with controlled p-part so valuations spread out
  std::uniform_int_distribution<int> vden(0, 2);
  std::uniform_int_distribution<std::int64_t> den(1, 12);
  std::int64_t d = den(rng) * pow_i64(p, vden(rng));
  std::int64_t n = num(rng);
  if (n == 0) n = 1;
  return Rat(n, d);
}
}  // namespace

TEST_CASE("integer and rational constructors agree with valuations") {
  PAdic x = PAdic::from_int(3, 18, kPrec);
  CHECK(x.val() == 2);
  CHECK(x.unit_mod(1) == 2);
  CHECK(PAdic::from_rat(3, Rat(1, 27), kPrec).val() == -3);
  CHECK(PAdic::from_int(3, 0, 4).is_zero());
  CHECK(PAdic::from_int(3, 81, 3).is_zero());  // 81 = O(3^3) at this precision
  CHECK(PAdic::from_int(5, -1, 4).unit_mod(4) == 624);
}

TEST_CASE("field operations match the rational oracle") {
  for (std::int64_t p : {3, 5, 7}) {
    std::mt19937_64 rng(0xC0FFEE + p);
    for (int i = 0; i < 300; ++i) {
      Rat a = random_rat(rng, p), b = random_rat(rng, p);
      PAdic xa = PAdic::from_rat(p, a, kPrec);
      PAdic xb = PAdic::from_rat(p, b, kPrec);
      CHECK(xa + xb == PAdic::from_rat(p, a + b, kPrec));
      CHECK(xa - xb == PAdic::from_rat(p, a - b, kPrec));
      CHECK(xa * xb == PAdic::from_rat(p, a * b, kPrec));
      CHECK(xa / xb == PAdic::from_rat(p, a / b, kPrec));
    }
  }
}

TEST_CASE("ultrametric inequality, with equality at distinct valuations") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    Rat a = random_rat(rng, 3), b = random_rat(rng, 3);
    PAdic xa = PAdic::from_rat(3, a, kPrec);
    PAdic xb = PAdic::from_rat(3, b, kPrec);
    PAdic s = xa + xb;
    int va = xa.val(), vb = xb.val();
    int lo = va < vb ? va : vb;
    CHECK(s.val_bound() >= lo);
    if (va != vb) CHECK(s.val() == lo);
  }
}

TEST_CASE("precision propagates through truncation and arithmetic") {
  PAdic x = PAdic::from_int(3, 1, 5);
  PAdic z2 = PAdic::zero(3, 2);
  CHECK((x + z2).abs_prec() == 2);
  // 1 + O(3^2) equals 1 + 9*5 at the coarser precision
  CHECK(x.truncated(2) == PAdic::from_int(3, 1 + 9 * 5, 5));
  CHECK_THROWS_AS(x.truncated(9), PrecisionLoss);
  CHECK_THROWS_AS(z2.inv(), PrecisionLoss);
  CHECK_THROWS_AS(PAdic::zero(3, 3).val(), DomainError);
  CHECK(PAdic::zero(3, 3).val_bound() == 3);
  CHECK_THROWS_AS(x.unit_mod(6), PrecisionLoss);
  // multiplying by a truncated zero only bounds the valuation
  PAdic prod = z2 * PAdic::from_int(3, 9, 8);
  CHECK(prod.is_zero());
  CHECK(prod.abs_prec() == 4);
  CHECK_THROWS_AS(PAdic::exact_zero(3).inv(), DomainError);
}

TEST_CASE("negation and subtraction corner cases") {
  PAdic x = PAdic::from_int(3, 5, 6);
  CHECK((x - x).is_zero());
  CHECK((x - x).abs_prec() == 6);
  CHECK((x + (-x)).is_zero());
  // units cancel down to a deeper valuation: 5 + 4 = 9
  PAdic y = PAdic::from_int(3, 4, 6);
  CHECK((x + y).val() == 2);
}

TEST_CASE("square roots by Hensel lifting") {
  for (std::int64_t p : {3, 5, 7}) {
    std::mt19937_64 rng(7 * p);
    int checked = 0;
    while (checked < 50) {
      Rat a = random_rat(rng, p);
      PAdic x = PAdic::from_rat(p, a, kPrec);
      PAdic sq = x * x;
      PAdic r = sq.sqrt();
      CHECK(r * r == sq);
      CHECK(r.val() == x.val());
      ++checked;
    }
  }
  CHECK_THROWS_AS(PAdic::from_int(3, 3, kPrec).sqrt(), DomainError);
  CHECK_THROWS_AS(PAdic::from_int(3, 2, kPrec).sqrt(), DomainError);
  CHECK_THROWS_AS(PAdic::zero(3, 4).sqrt(), PrecisionLoss);
  CHECK(PAdic::from_int(5, 2, 1).is_square() == false);
  CHECK(PAdic::from_int(5, 4, 1).is_square() == true);
}

TEST_CASE("squares modulo p^m match the exhaustive oracle") {
  for (std::int64_t p : {3, 5}) {
    for (int m = 1; m <= 4; ++m) {
      std::int64_t mod = pow_i64(p, m);
      for (std::int64_t r = 0; r < mod; ++r) {
        PAdic x = PAdic::from_int(p, r, kPrec);
        CHECK(PAdic::is_square_mod(x, m) == oracle::is_square_mod(p, m, r));
      }
    }
  }
  CHECK_THROWS_AS(
      PAdic::is_square_mod(PAdic::from_int(3, 1, 2), 3), PrecisionLoss);
}

TEST_CASE("additive character angle is -x mod Z_p") {
  CHECK(PAdic::from_rat(3, Rat(1, 3), kPrec).psi_angle() == Angle(2, 3));
  CHECK(PAdic::from_rat(3, Rat(4, 3), kPrec).psi_angle() == Angle(2, 3));
  CHECK(PAdic::from_rat(3, Rat(2, 9), kPrec).psi_angle() == Angle(7, 9));
  CHECK(PAdic::from_int(3, 7, kPrec).psi_angle() == Angle::zero());
  CHECK(PAdic::zero(3, 2).psi_angle() == Angle::zero());
  CHECK_THROWS_AS(PAdic::zero(3, -1).psi_angle(), PrecisionLoss);
  // additivity: angle(x + y) = angle(x) + angle(y)
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Rat a = random_rat(rng, 3), b = random_rat(rng, 3);
    PAdic xa = PAdic::from_rat(3, a, kPrec);
    PAdic xb = PAdic::from_rat(3, b, kPrec);
    CHECK((xa + xb).psi_angle() == xa.psi_angle() + xb.psi_angle());
  }
}

TEST_CASE("residues") {
  PAdic x = PAdic::from_int(3, 25, 6);
  CHECK(x.residue(3) == 25);
  CHECK(x.residue(2) == 7);
  CHECK(PAdic::from_int(3, 9, 6).residue(2) == 0);
  CHECK_THROWS_AS(PAdic::from_rat(3, Rat(1, 3), 6).residue(2), DomainError);
  CHECK_THROWS_AS(x.residue(7), PrecisionLoss);
}

TEST_CASE("powers") {
  PAdic x = PAdic::from_rat(3, Rat(2, 3), 8);
  CHECK(x.pow(3) == PAdic::from_rat(3, Rat(8, 27), 8));
  CHECK(x.pow(-2) == PAdic::from_rat(3, Rat(9, 4), 8));
  CHECK(x.pow(0) == PAdic::from_int(3, 1, 8));
}

TEST_CASE("legendre symbol") {
  CHECK(legendre(1, 3) == 1);
  CHECK(legendre(2, 3) == -1);
  CHECK(legendre(-1, 3) == -1);
  CHECK(legendre(6, 3) == 0);
  CHECK(legendre(4, 5) == 1);
  CHECK(legendre(2, 5) == -1);
  CHECK(legendre(-1, 5) == 1);
}
