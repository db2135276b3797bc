// SPDX-License-Identifier: MIT
//
// Exact cyclotomic arithmetic: cyclotomic polynomials against textbook
// tables, root-of-unity algebra, Gauss-sum square roots, angle-sum assembly.

#include <random>

#include "doctest.h"
#include "pint/cyclo.hpp"
#include "pint/errors.hpp"

using namespace pint;

namespace {
Cyclo zeta(std::int64_t n, std::int64_t k) { return Cyclo::root(Angle(k, n)); }
}  // namespace

TEST_CASE("cyclotomic polynomials match the textbook tables") {
  using V = std::vector<std::int64_t>;
  CHECK(cyclotomic_poly(1) == V{-1, 1});
  CHECK(cyclotomic_poly(2) == V{1, 1});
  CHECK(cyclotomic_poly(3) == V{1, 1, 1});
  CHECK(cyclotomic_poly(4) == V{1, 0, 1});
  CHECK(cyclotomic_poly(6) == V{1, -1, 1});
  CHECK(cyclotomic_poly(9) == V{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_poly(12) == V{1, 0, -1, 0, 1});
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(360) == 96);
  CHECK(euler_phi(500) == 200);
}

TEST_CASE("roots of unity satisfy their defining relations") {
  CHECK(zeta(3, 1) * zeta(3, 1) * zeta(3, 1) == Cyclo::rational(Rat(1)));
  CHECK(zeta(3, 1) + zeta(3, 2) == Cyclo::rational(Rat(-1)));
  CHECK(zeta(12, 3) == zeta(4, 1));  // promotion equality
  CHECK(zeta(4, 1) * zeta(4, 1) == Cyclo::rational(Rat(-1)));
  CHECK(zeta(5, 1).conj() == zeta(5, 4));
  CHECK(zeta(7, 3).abs2() == Cyclo::rational(Rat(1)));
  // Phi_N(zeta_N) = 0, evaluated straight from the polynomial
  for (std::int64_t n : {3, 4, 6, 9, 12, 45}) {
    const auto& poly = cyclotomic_poly(n);
    Cyclo acc = Cyclo::zero();
    for (std::size_t i = 0; i < poly.size(); ++i)
      acc = acc + zeta(n, static_cast<std::int64_t>(i)).scaled(Rat(poly[i]));
    CHECK(acc.is_zero());
  }
}

TEST_CASE("ring axioms on random cyclotomic values") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> ord(1, 5);
  std::uniform_int_distribution<std::int64_t> coef(-4, 4);
  auto rand_val = [&]() {
    static const std::int64_t orders[] = {3, 4, 5, 6, 12};
    Cyclo v = Cyclo::rational(Rat(coef(rng)));
    std::int64_t n = orders[ord(rng) - 1];
    for (int i = 0; i < 2; ++i)
      v = v + zeta(n, coef(rng) % n + n).scaled(Rat(coef(rng)));
    return v;
  };
  for (int i = 0; i < 40; ++i) {
    Cyclo a = rand_val(), b = rand_val(), c = rand_val();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("abs2 of small sums") {
  // |1 + zeta_3|^2 = (1 + z)(1 + z^2) = 2 + z + z^2 = 1
  Cyclo v = Cyclo::rational(Rat(1)) + zeta(3, 1);
  CHECK(v.abs2() == Cyclo::rational(Rat(1)));
  // |1 + zeta_5|^2 = 2 + z + z^4 is real but not rational
  Cyclo w = Cyclo::rational(Rat(1)) + zeta(5, 1);
  Cyclo w2 = w.abs2();
  CHECK_FALSE(w2.is_rational());
  CHECK(w2 == Cyclo::rational(Rat(2)) + zeta(5, 1) + zeta(5, 4));
  CHECK(w2.conj() == w2);  // real
  CHECK_THROWS_AS(w2.to_rat(), DomainError);
}

TEST_CASE("Gauss sums define sqrt(q) with the classical sign") {
  for (std::int64_t q : {3, 5, 7, 11, 13}) {
    Cyclo r = Cyclo::sqrt_q(q);
    CHECK(r * r == Cyclo::rational(Rat(q)));
    auto a = r.approx();
    CHECK(a.real() > 0);               // positive real root
    CHECK(std::abs(a.imag()) < 1e-9);
    CHECK(std::abs(a.real() * a.real() - static_cast<double>(q)) < 1e-9);
  }
  // frozen explicit form for q = 5: g_5 = 1 + 2 zeta_5 + 2 zeta_5^4
  CHECK(Cyclo::sqrt_q(5) ==
        Cyclo::rational(Rat(1)) + zeta(5, 1).scaled(Rat(2)) +
            zeta(5, 4).scaled(Rat(2)));
  // frozen explicit form for q = 3: g_3 = 1 + 2 zeta_3 = i sqrt(3), and
  // sqrt(3) = -i * g_3
  CHECK(Cyclo::sqrt_q(3) ==
        Cyclo::root(Angle(3, 4)) *
            (Cyclo::rational(Rat(1)) + zeta(3, 1).scaled(Rat(2))));
}

TEST_CASE("angle sums accumulate, cancel and assemble") {
  AngleSum s;
  s.add(Angle(1, 3), Rat(2));
  s.add(Angle(1, 3), Rat(-2));
  CHECK(s.empty());
  s.add(Angle(1, 3), Rat(1));
  s.add(Angle(2, 3), Rat(1));
  CHECK(s.size() == 2);
  CHECK(s.value(360) == Cyclo::rational(Rat(-1)));

  AngleSum big;
  big.add(Angle(1, 500), Rat(1));
  CHECK_THROWS_AS(big.value(360), OrderBudgetExceeded);
  CHECK(big.value(500).order() == 500);
}

TEST_CASE("promotion validates divisibility and caps") {
  CHECK_THROWS_AS(zeta(3, 1).promoted(4), InternalError);
  Cyclo x = zeta(3, 1);
  CHECK(x.promoted(12).order() == 12);
  CHECK(x.promoted(12) == x);
}
