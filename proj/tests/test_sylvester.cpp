// SPDX-License-Identifier: MIT
//
// The worked example over Q_3(sqrt(-3)): exact embedding parameters, the
// two depth-four characters rebuilt from their generator tables, the twist
// intermediates, and the newform period in both residue classes of the
// auxiliary prime.  Every value here is checked against the period engine
// itself (certified brute-force sums), so the closed answers beta = 1 and
// beta = 1/2 are cross-validated rather than merely asserted.

#include "pint/sylvester.hpp"

#include <memory>
#include <vector>

#include "doctest.h"
#include "pint/errors.hpp"

using namespace pint;

namespace {

constexpr int kPrec = 20;
constexpr std::int64_t kP = 3;

QuadExt table_field() { return QuadExt::make(kP, Rat(-3), kPrec); }

PAdic scalar(const Rat& r) { return PAdic::from_rat(kP, r, kPrec); }

}  // namespace

TEST_CASE("embedding parameters: exact entries and residue patterns") {
  // hand-expanded entries for one parameter in each residue class
  const SylvesterParams s7 = sylvester_params(7);
  CHECK(s7.p_mod_9 == 7);
  CHECK(s7.a == Rat(387, 7));
  CHECK(s7.b == Rat(-806, 7));
  CHECK(s7.c == Rat(62, 7));

  const SylvesterParams s13 = sylvester_params(13);
  CHECK(s13.p_mod_9 == 4);
  CHECK(s13.a == Rat(969, 13));
  CHECK(s13.b == Rat(-1982, 13));
  CHECK(s13.c == Rat(158, 13));

  for (std::int64_t P : {std::int64_t{7}, std::int64_t{13}, std::int64_t{31},
                         std::int64_t{43}}) {
    const SylvesterParams sp = sylvester_params(P);
    // determinant identity, rechecked here independently
    CHECK(Rat(0) - sp.a * sp.a - Rat(3) * sp.b * sp.c == Rat(3));
    // divisibility pattern of the diagonal entry
    CHECK(val_p(sp.a, kP) == (sp.p_mod_9 == 4 ? 1 : 2));
    // the unipotent parameter a/3 is a 3-adic integer in both classes,
    // a unit exactly when P = 4 mod 9
    CHECK(val_p(sp.a / Rat(3), kP) == (sp.p_mod_9 == 4 ? 0 : 1));
    // b = P mod 9 in both classes
    CHECK(val_p(sp.b - Rat(P), kP) >= 2);
    // c mod 9 depends on the class
    CHECK(val_p(sp.c - (sp.p_mod_9 == 4 ? Rat(-1) : Rat(5)), kP) >= 2);
  }

  CHECK_THROWS_AS(sylvester_params(2), BadResidue);    // 2 mod 9
  CHECK_THROWS_AS(sylvester_params(5), BadResidue);    // 5 mod 9
  CHECK_THROWS_AS(sylvester_params(11), BadResidue);   // 2 mod 9
  CHECK_THROWS_AS(sylvester_params(19), BadResidue);   // 1 mod 9
  CHECK_THROWS_AS(sylvester_params(-7), BadResidue);
}

TEST_CASE("embedding matrix: square, determinant, conjugation identity") {
  for (std::int64_t P : {std::int64_t{7}, std::int64_t{13}}) {
    const SylvesterParams sp = sylvester_params(P);
    const Mat2 img = sylvester_image(sp, kPrec);
    CHECK(img.a == scalar(sp.a));
    CHECK(img.b == scalar(sp.b / Rat(9)));
    CHECK(img.c == scalar(Rat(27) * sp.c));
    CHECK(img.d == scalar(Rat(0) - sp.a));

    // the image of sqrt(-3) squares to -3 and has determinant 3
    CHECK(img * img == Mat2::diag(scalar(Rat(-3)), scalar(Rat(-3))));
    CHECK(img.det() == scalar(Rat(3)));

    // M = [[-9c, a/3],[0,1]]; construction rechecks the conjugation
    // identity img == M^{-1} embed(sqrt(D)) M internally
    const Mat2 M = sylvester_conjugator(sp, kPrec);
    CHECK(M.a == scalar(Rat(-9) * sp.c));
    CHECK(M.b == scalar(sp.a / Rat(3)));
    const QuadExt E = table_field();
    CHECK(M.inv() * embed(sqrtD(E, kPrec)) * M == img);
  }
}

TEST_CASE("depth-four value tables extend to characters") {
  const QuadExt E = table_field();
  const MultChar th = theta3_table(E, kPrec);
  CHECK(th.conductor() == 4);

  // the five pinned values read back
  CHECK(th.eval(elem_int(E, -1, 0, kPrec)) == Angle::half());
  CHECK(th.eval(elem_int(E, 1, 1, kPrec)) == Angle::make(2, 3));
  CHECK(th.eval(elem_int(E, 1, -1, kPrec)) == Angle::make(1, 3));
  CHECK(th.eval(elem_int(E, 1, 3, kPrec)) == Angle::make(1, 3));
  CHECK(th.at_uniformizer() == Angle::make(1, 4));

  // not trivial on F^x (that is the companion twist's job to fix)
  CHECK(!th.trivial_on_F(kPrec));

  for (int pm : {4, 7}) {
    const MultChar ch = chi3_table(E, pm, kPrec);
    CHECK(ch.conductor() == 4);
    CHECK(ch.trivial_on_F(kPrec));
    const Angle plus = pm == 4 ? Angle::make(1, 3) : Angle::make(2, 3);
    CHECK(ch.eval(elem_int(E, 1, 1, kPrec)) == plus);
    CHECK(ch.eval(elem_int(E, 1, 3, kPrec)) == Angle::make(1, 3));
    CHECK(ch.at_uniformizer() == Angle::zero());
    // the value on 1 - sqrt(D) is forced: the product with 1 + sqrt(D)
    // is the norm 4, on which chi is trivial
    CHECK(ch.eval(elem_int(E, 1, -1, kPrec)) == plus.times(-1));
    // cubic structure: (1 + sqrt(D))^3 = -8 lies in F^x
    CHECK(ch.eval(elem_int(E, -8, 0, kPrec)) == Angle::zero());
    CHECK(plus.times(3) == Angle::zero());
  }

  // homomorphism spot checks across a generating set
  const std::vector<EElem> els = {
      elem_int(E, -1, 0, kPrec),  elem_int(E, 1, 1, kPrec),
      elem_int(E, 1, -1, kPrec),  elem_int(E, 1, 3, kPrec),
      elem_int(E, 2, 0, kPrec),   elem_int(E, 1, 4, kPrec),
      elem_int(E, -2, 3, kPrec),  elem_int(E, 4, 1, kPrec),
  };
  const MultChar ch4 = chi3_table(E, 4, kPrec);
  for (const EElem& x : els)
    for (const EElem& y : els) {
      CHECK(th.eval(x * y) == th.eval(x) + th.eval(y));
      CHECK(ch4.eval(x * y) == ch4.eval(x) + ch4.eval(y));
    }
  // and theta(-8) = 3 * theta(1 + sqrt(D)) = 0 on the cubic relation
  CHECK(th.eval(elem_int(E, -8, 0, kPrec)) == Angle::zero());

  // a table that cannot extend: order-four value on a cube root class
  auto cls = std::make_shared<UnitClasses>(E, 4);
  const std::vector<std::pair<EElem, Angle>> bad = {
      {elem_int(E, -1, 0, kPrec), Angle::half()},
      {elem_int(E, 1, 1, kPrec), Angle::make(2, 3)},
      {elem_int(E, 1, -1, kPrec), Angle::make(1, 3)},
      {elem_int(E, 1, 3, kPrec), Angle::make(1, 4)},
  };
  CHECK_THROWS_AS(char_from_generators(cls, bad, Angle::make(1, 4)),
                  InconsistentTable);
  // an under-generating table
  const std::vector<std::pair<EElem, Angle>> small = {
      {elem_int(E, -1, 0, kPrec), Angle::half()},
  };
  CHECK_THROWS_AS(char_from_generators(cls, small, Angle::zero()),
                  InconsistentTable);

  // the tables are specific to this field
  const QuadExt wrong = QuadExt::make(5, Rat(-5), kPrec);
  CHECK_THROWS_AS(theta3_table(wrong, kPrec), DomainError);
  CHECK_THROWS_AS(chi3_table(E, 5, kPrec), BadResidue);
}

TEST_CASE("twist intermediates and the inducing character") {
  const QuadExt E = table_field();
  const TwistedInducing ti = sylvester_theta(E, kPrec);

  // the quartic constant of E/F and the companion's uniformizer value are
  // both -i
  CHECK(ti.lambda == Angle::make(3, 4));
  CHECK(ti.delta_at_unif == Angle::make(3, 4));

  // trace-zero parameter of the table character: class -1/27 + (1/9)Z_3,
  // canonical representative 2/27, pinned modulo pi^{-3}
  CHECK(ti.twist.alpha.y == Rat(2, 27));
  CHECK(val_p(ti.twist.alpha.y - Rat(-1, 27), kP) >= -2);
  CHECK(ti.twist.alpha.amb == -3);

  // the companion restricts to the quadratic residue character on units
  CHECK(ti.twist.delta.eval(elem_int(E, 2, 0, kPrec)) == Angle::half());
  CHECK(ti.twist.delta.eval(elem_int(E, 4, 0, kPrec)) == Angle::zero());

  // theta = Theta * delta: conductor 4, trivial on F^x, and the quartic
  // uniformizer values cancel (i times -i)
  CHECK(ti.twist.theta.conductor() == 4);
  CHECK(ti.twist.theta.trivial_on_F(kPrec));
  CHECK(ti.twist.theta.at_uniformizer() == Angle::zero());
  CHECK(ti.twist.theta.eval(elem_int(E, -1, 0, kPrec)) == Angle::zero());

  // the induced representation datum
  const Supercuspidal sc = classify(ti.twist.theta, kPrec);
  CHECK(sc.c_theta == 4);
  CHECK(sc.c_pi == 5);
  CHECK(sc.n_level == 2);
  CHECK(sc.s == Rat(-1, 2));
}

TEST_CASE("character pair verdicts per residue class") {
  const CharacterPairReport r7 = character_pair_report(7, kPrec);
  CHECK(r7.nu_trivial);
  CHECK(r7.c_nu == 0);
  CHECK(r7.l == 0);
  CHECK(r7.branch == "single-class");
  CHECK(r7.checks_ok);
  CHECK(!r7.y_nu.has_value());

  const CharacterPairReport r4 = character_pair_report(4, kPrec);
  CHECK(!r4.nu_trivial);
  CHECK(r4.c_nu == 2);
  CHECK(r4.l == 1);
  CHECK(r4.branch == "critical-depth");
  CHECK(r4.checks_ok);
  REQUIRE(r4.y_nu.has_value());
  CHECK(*r4.y_nu == Rat(2, 9));
  CHECK(val_p(*r4.y_nu - Rat(-1, 9), kP) >= -1);
}

TEST_CASE("single-class mechanism: one translate carries the whole period") {
  // P = 7 mod 9: the character product is trivial and the unipotent
  // parameter a/3 is deep, so exactly the translate on the -s class pairs
  // to the full quotient volume 2 and every other term dies.
  const SylvesterParams sp = sylvester_params(7);
  const QuadExt E = table_field();
  const TwistedInducing ti = sylvester_theta(E, kPrec);
  const Supercuspidal sc = classify(ti.twist.theta, kPrec);
  const MultChar chi = chi3_table(E, 7, kPrec);
  const Rat u = sp.a / Rat(3);

  // -s = 1/2 = 2 mod 3; +s = -1/2 = 1 mod 3
  CHECK(predicted_translate_value(sc, chi, u, Rat(2)) == Rat(2));
  CHECK(predicted_translate_value(sc, chi, u, Rat(1)) == Rat(0));

  // certified direct integrals agree
  for (std::int64_t x : {1, 2}) {
    const TestVector tv = translated_vector(
        sc, Mat2::test_matrix(PAdic::from_int(kP, x, kPrec),
                              scalar(u), kPrec));
    const IntegralResult r = period_norm(sc, chi, tv);
    CHECK(r.certified);
    CHECK(r.value == Cyclo::rational(x == 2 ? Rat(2) : Rat(0)));
  }
}

TEST_CASE("critical-depth mechanism: degenerate root at a unit unipotent") {
  // P = 4 mod 9: the product character keeps conductor 2, the unipotent
  // parameter a/3 is a unit, and the residue criterion degenerates to a
  // single class carrying value 1.
  const SylvesterParams sp = sylvester_params(13);
  const QuadExt E = table_field();
  const TwistedInducing ti = sylvester_theta(E, kPrec);
  const Supercuspidal sc = classify(ti.twist.theta, kPrec);
  const MultChar chi = chi3_table(E, 4, kPrec);
  const Rat u = sp.a / Rat(3);
  CHECK(val_p(u, kP) == 0);

  const SolveResult sol = solve_test_vector_equation(sc, chi, u);
  CHECK(sol.l == 1);
  CHECK(sol.modulus == 2);
  CHECK(sol.degenerate);  // discriminant vanishes mod 9
  REQUIRE(sol.solutions.size() == 1);
  const Rat root = sol.solutions.front();

  CHECK(predicted_translate_value(sc, chi, u, root) == Rat(1));
  const Rat other = root == Rat(1) ? Rat(2) : Rat(1);
  CHECK(predicted_translate_value(sc, chi, u, other) == Rat(0));

  for (const Rat& w : {root, other}) {
    const TestVector tv = translated_vector(
        sc, Mat2::test_matrix(scalar(w), scalar(u), kPrec));
    const IntegralResult r = period_norm(sc, chi, tv);
    CHECK(r.certified);
    CHECK(r.value == Cyclo::rational(w == root ? Rat(1) : Rat(0)));
  }
}

TEST_CASE("newform period and admissible ratio in both classes") {
  for (std::int64_t P : {std::int64_t{7}, std::int64_t{43}}) {
    const SylvesterPeriod sp = sylvester_period(P, kPrec);
    CHECK(sp.beta == Rat(1));
    CHECK(sp.ratio == Rat(2));
    CHECK(sp.certified);
    CHECK(sp.conjugated_mode_agrees);
    CHECK(sp.chars.branch == "single-class");
  }
  for (std::int64_t P : {std::int64_t{13}, std::int64_t{31}}) {
    const SylvesterPeriod sp = sylvester_period(P, kPrec);
    CHECK(sp.beta == Rat(1, 2));
    CHECK(sp.ratio == Rat(4));
    CHECK(sp.certified);
    CHECK(sp.conjugated_mode_agrees);
    CHECK(sp.chars.branch == "critical-depth");
  }
}
