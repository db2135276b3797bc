// SPDX-License-Identifier: MIT

#include "pint/sylvester.hpp"

#include <memory>
#include <utility>
#include <vector>

#include "pint/errors.hpp"

namespace pint {

namespace {

constexpr std::int64_t kP = 3;

QuadExt base_field(int prec) { return QuadExt::make(kP, Rat(-3), prec); }

// Congruence of 3-adic numbers given exactly: r = t mod 3^k.
bool congruent_mod(const Rat& r, const Rat& t, int k) {
  const Rat d = r - t;
  return d.is_zero() || val_p(d, kP) >= k;
}

void require_table_field(const QuadExt& E) {
  if (E.p != kP || E.d_rat != Rat(-3))
    throw DomainError("value tables are specific to Q_3(sqrt(-3))");
}

}  // namespace

SylvesterParams sylvester_params(std::int64_t P) {
  const int r = static_cast<int>(P % 9);
  if (P <= 0 || (r != 4 && r != 7))
    throw BadResidue("embedding parameter must be 4 or 7 mod 9, got " +
                     std::to_string(P));
  SylvesterParams sp;
  sp.P = P;
  sp.p_mod_9 = r;
  sp.a = Rat(4 * P * P + 17 * P + 72, P);
  sp.b = Rat(-8 * P * P - 36 * P - 162, P);
  sp.c = Rat(2 * P * P + 8 * P + 32, 3 * P);
  PINT_CHECK_MSG(Rat(0) - sp.a * sp.a - Rat(3) * sp.b * sp.c == Rat(3),
                 "embedding determinant identity -a^2 - 3bc = 3");
  PINT_CHECK_MSG(val_p(sp.a, kP) == (r == 4 ? 1 : 2),
                 "valuation pattern of the diagonal entry");
  PINT_CHECK_MSG(congruent_mod(sp.b, Rat(P), 2),
                 "upper entry residue b = P mod 9");
  PINT_CHECK_MSG(congruent_mod(sp.c, r == 4 ? Rat(-1) : Rat(5), 2),
                 "lower entry residue mod 9");
  return sp;
}

Mat2 sylvester_image(const SylvesterParams& sp, int prec) {
  Mat2 m = Mat2::diag(PAdic::from_rat(kP, sp.a, prec),
                      PAdic::from_rat(kP, Rat(0) - sp.a, prec));
  m.b = PAdic::from_rat(kP, sp.b / Rat(9), prec);
  m.c = PAdic::from_rat(kP, Rat(27) * sp.c, prec);
  return m;
}

Mat2 sylvester_conjugator(const SylvesterParams& sp, int prec) {
  const Mat2 M =
      Mat2::test_matrix(PAdic::from_rat(kP, Rat(-9) * sp.c, prec),
                        PAdic::from_rat(kP, sp.a / Rat(3), prec), prec);
  const QuadExt E = base_field(prec);
  PINT_CHECK_MSG(sylvester_image(sp, prec) ==
                     M.inv() * embed(sqrtD(E, prec)) * M,
                 "conjugation identity against the standard embedding");
  return M;
}

MultChar theta3_table(const QuadExt& E, int prec) {
  require_table_field(E);
  auto cls = std::make_shared<UnitClasses>(E, 4);
  const std::vector<std::pair<EElem, Angle>> gens = {
      {elem_int(E, -1, 0, prec), Angle::half()},
      {elem_int(E, 1, 1, prec), Angle::make(2, 3)},
      {elem_int(E, 1, -1, prec), Angle::make(1, 3)},
      {elem_int(E, 1, 3, prec), Angle::make(1, 3)},
  };
  MultChar th = char_from_generators(cls, gens, Angle::make(1, 4));
  PINT_CHECK_MSG(th.conductor() == 4, "table character has conductor 4");
  return th;
}

MultChar chi3_table(const QuadExt& E, int p_mod_9, int prec) {
  require_table_field(E);
  if (p_mod_9 != 4 && p_mod_9 != 7)
    throw BadResidue("residue class must be 4 or 7, got " +
                     std::to_string(p_mod_9));
  auto cls = std::make_shared<UnitClasses>(E, 4);
  // chi(1 - sqrt(-3)) is the inverse of chi(1 + sqrt(-3)): their product
  // is the norm 4, and chi is trivial on F^x.
  const Angle plus =
      p_mod_9 == 4 ? Angle::make(1, 3) : Angle::make(2, 3);
  const Angle minus =
      p_mod_9 == 4 ? Angle::make(2, 3) : Angle::make(1, 3);
  const std::vector<std::pair<EElem, Angle>> gens = {
      {elem_int(E, -1, 0, prec), Angle::zero()},
      {elem_int(E, 1, 1, prec), plus},
      {elem_int(E, 1, -1, prec), minus},
      {elem_int(E, 1, 3, prec), Angle::make(1, 3)},
  };
  MultChar ch = char_from_generators(cls, gens, Angle::zero());
  PINT_CHECK_MSG(ch.conductor() == 4, "table character has conductor 4");
  PINT_CHECK_MSG(ch.trivial_on_F(prec), "table character is trivial on F^x");
  return ch;
}

TwistedInducing sylvester_theta(const QuadExt& E, int prec) {
  MultChar big_theta = theta3_table(E, prec);
  TwistResult twist = langlands_twist(big_theta, prec);
  const Angle delta_at_unif = twist.delta.at_uniformizer();
  TwistedInducing out{std::move(big_theta), std::move(twist),
                      lambda_constant(E, Rat(1)), delta_at_unif};
  PINT_CHECK_MSG(out.twist.theta.conductor() == 4,
                 "twisted character keeps conductor 4");
  PINT_CHECK_MSG(out.twist.theta.trivial_on_F(prec),
                 "twisted character is trivial on F^x");
  return out;
}

CharacterPairReport character_pair_report(int p_mod_9, int prec) {
  const QuadExt E = base_field(prec);
  const TwistedInducing ti = sylvester_theta(E, prec);
  const MultChar chi = chi3_table(E, p_mod_9, prec);
  const MultChar nu = ti.twist.theta * chi.conjugated();

  CharacterPairReport r;
  r.p_mod_9 = p_mod_9;
  r.nu_trivial = nu.is_trivial();
  r.c_nu = nu.conductor();
  r.l = r.c_nu / 2;
  if (p_mod_9 == 7) {
    // The two depth-four characters cancel exactly; the period collapses to
    // a single deep-unipotent class.
    r.branch = "single-class";
    r.checks_ok = r.nu_trivial && r.c_nu == 0;
  } else {
    // The product keeps conductor 2; with the unit unipotent parameter a/3
    // the translate criterion runs at its critical depth.
    r.branch = "critical-depth";
    bool ok = !r.nu_trivial && r.c_nu == 2;
    if (ok) {
      const AlphaElement al = alpha_element(nu, prec);
      r.y_nu = al.y;
      ok = congruent_mod(al.y, Rat(-1, 9), -1);
    }
    r.checks_ok = ok;
  }
  return r;
}

SylvesterPeriod sylvester_period(std::int64_t P, int prec,
                                 const EngineConfig& cfg) {
  SylvesterPeriod out;
  out.params = sylvester_params(P);
  out.chars = character_pair_report(out.params.p_mod_9, prec);
  PINT_CHECK_MSG(out.chars.checks_ok, "character pair verdicts");

  const QuadExt E = base_field(prec);
  const TwistedInducing ti = sylvester_theta(E, prec);
  const Supercuspidal sc = classify(ti.twist.theta, prec);
  const MultChar chi = chi3_table(E, out.params.p_mod_9, prec);
  const Rat u = out.params.a / Rat(3);

  // The newform, translated by the conjugator, expands into the two
  // unipotent-translated minimal vectors [[x, a/3],[0,1]] phi0, x in {1,2};
  // in conjugated mode the same vectors pull back to diag(x/9, 1) phi0.
  std::vector<TestVector> std_terms, conj_terms;
  for (std::int64_t x : {1, 2}) {
    std_terms.push_back(translated_vector(
        sc, Mat2::test_matrix(PAdic::from_int(kP, x, prec),
                              PAdic::from_rat(kP, u, prec), prec)));
    conj_terms.push_back(translated_vector(
        sc, Mat2::diag(PAdic::from_rat(kP, Rat(x, 9), prec),
                       PAdic::from_int(kP, 1, prec))));
  }
  const Mat2 M = sylvester_conjugator(out.params, prec);

  bool certified = true;
  const auto half_pair_sum = [&](const std::vector<TestVector>& terms,
                                 const EmbeddingSpec& emb) {
    Rat total(0);
    for (const TestVector& t1 : terms)
      for (const TestVector& t2 : terms) {
        const IntegralResult r = period_integral(sc, chi, t1, t2, emb, cfg);
        certified = certified && r.certified;
        total = total + r.value.to_rat();
      }
    return total / Rat(2);
  };

  out.beta = half_pair_sum(std_terms, EmbeddingSpec::standard());
  const Rat beta_conj = half_pair_sum(conj_terms, EmbeddingSpec::conjugated(M));
  out.certified = certified;
  out.conjugated_mode_agrees = beta_conj == out.beta;
  PINT_CHECK_MSG(!out.beta.is_zero(), "newform period must not vanish");
  out.ratio = Rat(2) / out.beta;
  return out;
}

}  // namespace pint
