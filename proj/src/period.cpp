// SPDX-License-Identifier: MIT

#include "pint/period.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pint {

namespace {

// Residue in [0, p^k) of a rational with denominator prime to p.
std::int64_t residue_mod(const Rat& r, std::int64_t p, int k) {
  const std::int64_t m = pow_i64(p, k);
  PINT_CHECK_MSG(r.den % p != 0, "residue of a p-fractional rational");
  std::int64_t n = r.num % m;
  if (n < 0) n += m;
  return mul_mod(n, inv_mod(r.den % m, m), m);
}

PAdic p_one(std::int64_t p, int prec) { return PAdic::from_int(p, 1, prec); }

Mat2 diag_rat(std::int64_t p, const Rat& x, int prec) {
  return Mat2::diag(PAdic::from_rat(p, x, prec), p_one(p, prec));
}

// The twisted character nu = theta * (chi o conj) whose conductor drives
// every criterion below.
MultChar twisted_character(const Supercuspidal& sc, const MultChar& chi) {
  return sc.theta * chi.conjugated();
}

struct Criterion {
  int l;
  int modulus;
  Rat A, B, C;
};

// Coefficients of the residue criterion for the translate diag(v, 1) n(u):
//   A v^2 - B v + C = 0 mod p^modulus.
Criterion criterion_coefficients(const Supercuspidal& sc,
                                 const AlphaElement& a_nu, int l,
                                 const Rat& u) {
  const QuadExt& E = sc.E();
  const int n = sc.n_level;
  const Rat D = E.d_rat;
  Criterion c;
  c.l = l;
  c.modulus = n - l / 2;
  c.A = Rat(1) / (sc.s * sc.s);
  c.B = Rat(2) * (Rat(pow_i64(E.p, n)) * a_nu.y * D) - Rat(2) / sc.s;
  c.C = Rat(1) - D * u * u;
  return c;
}

struct LevelSum {
  Cyclo value;
  std::vector<SupportPoint> support;
};

LevelSum sum_at_depth(const Supercuspidal& sc, const MultChar& chi,
                      const TestVector& tv1, const TestVector& tv2,
                      const std::vector<Mat2>& inv2, const EmbeddingSpec& emb,
                      int m, const EngineConfig& cfg) {
  const QuadExt& E = sc.E();
  const auto reps = torus_representatives(E, m, sc.prec);
  const Rat w(1, pow_i64(E.p, m));
  const std::size_t ni = tv1.terms.size();
  const std::size_t nj = tv2.terms.size();
  std::vector<AngleSum> acc(ni * nj);
  std::vector<SupportPoint> support;
  std::optional<Mat2> m_inv;
  if (emb.is_conjugated()) m_inv = emb.M->inv();
  for (const auto& rep : reps) {
    Mat2 t_mat = embed(rep.t);
    if (m_inv) t_mat = (*m_inv) * t_mat * (*emb.M);
    const Angle chi_t = chi.eval(rep.t);
    bool hit = false;
    for (std::size_t j = 0; j < nj; ++j) {
      const Mat2 left = inv2[j] * t_mat;
      for (std::size_t i = 0; i < ni; ++i) {
        const auto phi = matrix_coefficient(sc, left * tv1.terms[i].g);
        if (!phi) continue;
        hit = true;
        acc[j * ni + i].add(*phi + chi_t, w);
      }
    }
    if (cfg.record_support && hit)
      support.push_back({rep.sqrt_d_coset, rep.y});
  }
  Cyclo total = Cyclo::zero();
  for (std::size_t j = 0; j < nj; ++j)
    for (std::size_t i = 0; i < ni; ++i) {
      const AngleSum& s = acc[j * ni + i];
      if (s.empty()) continue;
      total = total + tv1.terms[i].coeff * tv2.terms[j].coeff.conj() *
                          s.value(cfg.cyclo_cap);
    }
  return {total, std::move(support)};
}

}  // namespace

TestVector base_vector(const Supercuspidal& sc) {
  return {{TVTerm{Cyclo::rational(Rat(1)),
                  Mat2::identity(sc.E().p, sc.prec)}}};
}

TestVector translated_vector(const Supercuspidal& sc, const Mat2& g) {
  (void)sc;
  return {{TVTerm{Cyclo::rational(Rat(1)), g}}};
}

TestVector translated_vector(const TestVector& tv, const Mat2& g) {
  TestVector out;
  out.terms.reserve(tv.terms.size());
  for (const auto& term : tv.terms) out.terms.push_back({term.coeff, g * term.g});
  return out;
}

TestVector averaged_unit_vector(const Supercuspidal& sc) {
  const std::int64_t p = sc.E().p;
  const int k = (sc.n_level + 1) / 2;
  const std::int64_t pk = pow_i64(p, k);
  TestVector tv;
  for (std::int64_t x = 1; x < pk; ++x) {
    if (x % p == 0) continue;
    tv.terms.push_back(
        {Cyclo::rational(Rat(1)), diag_rat(p, Rat(x), sc.prec)});
  }
  PINT_CHECK(!tv.terms.empty());
  return tv;
}

std::vector<TorusRep> torus_representatives(const QuadExt& E, int m,
                                            int prec) {
  if (!E.ramified())
    throw UnramifiedUnsupported(
        "torus representatives are implemented for ramified extensions "
        "only");
  PINT_CHECK(m >= 0);
  const std::int64_t pm = pow_i64(E.p, m);
  std::vector<TorusRep> out;
  out.reserve(static_cast<std::size_t>(2 * pm));
  for (std::int64_t y = 0; y < pm; ++y)
    out.push_back({elem_rat(E, Rat(1), Rat(y), prec), false, Rat(y)});
  for (std::int64_t y = 0; y < pm; ++y)
    out.push_back(
        {elem_rat(E, Rat(y) * E.d_rat, Rat(1), prec), true, Rat(y)});
  return out;
}

IntegralResult period_integral(const Supercuspidal& sc, const MultChar& chi,
                               const TestVector& tv1, const TestVector& tv2,
                               const EmbeddingSpec& emb,
                               const EngineConfig& cfg) {
  const QuadExt& E = sc.E();
  if (!E.ramified())
    throw UnramifiedUnsupported("the period torus must be ramified");
  if (chi.field() != E)
    throw DomainError("torus character lives on a different field");
  if (!(sc.theta * chi).trivial_on_F(sc.prec))
    throw IncompatibleCentralCharacter(
        "theta * chi is nontrivial on F^x; the integrand does not descend "
        "to the quotient");
  PINT_CHECK(!tv1.terms.empty() && !tv2.terms.empty());

  std::vector<Mat2> inv2;
  inv2.reserve(tv2.terms.size());
  for (const auto& term : tv2.terms) inv2.push_back(term.g.inv());

  int m = std::max({sc.n_level, (chi.conductor() + 1) / 2, 1});
  LevelSum cur = sum_at_depth(sc, chi, tv1, tv2, inv2, emb, m, cfg);
  for (int round = 0; round <= cfg.max_refine; ++round) {
    LevelSum next = sum_at_depth(sc, chi, tv1, tv2, inv2, emb, m + 1, cfg);
    if (cur.value == next.value)
      return {cur.value, m, true, std::move(cur.support)};
    cur = std::move(next);
    ++m;
  }
  throw UnstableSum("period refinement exhausted its budget at depth " +
                    std::to_string(m));
}

IntegralResult period_norm(const Supercuspidal& sc, const MultChar& chi,
                           const TestVector& tv, const EmbeddingSpec& emb,
                           const EngineConfig& cfg) {
  return period_integral(sc, chi, tv, tv, emb, cfg);
}

SolveResult solve_test_vector_equation(const Supercuspidal& sc,
                                       const MultChar& chi, const Rat& u) {
  PINT_CHECK_MSG(sc.sc_case == SCCase::kRamified,
                 "residue criterion needs a ramified datum");
  const QuadExt& E = sc.E();
  const std::int64_t p = E.p;
  const MultChar nu = twisted_character(sc, chi);
  const int c_nu = nu.conductor();
  if (c_nu == 0)
    throw DomainError(
        "twisted character is unramified; use unramified_optimal_residue");
  PINT_CHECK_MSG(c_nu % 2 == 0, "twisted character conductor must be even");
  const int l = c_nu / 2;
  const int n = sc.n_level;
  if (l > n)
    throw UnsupportedCase(
        "twisted conductor exceeds the representation's range");
  const AlphaElement a_nu = alpha_element(nu, sc.prec);
  const Criterion c = criterion_coefficients(sc, a_nu, l, u);

  SolveResult out;
  out.l = l;
  out.modulus = c.modulus;
  out.A = c.A;
  out.B = c.B;
  out.C = c.C;
  out.delta = c.B * c.B - Rat(4) * c.A * c.C;
  out.delta_square = PAdic::is_square_mod(
      PAdic::from_rat(p, out.delta, c.modulus + 2), c.modulus);
  out.degenerate =
      out.delta.is_zero() || val_p(out.delta, p) >= c.modulus;
  out.center = c.B / (Rat(2) * c.A);

  const int k = (n + 1) / 2;
  const std::int64_t pk = pow_i64(p, k);
  for (std::int64_t r = 1; r < pk; ++r) {
    if (r % p == 0) continue;
    const Rat f = c.A * Rat(r) * Rat(r) - c.B * Rat(r) + c.C;
    if (f.is_zero() || val_p(f, p) >= c.modulus) out.solutions.push_back(Rat(r));
  }
  return out;
}

std::optional<Rat> unramified_optimal_residue(const Supercuspidal& sc,
                                              const MultChar& chi) {
  PINT_CHECK_MSG(sc.sc_case == SCCase::kRamified,
                 "residue criterion needs a ramified datum");
  const MultChar nu = twisted_character(sc, chi);
  if (nu.conductor() != 0)
    throw DomainError(
        "twisted character is ramified; use solve_test_vector_equation");
  const int k = (sc.n_level + 1) / 2;
  if (nu.is_trivial()) return Rat(residue_mod(-sc.s, sc.E().p, k));
  if ((sc.theta * chi).is_trivial())
    return Rat(residue_mod(sc.s, sc.E().p, k));
  return std::nullopt;
}

Rat predicted_translate_value(const Supercuspidal& sc, const MultChar& chi,
                              const Rat& u, const Rat& w) {
  PINT_CHECK_MSG(sc.sc_case == SCCase::kRamified,
                 "residue criterion needs a ramified datum");
  const QuadExt& E = sc.E();
  const std::int64_t p = E.p;
  const int n = sc.n_level;
  const int k = (n + 1) / 2;
  const std::int64_t w_res = residue_mod(w, p, k);
  PINT_CHECK_MSG(w_res % p != 0, "translate residue must be a unit");

  const bool u_deep = u.is_zero() || val_p(u, p) >= n / 2;
  if (u_deep) {
    if (w_res == residue_mod(sc.s, p, k))
      return (sc.theta * chi).is_trivial() ? Rat(2) : Rat(0);
    if (w_res == residue_mod(-sc.s, p, k))
      return twisted_character(sc, chi).is_trivial() ? Rat(2) : Rat(0);
  }

  const MultChar nu = twisted_character(sc, chi);
  const int c_nu = nu.conductor();
  if (c_nu == 0) {
    // Generic class, degenerate quadratic: only distinguished classes fire.
    if (u_deep) return Rat(0);
    throw UnsupportedCase(
        "translate value not established at this unipotent depth");
  }
  const int l = c_nu / 2;
  if (l > n)
    throw UnsupportedCase(
        "twisted conductor exceeds the representation's range");
  if (!u_deep) {
    const bool odd_gap_critical =
        ((n - l) % 2 == 1) && !u.is_zero() && val_p(u, p) == (n - l - 1) / 2;
    if (!odd_gap_critical)
      throw UnsupportedCase(
          "translate value not established at this unipotent depth");
  }

  const AlphaElement a_nu = alpha_element(nu, sc.prec);
  const Criterion c = criterion_coefficients(sc, a_nu, l, u);
  const Rat f = c.A * w * w - c.B * w + c.C;
  const bool solves = f.is_zero() || val_p(f, p) >= c.modulus;
  if (!solves) return Rat(0);
  const Rat delta = c.B * c.B - Rat(4) * c.A * c.C;
  const bool degenerate = delta.is_zero() || val_p(delta, p) >= c.modulus;
  if (degenerate) {
    // Only the double-root class itself obeys the volume rule; the rest of
    // the solution coset (possible once the residue grid is finer than the
    // root's precision) carries finer character data.
    const Rat center = c.B / (Rat(2) * c.A);
    if (residue_mod(center, p, k) != w_res)
      throw UnsupportedCase(
          "degenerate solution coset away from the double root");
  }
  return Rat(1, pow_i64(p, l / 2));
}

PhaseResult phase_factor(const Supercuspidal& sc, const MultChar& chi) {
  PINT_CHECK_MSG(sc.sc_case == SCCase::kRamified,
                 "off-diagonal phase needs a ramified datum");
  const QuadExt& E = sc.E();
  const std::int64_t p = E.p;
  const int prec = sc.prec;
  const MultChar nu = twisted_character(sc, chi);
  const int c_nu = nu.conductor();
  if (c_nu == 0)
    throw HypothesisViolation(
        "off-diagonal phase needs a ramified twisted character");
  const int l = c_nu / 2;
  const int n = sc.n_level;
  if (l > n)
    throw UnsupportedCase(
        "twisted conductor exceeds the representation's range");
  if ((n - l) % 2 != 0)
    throw HypothesisViolation(
        "odd conductor gap: the u = 0 criterion has no solutions and no "
        "exact roots exist");
  const AlphaElement a_nu = alpha_element(nu, sc.prec);
  const Criterion c = criterion_coefficients(sc, a_nu, l, Rat(0));
  const Rat delta = c.B * c.B - Rat(4) * c.A;

  const PAdic dp = PAdic::from_rat(p, delta, prec);
  PAdic root = PAdic::zero(p, prec);
  if (!dp.is_zero()) {
    if (!dp.is_square())
      throw HypothesisViolation(
          "criterion discriminant is not a square: the two translates do "
          "not exist");
    root = dp.sqrt();
  }
  const PAdic ap = PAdic::from_rat(p, c.A, prec);
  const PAdic bp = PAdic::from_rat(p, c.B, prec);
  const PAdic two = PAdic::from_int(p, 2, prec);
  PhaseResult out{(bp + root) / (two * ap), (bp - root) / (two * ap),
                  Cyclo::zero(), Angle::zero()};
  // v v' = C/A = s^2, i.e. v v' D = D' on the nose.
  PINT_CHECK(out.v * out.v_prime == PAdic::from_rat(p, sc.s * sc.s, prec));

  const PAdic zero = PAdic::zero(p, prec);
  const PAdic d_scalar = PAdic::from_rat(p, E.d_rat, prec);
  const Mat2 g{zero, out.v_prime.inv(), out.v * d_scalar, zero};
  const auto phi = matrix_coefficient(sc, g);
  if (!phi)
    throw NotOnSupport(
        "off-diagonal evaluation point carries a zero coefficient");
  out.gamma = Cyclo::root(*phi + chi.at_uniformizer());
  out.theta_chi_sqrtd = sc.theta.at_uniformizer() + chi.at_uniformizer();
  return out;
}

SupportReport support_of_integral(const Supercuspidal& sc,
                                  const MultChar& chi, const PAdic& v,
                                  const PAdic& v_prime, int m) {
  const QuadExt& E = sc.E();
  const MultChar nu = twisted_character(sc, chi);
  const int l = nu.conductor() / 2;
  const auto reps = torus_representatives(E, m, sc.prec);
  const Mat2 g1 = Mat2::diag(v, p_one(E.p, sc.prec));
  const Mat2 g2_inv = Mat2::diag(v_prime, p_one(E.p, sc.prec)).inv();
  const Rat w(1, pow_i64(E.p, m));

  SupportReport report{m, {}, true, Rat(0), {}};
  std::set<Angle> values;
  for (const auto& rep : reps) {
    const auto phi = matrix_coefficient(sc, g2_inv * embed(rep.t) * g1);
    const bool predicted =
        rep.sqrt_d_coset &&
        (rep.y.is_zero() || val_p(rep.y, E.p) >= l / 2);
    if (phi.has_value() != predicted) report.matches_prediction = false;
    if (!phi) continue;
    report.observed.push_back({rep.sqrt_d_coset, rep.y});
    report.volume = report.volume + w;
    values.insert(*phi + chi.eval(rep.t));
  }
  report.integrand_values.assign(values.begin(), values.end());
  return report;
}

CrossTermReport cross_term_structure(const Supercuspidal& sc,
                                     const MultChar& chi, const Rat& x1,
                                     const Rat& x2, const EngineConfig& cfg) {
  const std::int64_t p = sc.E().p;
  const TestVector t1 =
      translated_vector(sc, diag_rat(p, x1, sc.prec));
  const TestVector t2 =
      translated_vector(sc, diag_rat(p, x2, sc.prec));
  CrossTermReport r{period_integral(sc, chi, t1, t1, {}, cfg),
                    period_integral(sc, chi, t2, t2, {}, cfg),
                    period_integral(sc, chi, t1, t2, {}, cfg),
                    period_integral(sc, chi, t2, t1, {}, cfg),
                    true,
                    true};
  const bool z1 = r.diag1.value.is_zero();
  const bool z2 = r.diag2.value.is_zero();
  if (z1 || z2)
    r.row_column_vanish_ok =
        r.off12.value.is_zero() && r.off21.value.is_zero();
  if (!z1 && !z2 && r.diag1.value.abs2() == r.diag2.value.abs2())
    r.magnitude_match_ok =
        r.off12.value.abs2() == r.diag1.value.abs2() &&
        r.off21.value.abs2() == r.diag1.value.abs2();
  return r;
}

BarSymmetryReport bar_symmetry_check(const Supercuspidal& sc,
                                     const MultChar& chi,
                                     const TestVector& tv,
                                     const EngineConfig& cfg) {
  const std::int64_t p = sc.E().p;
  const Mat2 flip = Mat2::diag(PAdic::from_int(p, -1, sc.prec),
                               p_one(p, sc.prec));
  const TestVector flipped = translated_vector(tv, flip);
  BarSymmetryReport r{period_integral(sc, chi, tv, tv, {}, cfg),
                      period_integral(sc, chi.conjugated(), flipped, flipped,
                                      {}, cfg),
                      false};
  r.equal = r.lhs.value == r.rhs.value;
  return r;
}

AveragedResult averaged_vector_period(const Supercuspidal& sc,
                                      const MultChar& chi,
                                      const EmbeddingSpec& emb,
                                      const EngineConfig& cfg) {
  const TestVector tv = averaged_unit_vector(sc);
  const long n_terms = static_cast<long>(tv.terms.size());

  AveragedResult out{period_integral(sc, chi, tv, tv, emb, cfg), n_terms,
                     std::nullopt, "", ""};
  out.direct.value = out.direct.value.scaled(Rat(1, n_terms));

  if (emb.is_conjugated()) {
    out.hypothesis_note = "conjugated embedding";
    return out;
  }
  if (!sc.theta.trivial_on_F(sc.prec)) {
    out.hypothesis_note = "theta is nontrivial on F^x";
    return out;
  }
  // The two distinguished residue classes fire on pure character
  // trivialities and dominate everything else (value 2 at one class).
  if ((sc.theta * chi).is_trivial()) {
    out.branch = "mirror trivial";
    out.closed_form = Cyclo::rational(Rat(2, n_terms));
    return out;
  }
  const MultChar nu = twisted_character(sc, chi);
  if (nu.is_trivial()) {
    out.branch = "twisted trivial";
    out.closed_form = Cyclo::rational(Rat(2, n_terms));
    return out;
  }
  const int c_nu = nu.conductor();
  const int n = sc.n_level;
  if (c_nu == 0) {
    out.branch = "unramified nontrivial";
    out.closed_form = Cyclo::zero();
    return out;
  }
  PINT_CHECK(c_nu % 2 == 0);
  const int l = c_nu / 2;
  if (l > n) {
    out.hypothesis_note =
        "twisted conductor exceeds the representation's range";
    return out;
  }
  if ((n - l) % 2 != 0) {
    out.branch = "odd gap";
    out.closed_form = Cyclo::zero();
    return out;
  }
  const SolveResult sol = solve_test_vector_equation(sc, chi, Rat(0));
  const QuadExt& E = sc.E();
  const std::int64_t p = E.p;
  const int k = (n + 1) / 2;
  const std::int64_t s_res = residue_mod(sc.s, p, k);
  const std::int64_t ms_res = residue_mod(-sc.s, p, k);
  std::vector<Rat> generic;
  for (const Rat& r : sol.solutions) {
    const std::int64_t rr = residue_mod(r, p, k);
    if (rr != s_res && rr != ms_res) generic.push_back(r);
  }
  if (generic.empty()) {
    // Either no solutions at all, or only the l = n degenerate double root
    // on the +s class -- whose character is nontrivial here, so it
    // contributes nothing.
    out.branch = "no generic solutions";
    out.closed_form = Cyclo::zero();
    return out;
  }
  if (sol.degenerate) {
    // A degenerate double root sits on the +s class; any further solving
    // classes are coset leakage whose values this rule does not capture.
    out.hypothesis_note = "degenerate solution coset";
    return out;
  }
  PINT_CHECK_MSG(generic.size() == 2,
                 "generic solution count must be zero or two");
  const Angle gamma = sc.theta.at_uniformizer() + chi.at_uniformizer();
  PINT_CHECK_MSG(gamma == Angle::zero() || gamma == Angle::half(),
                 "off-diagonal phase is not a sign");
  out.branch = "two translates";
  const Rat square = gamma.is_zero() ? Rat(4) : Rat(0);  // (1 + gamma)^2
  out.closed_form = Cyclo::rational(
      square * Rat(1, n_terms) * Rat(1, pow_i64(E.q(), l / 2)));
  return out;
}

Cyclo whittaker_restriction(const Supercuspidal& sc, const PAdic& a,
                            int cutoff, std::int64_t cyclo_cap) {
  PINT_CHECK(cutoff >= 0);
  if (a.is_zero())
    throw DomainError("whittaker restriction at a singular diagonal");
  const QuadExt& E = sc.E();
  const std::int64_t p = E.p;
  const int prec = sc.prec;
  const int base =
      sc.c_theta / E.e + std::max(0, -a.val()) + 1;
  const AddChar psi{p, Rat(1)};
  const Mat2 lead = Mat2::diag(
      PAdic::from_int(p, pow_i64(p, sc.c_pi / 2), prec), p_one(p, prec));
  const Mat2 right = Mat2::diag(a, p_one(p, prec));

  const auto level = [&](int x_depth, int cut) -> Cyclo {
    AngleSum s;
    const std::int64_t count = pow_i64(p, x_depth + cut);
    const std::int64_t denom = pow_i64(p, x_depth);
    const Rat w(1, pow_i64(p, cut));
    for (std::int64_t k = 0; k < count; ++k) {
      const PAdic x = PAdic::from_rat(p, Rat(k, denom), prec);
      const auto phi =
          matrix_coefficient(sc, lead * Mat2::upper(x, prec) * right);
      if (!phi) continue;
      s.add(*phi + psi.eval(-x), w);
    }
    return s.empty() ? Cyclo::zero() : s.value(cyclo_cap);
  };

  const Cyclo coarse = level(base, cutoff);
  const Cyclo fine = level(base + 1, cutoff + 1);
  if (coarse != fine)
    throw UnstableSum("whittaker restriction did not stabilize");
  return coarse;
}

}  // namespace pint
