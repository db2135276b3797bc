// SPDX-License-Identifier: MIT
//
// Compact-induction data and matrix coefficients.

#include "pint/induction.hpp"

#include "pint/errors.hpp"

namespace pint {

namespace {

// Certified test v(x) >= t; PrecisionLoss when the stored precision cannot
// decide.
bool at_least(const PAdic& x, int t) {
  if (x.val_bound() >= t) return true;
  if (!x.is_zero()) return false;
  throw PrecisionLoss("filtration membership undecidable at this precision");
}

PAdic one_like(const PAdic& x) {
  int prec = x.abs_prec() == PAdic::kInf ? 12 : x.abs_prec();
  return PAdic::from_int(x.prime(), 1, prec);
}

}  // namespace

namespace {

// The guards shared by both classify overloads, run before any alpha
// search so that unusable data fail with a typed explanation.
void validate_theta(const MultChar& theta) {
  const QuadExt& E = theta.field();
  int c = theta.conductor();
  if (c < 2) throw UnsupportedCase("depth-zero data are not supported");
  if (E.ramified() && c % 2 != 0)
    throw UnsupportedCase("ramified data need even conductor");
  if (theta == theta.conjugated())
    throw UnsupportedCase("character is not regular: fixed by conjugation");
}

}  // namespace

Supercuspidal classify(const MultChar& theta, const AlphaElement& alpha,
                       int prec) {
  validate_theta(theta);
  const QuadExt& E = theta.field();
  int c = theta.conductor();

  Supercuspidal sc{theta,
                   alpha,
                   SCCase::kRamified,
                   c,
                   0,
                   c / 2,
                   Rat(0),
                   Rat(0),
                   QuadExt(),
                   nullptr,
                   prec};
  if (E.ramified()) {
    sc.sc_case = SCCase::kRamified;
    sc.c_pi = c + 1;
  } else {
    sc.sc_case = c % 2 == 0 ? SCCase::kInertEven : SCCase::kInertOdd;
    sc.c_pi = 2 * c;
  }

  // Exact coordinate change: s = 1/(y D p^{c/e}), D' = D s^2.
  int ce = c / E.e;
  Rat pce = Rat(pow_i64(E.p, ce));
  sc.s = Rat(1) / (alpha.y * E.d_rat * pce);
  Rat d_prime = E.d_rat * sc.s * sc.s;
  sc.y_prime = alpha.y / sc.s;
  // alpha in the new coordinates is [[0, y'], [y' D', 0]] with lower-left
  // entry exactly p^{-c/e}.
  PINT_CHECK(sc.y_prime * d_prime == Rat(1) / pce);
  sc.L = QuadExt::make(E.p, d_prime, prec);
  PINT_CHECK(sc.L.e == E.e);
  sc.l_units = std::make_shared<UnitClasses>(sc.L, sc.n_level);
  return sc;
}

Supercuspidal classify(const MultChar& theta, int prec) {
  validate_theta(theta);
  return classify(theta, alpha_element(theta, prec), prec);
}

bool in_KA(const Supercuspidal& sc, const Mat2& k, int m) {
  if (sc.E().ramified()) {
    return at_least(k.a - one_like(k.a), (m + 1) / 2) &&
           at_least(k.b, m / 2) && at_least(k.c, m / 2 + 1) &&
           at_least(k.d - one_like(k.d), (m + 1) / 2);
  }
  return at_least(k.a - one_like(k.a), m) && at_least(k.b, m) &&
         at_least(k.c, m) && at_least(k.d - one_like(k.d), m);
}

std::optional<JDecomposition> decompose_J(const Supercuspidal& sc,
                                          const Mat2& g) {
  int dv = g.det().val();  // DomainError when the determinant vanishes
  int k_l;
  if (sc.E().ramified()) {
    k_l = dv;
  } else {
    if (dv % 2 != 0) return std::nullopt;
    k_l = dv / 2;
  }

  EElem pw = uniformizer_pow(sc.L, k_l, sc.prec + std::abs(k_l) + 2);
  std::optional<JDecomposition> found;
  int count = 0;
  for (int w = 0; w < sc.l_units->size(); ++w) {
    EElem l = pw * sc.l_units->rep(w, sc.prec);
    Mat2 m = embed(l);
    Mat2 k = m.inv() * g;
    if (!in_KA(sc, k, sc.n_level)) continue;
    ++count;
    EElem l_e(sc.E(), l.x,
              l.y * PAdic::from_rat(sc.E().p, sc.s, sc.prec + std::abs(k_l) + 2));
    found = JDecomposition{l, l_e, k};
  }
  PINT_CHECK(count <= 1);
  return found;
}

std::optional<Angle> matrix_coefficient(const Supercuspidal& sc,
                                        const Mat2& g) {
  if (sc.sc_case == SCCase::kInertOdd) {
    throw UnsupportedCase(
        "coefficients for the odd inert family are not implemented");
  }
  auto dec = decompose_J(sc, g);
  if (!dec) return std::nullopt;

  Angle base = sc.theta.eval(dec->l_e);
  Mat2 x = dec->k - Mat2::identity(sc.E().p, sc.prec);
  Mat2 alpha_m = embed(elem_rat(sc.L, Rat(0), sc.y_prime, sc.prec));
  AddChar psi{sc.E().p, Rat(1)};
  return base + psi.eval((alpha_m * x).tr());
}

KirillovSupport kirillov_support(const Supercuspidal& sc) {
  int e = sc.E().e;
  return KirillovSupport{-sc.c_theta / e, (sc.c_theta + 2 * e - 1) / (2 * e)};
}

}  // namespace pint
