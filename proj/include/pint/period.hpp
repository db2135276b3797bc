// SPDX-License-Identifier: MIT
//
// Period pairings of supercuspidal matrix coefficients against characters
// of a ramified quadratic torus, with exact cyclotomic values.
//
// The central object is
//
//   {phi1, phi2}_chi = integral over F^x \ E^x of
//       sum_{i,j} c_i conj(c'_j) Phi(g'_j^{-1} iota(t) g_i) chi(t) dt,
//
// where phi = sum c_i pi(g_i) phi0 runs over finite linear combinations of
// translates of the canonically normalized vector, iota is the standard
// embedding of E or a fixed conjugate of it, and the torus carries the
// measure with Vol(F^x \ E^x) = 2.  Because the integrand is locally
// constant, the integral is an exact finite sum of weighted roots of unity;
// the engine refines the torus partition adaptively and certifies the value
// by exact agreement between two consecutive depths.
//
// On top of the raw pairing sit the structural evaluations: the quadratic
// residue criterion deciding which diagonal translates pair nontrivially
// and with what value, the off-diagonal phase between the two solution
// translates, the support description of the cross pairing, the
// row/column vanishing dichotomy, the conjugation symmetry, and the closed
// form for the averaged unit translate.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pint/cyclo.hpp"
#include "pint/induction.hpp"

namespace pint {

// Knobs for the adaptive sums.
struct EngineConfig {
  int max_refine = 8;            // extra depth levels before giving up
  std::int64_t cyclo_cap = 360;  // order cap when assembling exact values
  bool record_support = false;   // keep the contributing torus classes
};

// A finite linear combination sum_i coeff_i * pi(g_i) phi0.
struct TVTerm {
  Cyclo coeff;
  Mat2 g;
};

struct TestVector {
  std::vector<TVTerm> terms;
};

// The single-term combination phi0 itself.
TestVector base_vector(const Supercuspidal& sc);
// pi(g) phi0.
TestVector translated_vector(const Supercuspidal& sc, const Mat2& g);
// pi(g) applied to an existing combination (left multiplication throughout).
TestVector translated_vector(const TestVector& tv, const Mat2& g);
// sum over unit residues x mod p^{ceil(n/2)} of pi(diag(x, 1)) phi0,
// unnormalized: callers divide pairings by the term count.
TestVector averaged_unit_vector(const Supercuspidal& sc);

// How the torus sits inside the matrix algebra: the standard embedding
// t -> embed(t), or its conjugate t -> M^{-1} embed(t) M.
struct EmbeddingSpec {
  std::optional<Mat2> M;

  static EmbeddingSpec standard() { return {}; }
  static EmbeddingSpec conjugated(const Mat2& m) { return {m}; }
  bool is_conjugated() const { return M.has_value(); }
};

// Coset representatives of F^x \ E^x for ramified E at depth m: the 2 q^m
// elements eps (1 + y sqrt(D)), eps in {1, sqrt(D)}, y over residues mod
// p^m, each of weight q^{-m}; total mass exactly 2.  Inert E is rejected
// with UnramifiedUnsupported.
struct TorusRep {
  EElem t;
  bool sqrt_d_coset;  // eps = sqrt(D)
  Rat y;              // the residue, exact
};
std::vector<TorusRep> torus_representatives(const QuadExt& E, int m,
                                            int prec);

struct SupportPoint {
  bool sqrt_d_coset;
  Rat y;
};

struct IntegralResult {
  Cyclo value;
  int m = 0;               // depth at which the value certified
  bool certified = false;  // exact agreement with depth m + 1
  std::vector<SupportPoint> support;  // contributing classes at depth m
};

// The pairing integral.  Starts at depth max(n, ceil(c(chi)/2), 1) and
// refines until two consecutive depths agree exactly; UnstableSum when the
// refinement budget runs out.  Requires a ramified torus, chi living on
// the same field as theta, and (theta * chi) trivial on F^x
// (IncompatibleCentralCharacter otherwise: the integrand would not be a
// function on the quotient).
IntegralResult period_integral(const Supercuspidal& sc, const MultChar& chi,
                               const TestVector& tv1, const TestVector& tv2,
                               const EmbeddingSpec& emb = {},
                               const EngineConfig& cfg = {});

// Pair a combination with itself.
IntegralResult period_norm(const Supercuspidal& sc, const MultChar& chi,
                           const TestVector& tv,
                           const EmbeddingSpec& emb = {},
                           const EngineConfig& cfg = {});

// ---- diagonal translate criterion ----------------------------------------

// For nu = theta * chi-conjugate of conductor 2l, 0 < l <= n: the unit
// residues v mod p^{ceil(n/2)} for which {pi(n(u) diag(v,1)) phi0, same}
// is nonzero, as the solutions of
//
//   (D/D') v^2  -  (2 p^n y_nu D - 2/s) v  +  (1 - D u^2)  =  0
//                                     modulo  p^{n - floor(l/2)},
//
// where y_nu sqrt(D) is the trace-zero parameter of nu.  Each *generic*
// solution translate pairs to exactly q^{-floor(l/2)}; the distinguished
// residues +-s follow the character rule documented at
// predicted_translate_value instead, whether or not they solve the
// congruence.  (They can: exactly at l = n the discriminant may vanish at
// the working modulus, and the resulting double root always lands on the
// +s class.)  The discriminant and its squareness at the working modulus
// come along for reporting.
struct SolveResult {
  int l;        // c(nu) / 2
  int modulus;  // the congruence is taken mod p^modulus
  Rat A, B, C;  // the three coefficients, exact
  Rat delta;    // B^2 - 4 A C
  bool delta_square;  // exists w with w^2 = delta mod p^modulus
  // delta = 0 at the working modulus: the quadratic has a double root at
  // `center` = B / 2A and the solution set is a coset around it rather
  // than two isolated classes.
  bool degenerate;
  Rat center;
  std::vector<Rat> solutions;  // unit residues in [1, p^{ceil(n/2)})
};
SolveResult solve_test_vector_equation(const Supercuspidal& sc,
                                       const MultChar& chi, const Rat& u);

// Two residue classes are distinguished: at v = +s and v = -s the
// conjugated torus falls inside the inducing torus itself, the integrand
// collapses to a pure character (theta * chi at +s, its conjugate twin at
// -s), and the pairing is 2 when that character is trivial and 0 when not
// -- regardless of the quadratic.  The quadratic's verdict governs only the
// remaining ("generic") classes.
//
// When nu = theta * chi-conjugate is unramified the quadratic degenerates
// entirely and only the distinguished classes can fire: the -s class when
// nu is trivial, the +s class when theta * chi is trivial (each with value
// 2), no class otherwise.
std::optional<Rat> unramified_optimal_residue(const Supercuspidal& sc,
                                              const MultChar& chi);

// The exact pairing value of {pi(n(u) diag(w,1)) phi0, same}_chi predicted
// by the residue criterion, for a unit residue w:
//
//   2                  at a distinguished class whose character is trivial,
//   0                  at a distinguished class whose character is not,
//   q^{-floor(l/2)}    at a generic class solving the quadratic,
//   0                  at a generic class that does not.
//
// Established domains: u = 0 or v(u) >= floor(n/2) (where the unipotent
// factor is absorbed into a phase), and the critical depth
// v(u) = (n-l-1)/2 of an odd conductor gap (where only generic classes can
// fire).  UnsupportedCase for other unipotent depths, and for solving
// classes of a degenerate (double-root) criterion away from the double
// root itself -- those carry finer character data that this rule does not
// capture.
Rat predicted_translate_value(const Supercuspidal& sc, const MultChar& chi,
                              const Rat& u, const Rat& w);

// ---- off-diagonal phase ---------------------------------------------------

// Exact roots v, v' of (D/D') v^2 - B v + 1 = 0 (the u = 0 criterion as an
// equation), with v v' D = D', and the off-diagonal evaluation
//
//   gamma = Phi([[0, 1/v'], [v D, 0]]) * chi(sqrt(D)),
//
// which is +-1 and coincides with (theta * chi)(sqrt(D)).
struct PhaseResult {
  PAdic v, v_prime;
  Cyclo gamma;            // the evaluated off-diagonal phase
  Angle theta_chi_sqrtd;  // (theta * chi)(sqrt(D)) for comparison
};
PhaseResult phase_factor(const Supercuspidal& sc, const MultChar& chi);

// ---- support of the cross pairing ----------------------------------------

// Scan of t -> Phi(diag(v',1)^{-1} embed(t) diag(v,1)) chi(t) over the
// torus classes at depth m.  Reports the nonvanishing classes, whether they
// match the predicted description { eps = sqrt(D), v_p(y) >= floor(l/2) },
// the measured volume, and the distinct integrand values on the support.
struct SupportReport {
  int m;
  std::vector<SupportPoint> observed;
  bool matches_prediction;
  Rat volume;  // sum of weights over the observed classes
  std::vector<Angle> integrand_values;
};
SupportReport support_of_integral(const Supercuspidal& sc,
                                  const MultChar& chi, const PAdic& v,
                                  const PAdic& v_prime, int m);

// ---- structural identities ------------------------------------------------

// The four pairings between two diagonal translates diag(x1,1), diag(x2,1):
// a vanishing diagonal forces its row and column of cross terms to vanish,
// and two diagonals of equal magnitude force the cross terms to share that
// magnitude.
struct CrossTermReport {
  IntegralResult diag1, diag2, off12, off21;
  bool row_column_vanish_ok;
  bool magnitude_match_ok;
};
CrossTermReport cross_term_structure(const Supercuspidal& sc,
                                     const MultChar& chi, const Rat& x1,
                                     const Rat& x2,
                                     const EngineConfig& cfg = {});

// {phi, phi}_chi = {pi(diag(-1,1)) phi, same}_{chi-conjugate}: both sides.
struct BarSymmetryReport {
  IntegralResult lhs, rhs;
  bool equal;
};
BarSymmetryReport bar_symmetry_check(const Supercuspidal& sc,
                                     const MultChar& chi,
                                     const TestVector& tv,
                                     const EngineConfig& cfg = {});

// ---- averaged unit translate ----------------------------------------------

// The self-pairing of the averaged unit vector, normalized by 1/N with N
// the term count, together with the closed form it must equal when the
// hypotheses hold (ramified torus, theta trivial on F^x, standard
// embedding, nu = theta * chi-conjugate of conductor 2l <= 2n):
//
//     2/N                                  theta * chi trivial (the +s
//                                          class fires),
//     2/N                                  nu trivial (the -s class fires),
//     0                                    nu unramified nontrivial,
//     0                                    n - l odd (the u = 0 criterion
//                                          has no generic solutions),
//     0                                    no generic solutions (including
//                                          the l = n degenerate double root
//                                          pinned to the +s class),
//     (1/N) q^{-floor(l/2)} (1 + gamma)^2  two generic solutions,
//
// with gamma = (theta * chi)(sqrt(D)) = +-1.  The two trivialities are
// mutually exclusive: both at once would force theta to equal its
// conjugate, contradicting regularity.  When the hypotheses fail the
// direct value is still returned and `hypothesis_note` says what broke.
struct AveragedResult {
  IntegralResult direct;  // value already divided by N
  long n_terms;
  std::optional<Cyclo> closed_form;
  std::string branch;           // which case of the prediction applied
  std::string hypothesis_note;  // why closed_form is absent, when it is
};
AveragedResult averaged_vector_period(const Supercuspidal& sc,
                                      const MultChar& chi,
                                      const EmbeddingSpec& emb = {},
                                      const EngineConfig& cfg = {});

// ---- Whittaker restriction ------------------------------------------------

// The diagonal restriction of the Whittaker realization of the coefficient:
//
//   W(a) = integral over F of
//            Phi(diag(p^{floor(c(pi)/2)}, 1) n(x) diag(a, 1)) psi(-x) dx,
//
// as an exact Riemann sum over x in p^{-X} O / p^cutoff with
// X = c/e + max(0, -v(a)) + 1, certified by exact agreement with the
// (X+1, cutoff+1) refinement.  Nonzero exactly on the coset
// p^{v0} U(depth) described by kirillov_support (up to one global
// normalization shared by all values).
Cyclo whittaker_restriction(const Supercuspidal& sc, const PAdic& a,
                            int cutoff = 1, std::int64_t cyclo_cap = 360);

}  // namespace pint
