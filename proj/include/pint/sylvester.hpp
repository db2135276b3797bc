// SPDX-License-Identifier: MIT
//
// A fully worked newform period over E = Q_3(sqrt(-3)): the depth-four
// inducing character and its companion twist are reconstructed exactly from
// finite value tables, a one-parameter family of torus embeddings indexed by
// an auxiliary prime P (P = 4 or 7 mod 9) is checked against its closed
// conjugation identity, and the newform period beta and the admissible-vector
// ratio 2 / beta are computed through the period engine in both embedding
// modes.  Every quantity is exact.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pint/characters.hpp"
#include "pint/induction.hpp"
#include "pint/period.hpp"

namespace pint {

// Exact rational entries of the embedding matrix
//
//   sqrt(-3) |-> [[a, b / 9], [27 c, -a]],
//
//   a = (4 P^2 + 17 P + 72) / P,
//   b = (-8 P^2 - 36 P - 162) / P,
//   c = (2 P^2 + 8 P + 32) / (3 P),
//
// for an auxiliary prime parameter P with P = 4 or 7 mod 9 (all three are
// 3-adic integers; the denominators are prime to 3).  Construction verifies
// the determinant identity -a^2 - 3 b c = 3 (so the matrix squares to -3)
// and the residue pattern
//
//   v_3(a) = 1 and c = -1 mod 9   when P = 4 mod 9,
//   v_3(a) = 2 and c =  5 mod 9   when P = 7 mod 9,
//   b = P mod 9                   in both classes.
//
// BadResidue for P in any other residue class mod 9.
struct SylvesterParams {
  std::int64_t P = 0;
  int p_mod_9 = 0;  // 4 or 7
  Rat a, b, c;
};
SylvesterParams sylvester_params(std::int64_t P);

// The matrix [[a, b/9], [27c, -a]] as truncated 3-adic scalars.
Mat2 sylvester_image(const SylvesterParams& sp, int prec);

// The conjugating matrix M = [[-9c, a/3], [0, 1]] with
// sylvester_image == M^{-1} embed(sqrt(D)) M; the identity is rechecked at
// the working precision on construction.
Mat2 sylvester_conjugator(const SylvesterParams& sp, int prec);

// The depth-four character Theta of E^x pinned by its values on the
// generators of the level-four unit classes,
//
//   -1            |-> 1/2        (the value -1)
//   1 + sqrt(-3)  |-> 2/3
//   1 - sqrt(-3)  |-> 1/3
//   1 + 3sqrt(-3) |-> 1/3
//   sqrt(-3)      |-> 1/4        (the value i),
//
// extended to the whole quotient by homomorphism propagation
// (InconsistentTable if the table failed to extend).  Conductor 4.
MultChar theta3_table(const QuadExt& E, int prec);

// The depth-four character chi of E^x trivial on F^x, by residue class of
// the auxiliary prime:
//
//   p_mod_9 = 4:  1 + sqrt(-3) |-> 1/3,  1 + 3sqrt(-3) |-> 1/3
//   p_mod_9 = 7:  1 + sqrt(-3) |-> 2/3,  1 + 3sqrt(-3) |-> 1/3
//
// with chi(sqrt(-3)) = 1; the values on -1 and 1 - sqrt(-3) are forced by
// triviality on F^x.  Conductor 4.
MultChar chi3_table(const QuadExt& E, int p_mod_9, int prec);

// The inducing character theta = Theta * delta_Theta together with the
// surfaced intermediates of the twist: the trace-zero parameter of Theta
// (class -1/27 + (1/9)Z_3 on the sqrt(D) coordinate), the quartic constant
// lambda = -i (angle 3/4), and delta(sqrt(D)) = -i.  theta is trivial on
// F^x and has conductor 4.
struct TwistedInducing {
  MultChar big_theta;   // the table character
  TwistResult twist;    // theta = big_theta * delta, shared alpha
  Angle lambda;         // quartic constant of E/F for the base character
  Angle delta_at_unif;  // delta(sqrt(D))
};
TwistedInducing sylvester_theta(const QuadExt& E, int prec);

// Exact verdicts on the pair (theta, chi) for one residue class: the
// product nu = theta * chi-conjugate is trivial when p_mod_9 = 7; when
// p_mod_9 = 4 it has conductor 2 and trace-zero parameter in the class
// -1/9 + (1/3)Z_3.  These route the period through two different closed
// branches, recorded in `branch`.
struct CharacterPairReport {
  int p_mod_9 = 0;
  bool nu_trivial = false;
  int c_nu = 0;
  std::optional<Rat> y_nu;   // canonical trace-zero parameter when c_nu = 2
  int l = 0;                 // c_nu / 2
  std::string branch;        // "single-class" or "critical-depth"
  bool checks_ok = false;    // all class-specific verdicts hold
};
CharacterPairReport character_pair_report(int p_mod_9, int prec);

// The newform period for the embedding indexed by P, with the newform
// expanded into unipotent-translated minimal vectors:
//
//   beta = 1/2 * sum over x, x' in {1, 2} of
//          { pi([[x, a/3],[0,1]]) phi0, pi([[x', a/3],[0,1]]) phi0 }_chi
//
// in standard mode, cross-checked in conjugated mode (embedding twisted by
// M, vectors pi(diag(x/9, 1)) phi0).  Expected values: beta = 1 when
// P = 7 mod 9, beta = 1/2 when P = 4 mod 9; ratio = 2 / beta is the
// admissible-to-newform comparison (the admissible vector pairs to the full
// quotient volume 2).
struct SylvesterPeriod {
  SylvesterParams params;
  CharacterPairReport chars;
  Rat beta;
  Rat ratio;
  bool certified = false;             // every pairing certified by the engine
  bool conjugated_mode_agrees = false;
};
SylvesterPeriod sylvester_period(std::int64_t P, int prec,
                                 const EngineConfig& cfg = {});

}  // namespace pint
