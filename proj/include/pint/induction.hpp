// SPDX-License-Identifier: MIT
//
// Supercuspidal data and their matrix coefficients on GL2(F), built by
// compact induction from a regular character theta of a quadratic
// extension E = F(sqrt(D)) of conductor c >= 2.
//
// The inducing subgroup lives in a second coordinate system: with alpha =
// y*sqrt(D) the trace-zero parameter of theta, set s = 1/(y D p^{c/e}),
// D' = D s^2 (same square class, so F(sqrt(D')) is the same field), and
// embed L = F(sqrt(D')) into 2x2 matrices by x + y sqrt(D') ->
// [[x, y], [y D', x]].  Then J = L^x K_A(n), n = c/2, and the coefficient
// of the canonically normalized vector is supported on J with
//   Phi(l * (1 + x)) = theta(l as an element of E) * psi(tr(alpha_M x)),
// where alpha_M is alpha rewritten in the D'-coordinates, a matrix with
// lower-left entry exactly p^{-c/e}.
//
// Conductor bookkeeping: ramified E gives c(pi) = c + 1 (odd); inert E
// gives c(pi) = 2c, which is 0 mod 4 for even c and 2 mod 4 for odd c.
// The odd-conductor inert family is recognized but its coefficient is not
// implemented; ramified E requires even c throughout.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "pint/characters.hpp"
#include "pint/mat2.hpp"

namespace pint {

enum class SCCase {
  kRamified,      // e = 2, c(pi) = c + 1 odd
  kInertEven,     // e = 1, c even, c(pi) = 2c = 0 mod 4
  kInertOdd,      // e = 1, c odd,  c(pi) = 2c = 2 mod 4 (coefficient
                  // unsupported)
};

struct Supercuspidal {
  MultChar theta;        // regular character of E^x, conductor c >= 2
  AlphaElement alpha;    // trace-zero parameter of theta
  SCCase sc_case;
  int c_theta;           // conductor of theta
  int c_pi;              // conductor of the induced representation
  int n_level;           // floor(c/2); the K_A filtration depth of J
  Rat s;                 // sqrt(D'/D) in F^x, exactly
  Rat y_prime;           // alpha in D'-coordinates: alpha = y' sqrt(D')
  QuadExt L;             // F(sqrt(D')), the group-side copy of E
  std::shared_ptr<const UnitClasses> l_units;  // O_L^x / U_L(n_level)
  int prec;              // working absolute precision

  const QuadExt& E() const { return theta.field(); }
};

// Validate and package a supercuspidal datum.  Throws UnsupportedCase for
// depth-zero data, ramified odd conductor, or theta fixed by conjugation.
Supercuspidal classify(const MultChar& theta, const AlphaElement& alpha,
                       int prec);
Supercuspidal classify(const MultChar& theta, int prec);

// Membership test for K_A(m) in the D'-coordinates; PrecisionLoss when the
// entries cannot certify a yes/no answer.
bool in_KA(const Supercuspidal& sc, const Mat2& k, int m);

// g = embed(l) * k with l in L^x (returned in *E*-coordinates, ready for
// theta) and k in K_A(n_level); nullopt when g is outside J.
struct JDecomposition {
  EElem l_group;   // the factor in D'-coordinates
  EElem l_e;       // the same element transported to E-coordinates
  Mat2 k;
};
std::optional<JDecomposition> decompose_J(const Supercuspidal& sc,
                                          const Mat2& g);

// The normalized matrix coefficient as an exact angle on its support;
// nullopt encodes the value zero (g outside J).
std::optional<Angle> matrix_coefficient(const Supercuspidal& sc,
                                        const Mat2& g);

// The coefficient's Kirillov-model support on the diagonal torus:
// { a : v(a) = v0, a p^{-v0} = 1 mod p^{depth} }.
struct KirillovSupport {
  int v0;     // -c(theta)/e
  int depth;  // ceil(c(theta) / (2e))
};
KirillovSupport kirillov_support(const Supercuspidal& sc);

}  // namespace pint
