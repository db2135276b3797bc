// SPDX-License-Identifier: MIT
//
// Characters of a p-adic field and of its quadratic extensions, with exact
// values in Q/Z (angles of roots of unity).
//
//   AddChar    additive character psi_beta(x) = e(-{beta x}) of F, level
//              -v(beta); the default beta = 1 is the standard choice.
//   FQuadChar  the quadratic character of F^x attached to E/F (Legendre on
//              units when E/F is ramified, unramified of order two when
//              inert), including its value at the uniformizer p.
//   MultChar   a smooth character of E^x of finite level: an exact table on
//              the unit classes O_E^x/U_E(level) plus the value at the
//              canonical uniformizer (sqrt(D) when ramified, p when inert).
//
// On top of these sit the constructions the period computations need: the
// trace-zero element alpha representing a character's restriction to a deep
// unit filtration step through psi(Tr(alpha *)), the fourth-root-of-unity
// normalizing constant lambda of the extension, the level <= 1 companion
// character delta built from them, and the dictionary between the two
// standard parametrizations of a supercuspidal datum (theta = Theta * delta).

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pint/cyclo.hpp"
#include "pint/unitgroup.hpp"

namespace pint {

// psi_beta(x) = e(-{beta x} mod Z), trivial on p^{-v(beta)} Z_p.
struct AddChar {
  std::int64_t p;
  Rat beta{1};

  int level() const;  // -v_p(beta)
  Angle eval(const PAdic& x) const;
  Angle eval_trace(const EElem& t) const;  // psi(Tr_{E/F} t)
};

// Quadratic character of F^x attached to a quadratic extension.
struct FQuadChar {
  std::int64_t p;
  bool ramified_ext;
  int sign_at_p;  // +1 or -1

  Angle eval(const PAdic& x) const;
  Angle eval_rat(const Rat& r, int prec) const;
};

FQuadChar eta_char(const QuadExt& E);

// Smooth character of E^x with values in Q/Z.
class MultChar {
 public:
  MultChar(std::shared_ptr<const UnitClasses> cls, std::vector<Angle> table,
           Angle unif);

  const QuadExt& field() const { return cls_->field(); }
  int level() const { return cls_->level(); }
  const std::shared_ptr<const UnitClasses>& classes() const { return cls_; }

  Angle eval_class(int i) const { return table_[static_cast<std::size_t>(i)]; }
  Angle at_uniformizer() const { return unif_; }
  Angle eval(const EElem& t) const;
  Angle at_p(int prec) const;  // value at the base-field uniformizer

  // Smallest j with trivial restriction to U_E(j); 0 means unramified.
  int conductor() const;

  bool is_trivial() const;
  bool trivial_on_F(int prec) const;  // trivial on all of F^x

  MultChar conjugated() const;  // x -> value at conj(x)
  MultChar inverse() const;
  MultChar at_level(int lvl) const;  // promote, or reduce when possible
  MultChar with_uniformizer(const Angle& a) const;

  friend MultChar operator*(const MultChar& a, const MultChar& b);
  friend bool operator==(const MultChar& a, const MultChar& b);

 private:
  std::shared_ptr<const UnitClasses> cls_;
  std::vector<Angle> table_;
  Angle unif_;
  mutable int conductor_cache_ = -1;
};

// Build a character table from values on generating elements by breadth-
// first propagation; InconsistentTable if the values clash or the elements
// do not generate the unit classes.
MultChar char_from_generators(
    std::shared_ptr<const UnitClasses> cls,
    const std::vector<std::pair<EElem, Angle>>& gens, const Angle& unif);

// All characters of level <= `level`, optionally restricted to those
// trivial on F^x and to an exact conductor.  Deterministic order.
std::vector<MultChar> enumerate_characters(
    const QuadExt& E, int level, bool trivial_on_f,
    std::optional<int> exact_conductor = std::nullopt);

// Trace-zero element alpha = y*sqrt(D) with nu(1+u) = psi(Tr(alpha u)) for
// all u with v_E(u) >= ceil(c/2), c = conductor(nu) >= 2.  alpha is the
// canonical representative of its ambiguity class: it is determined modulo
// pi_E^{amb} and the search certifies existence and uniqueness.
struct AlphaElement {
  EElem alpha;
  Rat y;
  int v_e;  // valuation of alpha: -c + (ramified ? -1 : 0)
  int amb;  // alpha is well defined modulo pi_E^{amb}
};

AlphaElement alpha_element(const MultChar& nu, int prec);

// The fourth root of unity lambda(E/F, psi_beta), beta a unit, as an angle
// in {0, 1/4, 1/2, 3/4}.  Ramified extensions only.
Angle lambda_constant(const QuadExt& E, const Rat& beta);

// The level <= 1 companion character: unramified of order two when E is
// inert; when E is ramified the Legendre table at level one together with
// the uniformizer value eta(y D^{c/2}) * lambda^{c-1}.
MultChar delta_char(const QuadExt& E, int c_theta, const AlphaElement& alpha,
                    int prec);

// Dictionary between the two parametrizations of the same supercuspidal
// datum: theta = Theta * delta_Theta, sharing Theta's conductor and alpha.
struct TwistResult {
  MultChar theta;
  AlphaElement alpha;
  MultChar delta;
};

TwistResult langlands_twist(const MultChar& big_theta, int prec);

}  // namespace pint
