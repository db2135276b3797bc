// SPDX-License-Identifier: MIT
//
// Finite unit-class groups O_E^x / U_E(level) of a quadratic extension, and
// a generic structure algorithm for finite abelian groups.
//
// Classes are indexed densely; representatives are integer coordinate pairs
// (a, b) for a + b*sqrt(D), with the two coordinates reduced modulo the
// powers of p that the filtration level dictates:
//   ramified, level c:  a mod p^ceil(c/2) (unit), b mod p^floor(c/2)
//   inert,    level c:  a, b mod p^c, (a, b) not both divisible by p
// The abelian-basis algorithm (primary decomposition plus recursive
// maximal-order splitting) yields generators, their orders, and the exponent
// tuple of every element — everything character enumeration needs.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "pint/quadext.hpp"

namespace pint {

class UnitClasses {
 public:
  UnitClasses(const QuadExt& E, int level);

  const QuadExt& field() const { return E_; }
  int level() const { return level_; }
  int size() const { return static_cast<int>(reps_.size()); }
  int id_class() const { return id_; }

  int ca() const { return ca_; }  // a-coordinate modulus exponent
  int cb() const { return cb_; }  // b-coordinate modulus exponent

  int mul(int i, int j) const;
  int inv(int i) const;
  int conj_class(int i) const;

  // Class of a unit (v_E = 0) element; PrecisionLoss if its coordinates are
  // not known to the class moduli.
  int class_of(const EElem& u) const;
  int class_of_pair(std::int64_t a, std::int64_t b) const;

  std::pair<std::int64_t, std::int64_t> rep_pair(int i) const {
    return reps_[static_cast<std::size_t>(i)];
  }
  EElem rep(int i, int prec) const;

  // Map a class of this (finer) quotient to a coarser one (lower.level()
  // <= level()).
  int reduce_to(const UnitClasses& lower, int i) const;

  // Classes containing units of the base field F.
  const std::vector<int>& f_unit_classes() const { return f_classes_; }

  // Classes of U_E(j) modulo U_E(level), 0 <= j <= level (j = 0 gives all
  // classes).
  std::vector<int> filtration_classes(int j) const;

 private:
  QuadExt E_;
  int level_;
  int ca_, cb_;
  std::int64_t pa_, pb_;   // p^ca, p^cb
  std::int64_t d_mod_;     // D mod p^(ca + 1), as an integer representative
  int id_;
  std::vector<std::pair<std::int64_t, std::int64_t>> reps_;
  std::vector<int> index_;  // flat (a * pb_ + b) -> class, or -1
  std::vector<int> f_classes_;

  int lookup(std::int64_t a, std::int64_t b) const;
};

// A finite abelian group presented as canonical element ids with a closed
// multiplication.
struct GroupView {
  std::vector<int> elems;
  std::function<int(int, int)> mul;
  int id;
};

struct BasisResult {
  std::vector<int> gens;
  std::vector<std::int64_t> orders;               // gens[i] has orders[i]
  std::map<int, std::vector<std::int64_t>> expo;  // element -> exponents
};

// Generators, orders, and the exponent tuple of every element; the product
// of the orders equals the group size and the tuple map is a bijection
// (both verified).
BasisResult abelian_basis(const GroupView& g);

// The quotient of g by a subgroup, as a GroupView on minimal coset
// representatives.  When coset_out is given it receives the map from each
// element of g to its canonical coset representative.
GroupView quotient_view(const GroupView& g, const std::set<int>& subgroup,
                        std::map<int, int>* coset_out = nullptr);

// Representatives of the additive quotient pi_E^h O_E / pi_E^c O_E
// (0 <= h <= c), at the given coordinate precision.
std::vector<EElem> additive_coset_reps(const QuadExt& E, int h, int c,
                                       int prec);

// Power in an abstract group.
int group_pow(const GroupView& g, int x, std::int64_t e);

// Order of one element.
std::int64_t group_order_of(const GroupView& g, int x);

}  // namespace pint
