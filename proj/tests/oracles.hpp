// SPDX-License-Identifier: MIT
//
// Brute-force oracles for the unit tests.
//
// Everything here is deliberately naive: exhaustive loops over residues and
// group elements, no shortcuts shared with the library code paths under
// test.  Slow is fine; independent is the point.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "pint/rational.hpp"

namespace pint::oracle {

// Does x have a square root modulo p^m?  Tries every candidate.
inline bool is_square_mod(std::int64_t p, int m, std::int64_t x) {
  std::int64_t mod = 1;
  for (int i = 0; i < m; ++i) mod *= p;
  x %= mod;
  if (x < 0) x += mod;
  for (std::int64_t y = 0; y < mod; ++y)
    if (mul_mod(y, y, mod) == x) return true;
  return false;
}

// Order of an element in a finite group given by a multiplication callback.
template <typename Mul>
int element_order(int id_index, int g, Mul mul) {
  int ord = 1;
  int cur = g;
  while (cur != id_index) {
    cur = mul(cur, g);
    ++ord;
  }
  return ord;
}

// Size of the subgroup generated by a set, by exhaustive closure.
template <typename Mul>
std::set<int> subgroup_closure(int id_index, std::vector<int> gens, Mul mul) {
  std::set<int> seen{id_index};
  std::vector<int> frontier{id_index};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : gens) {
        int y = mul(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace pint::oracle
