// SPDX-License-Identifier: MIT
//
// Unit-class groups and the finite-abelian structure algorithm.

#include "pint/unitgroup.hpp"

#include <algorithm>
#include <map>

#include "pint/errors.hpp"

namespace pint {

namespace {

// Mixed-modulus product of class representatives: for x = a1 + b1*sqrt(D)
// and y = a2 + b2*sqrt(D), the product coordinates are
//   a = a1*a2 + b1*b2*D,  b = a1*b2 + a2*b1.
// Any integer representative of each factor works because the error terms
// land above the coordinate moduli.
std::pair<std::int64_t, std::int64_t> coord_mul(
    std::int64_t a1, std::int64_t b1, std::int64_t a2, std::int64_t b2,
    std::int64_t d_mod, std::int64_t pa, std::int64_t pb) {
  __int128 a = static_cast<__int128>(a1) * a2 +
               static_cast<__int128>(b1) * b2 % pa * d_mod;
  __int128 b = static_cast<__int128>(a1) * b2 + static_cast<__int128>(a2) * b1;
  std::int64_t am = static_cast<std::int64_t>(((a % pa) + pa) % pa);
  std::int64_t bm = static_cast<std::int64_t>(((b % pb) + pb) % pb);
  return {am, bm};
}

}  // namespace

UnitClasses::UnitClasses(const QuadExt& E, int level) : E_(E), level_(level) {
  if (level < 1) throw DomainError("unit-class level must be >= 1");
  if (E_.ramified()) {
    ca_ = (level + 1) / 2;
    cb_ = level / 2;
  } else {
    ca_ = level;
    cb_ = level;
  }
  pa_ = pow_i64(E_.p, ca_);
  pb_ = pow_i64(E_.p, cb_);
  if (pa_ > (1 << 20) || pb_ > (1 << 20) || pa_ * pb_ > (1 << 26))
    throw OverflowError("unit-class quotient too large to enumerate");
  d_mod_ = E_.D.residue(ca_);

  index_.assign(static_cast<std::size_t>(pa_ * pb_), -1);
  for (std::int64_t a = 0; a < pa_; ++a) {
    for (std::int64_t b = 0; b < pb_; ++b) {
      bool unit;
      if (E_.ramified()) {
        unit = (a % E_.p) != 0;
      } else {
        unit = (a % E_.p) != 0 || (b % E_.p) != 0;
      }
      if (!unit) continue;
      index_[static_cast<std::size_t>(a * pb_ + b)] =
          static_cast<int>(reps_.size());
      reps_.emplace_back(a, b);
    }
  }
  id_ = lookup(1 % pa_, 0);

  for (std::int64_t u = 1; u < pa_; ++u) {
    if (u % E_.p == 0) continue;
    f_classes_.push_back(lookup(u, 0));
  }
  std::sort(f_classes_.begin(), f_classes_.end());
}

int UnitClasses::lookup(std::int64_t a, std::int64_t b) const {
  int idx = index_[static_cast<std::size_t>(a * pb_ + b)];
  PINT_CHECK(idx >= 0);
  return idx;
}

int UnitClasses::mul(int i, int j) const {
  const auto& x = reps_[static_cast<std::size_t>(i)];
  const auto& y = reps_[static_cast<std::size_t>(j)];
  auto [a, b] = coord_mul(x.first, x.second, y.first, y.second, d_mod_, pa_, pb_);
  return lookup(a, b);
}

int UnitClasses::inv(int i) const {
  const auto& x = reps_[static_cast<std::size_t>(i)];
  // (a + b sqrt(D))^{-1} = (a - b sqrt(D)) / (a^2 - b^2 D).
  __int128 nm128 = static_cast<__int128>(x.first) * x.first -
                   static_cast<__int128>(x.second) * x.second % pa_ * d_mod_;
  std::int64_t nm = static_cast<std::int64_t>(((nm128 % pa_) + pa_) % pa_);
  PINT_CHECK(nm % E_.p != 0);
  std::int64_t nm_inv_a = inv_mod(nm, pa_);
  std::int64_t a = mul_mod(x.first % pa_, nm_inv_a, pa_);
  std::int64_t b = 0;
  if (pb_ > 1) {
    std::int64_t nm_inv_b = inv_mod(nm % pb_, pb_);
    b = mul_mod((pb_ - x.second % pb_) % pb_, nm_inv_b, pb_);
  }
  return lookup(a, b);
}

int UnitClasses::conj_class(int i) const {
  const auto& x = reps_[static_cast<std::size_t>(i)];
  return lookup(x.first, (pb_ - x.second) % pb_);
}

int UnitClasses::class_of(const EElem& u) const {
  if (val_E(u) != 0) throw DomainError("class_of requires a unit");
  std::int64_t a = u.x.residue(ca_);
  std::int64_t b = cb_ > 0 ? u.y.residue(cb_) : 0;
  return lookup(a, b);
}

int UnitClasses::class_of_pair(std::int64_t a, std::int64_t b) const {
  std::int64_t am = ((a % pa_) + pa_) % pa_;
  std::int64_t bm = ((b % pb_) + pb_) % pb_;
  int idx = index_[static_cast<std::size_t>(am * pb_ + bm)];
  if (idx < 0) throw DomainError("pair is not a unit class");
  return idx;
}

EElem UnitClasses::rep(int i, int prec) const {
  const auto& x = reps_[static_cast<std::size_t>(i)];
  return elem_int(E_, x.first, x.second, prec);
}

int UnitClasses::reduce_to(const UnitClasses& lower, int i) const {
  PINT_CHECK(lower.E_ == E_ && lower.level_ <= level_);
  const auto& x = reps_[static_cast<std::size_t>(i)];
  return lower.class_of_pair(x.first % lower.pa_, x.second % lower.pb_);
}

std::vector<int> UnitClasses::filtration_classes(int j) const {
  PINT_CHECK(j >= 0 && j <= level_);
  std::vector<int> out;
  if (j == 0) {
    out.resize(static_cast<std::size_t>(size()));
    for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = i;
    return out;
  }
  // 1 + s + t sqrt(D) with v_E(s + t sqrt(D)) >= j.
  int va, vb;
  if (E_.ramified()) {
    va = (j + 1) / 2;  // 2 v(s) >= j
    vb = j / 2;        // 2 v(t) + 1 >= j
  } else {
    va = j;
    vb = j;
  }
  std::int64_t sa = va >= ca_ ? pa_ : pow_i64(E_.p, va);
  std::int64_t sb = vb >= cb_ ? pb_ : pow_i64(E_.p, vb);
  for (std::int64_t s = 0; s < pa_; s += sa) {
    for (std::int64_t t = 0; t < pb_; t += sb) {
      out.push_back(lookup((1 + s) % pa_, t));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int group_pow(const GroupView& g, int x, std::int64_t e) {
  PINT_CHECK(e >= 0);
  int acc = g.id;
  int base = x;
  while (e > 0) {
    if (e & 1) acc = g.mul(acc, base);
    base = g.mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::int64_t group_order_of(const GroupView& g, int x) {
  std::int64_t ord = 1;
  int y = x;
  while (y != g.id) {
    y = g.mul(y, x);
    ++ord;
    PINT_CHECK(ord <= static_cast<std::int64_t>(g.elems.size()));
  }
  return ord;
}

GroupView quotient_view(const GroupView& g, const std::set<int>& subgroup,
                        std::map<int, int>* coset_out) {
  PINT_CHECK(subgroup.count(g.id) == 1);
  auto sub = std::make_shared<std::vector<int>>(subgroup.begin(), subgroup.end());
  auto base_mul = g.mul;
  auto coset_of = [sub, base_mul](int x) {
    int best = -1;
    for (int h : *sub) {
      int y = base_mul(x, h);
      if (best < 0 || y < best) best = y;
    }
    return best;
  };
  GroupView q;
  std::set<int> reps;
  for (int x : g.elems) {
    int r = coset_of(x);
    reps.insert(r);
    if (coset_out) (*coset_out)[x] = r;
  }
  q.elems.assign(reps.begin(), reps.end());
  q.id = coset_of(g.id);
  q.mul = [base_mul, coset_of](int a, int b) {
    return coset_of(base_mul(a, b));
  };
  return q;
}

std::vector<EElem> additive_coset_reps(const QuadExt& E, int h, int c,
                                       int prec) {
  PINT_CHECK(0 <= h && h <= c);
  int vx, vy, cx, cy;
  if (E.ramified()) {
    vx = (h + 1) / 2;         // 2 v(x) >= h
    vy = h > 0 ? h / 2 : 0;   // 2 v(y) + 1 >= h
    cx = (c + 1) / 2;
    cy = c / 2;
  } else {
    vx = vy = h;
    cx = cy = c;
  }
  std::int64_t px = pow_i64(E.p, vx);
  std::int64_t py = pow_i64(E.p, vy);
  std::int64_t nx = vx >= cx ? 1 : pow_i64(E.p, cx - vx);
  std::int64_t ny = vy >= cy ? 1 : pow_i64(E.p, cy - vy);
  std::vector<EElem> out;
  out.reserve(static_cast<std::size_t>(nx * ny));
  for (std::int64_t i = 0; i < nx; ++i) {
    for (std::int64_t j = 0; j < ny; ++j) {
      out.push_back(elem_int(E, px * i, py * j, prec));
    }
  }
  return out;
}

namespace {

// Basis of a finite abelian q-group: peel off an element of maximal order,
// recurse on the quotient, and adjust each lifted generator by a power of
// the peeled one so that its order matches its quotient order.
std::vector<std::pair<int, std::int64_t>> primary_basis(const GroupView& g,
                                                        std::int64_t q) {
  std::vector<std::pair<int, std::int64_t>> out;
  if (g.elems.size() <= 1) return out;

  int gmax = -1;
  std::int64_t max_ord = 0;
  for (int x : g.elems) {  // elems ascending, so ties pick the smallest id
    std::int64_t o = group_order_of(g, x);
    if (o > max_ord) {
      gmax = x;
      max_ord = o;
    }
  }
  PINT_CHECK(max_ord > 1);
  out.emplace_back(gmax, max_ord);

  // Cyclic subgroup generated by gmax, with discrete logs.
  std::map<int, std::int64_t> dlog;
  std::set<int> cyc;
  {
    int y = g.id;
    for (std::int64_t k = 0; k < max_ord; ++k) {
      cyc.insert(y);
      dlog[y] = k;
      y = g.mul(y, gmax);
    }
    PINT_CHECK(y == g.id);
  }
  if (cyc.size() == g.elems.size()) return out;

  GroupView quot = quotient_view(g, cyc);
  auto sub = primary_basis(quot, q);
  for (const auto& [gen_q, ord_q] : sub) {
    // In the full group gen_q^ord_q lies in <gmax>; divide it out.
    int h = group_pow(g, gen_q, ord_q);
    auto it = dlog.find(h);
    PINT_CHECK(it != dlog.end());
    std::int64_t t = it->second;
    PINT_CHECK(t % ord_q == 0);
    std::int64_t shift = (max_ord - t / ord_q % max_ord) % max_ord;
    int adjusted = g.mul(gen_q, group_pow(g, gmax, shift));
    PINT_CHECK(group_order_of(g, adjusted) == ord_q);
    out.emplace_back(adjusted, ord_q);
  }
  return out;
}

}  // namespace

BasisResult abelian_basis(const GroupView& g) {
  BasisResult res;
  std::int64_t n = static_cast<std::int64_t>(g.elems.size());
  PINT_CHECK(n >= 1);
  if (n == 1) {
    res.expo[g.id] = {};
    return res;
  }

  // Factor the group order.
  std::vector<std::pair<std::int64_t, std::int64_t>> factors;  // (q, q^e)
  {
    std::int64_t m = n;
    for (std::int64_t q = 2; q * q <= m; ++q) {
      if (m % q != 0) continue;
      std::int64_t qe = 1;
      while (m % q == 0) {
        m /= q;
        qe *= q;
      }
      factors.emplace_back(q, qe);
    }
    if (m > 1) factors.emplace_back(m, m);
  }

  // Primary components via the idempotent projections x -> x^t with
  // t = 1 mod q^e and t = 0 mod n/q^e.
  std::int64_t check = 1;
  for (const auto& [q, qe] : factors) {
    std::int64_t r = n / qe;
    std::int64_t t = r * inv_mod(r % qe, qe);
    std::set<int> comp;
    for (int x : g.elems) comp.insert(group_pow(g, x, t));
    GroupView sub;
    sub.elems.assign(comp.begin(), comp.end());
    sub.mul = g.mul;
    sub.id = g.id;
    check *= static_cast<std::int64_t>(sub.elems.size());
    for (const auto& [gen, ord] : primary_basis(sub, q)) {
      res.gens.push_back(gen);
      res.orders.push_back(ord);
    }
  }
  PINT_CHECK(check == n);

  // Exponent tuple of every element by odometer enumeration.
  std::size_t r = res.gens.size();
  std::vector<std::int64_t> k(r, 0);
  int cur = g.id;
  std::int64_t count = 0;
  while (true) {
    PINT_CHECK(res.expo.emplace(cur, k).second);
    ++count;
    std::size_t i = 0;
    while (i < r) {
      k[i] += 1;
      cur = g.mul(cur, res.gens[i]);
      if (k[i] < res.orders[i]) break;
      k[i] = 0;  // cur has wrapped through gens[i]^orders[i] = id
      ++i;
    }
    if (i == r) break;
  }
  PINT_CHECK(count == n);
  PINT_CHECK(static_cast<std::int64_t>(res.expo.size()) == n);
  for (int x : g.elems) PINT_CHECK(res.expo.count(x) == 1);
  return res;
}

}  // namespace pint
