// SPDX-License-Identifier: MIT
//
// Character arithmetic: tables, conductors, enumeration, and the derived
// objects (alpha, lambda, delta, parametrization twist).

#include "pint/characters.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "pint/errors.hpp"

namespace pint {

// ---------------------------------------------------------------- AddChar

int AddChar::level() const {
  PINT_CHECK(!beta.is_zero());
  return -val_p(beta, p);
}

Angle AddChar::eval(const PAdic& x) const {
  PINT_CHECK(x.prime() == p);
  if (x.is_zero() && x.abs_prec() >= -val_p(beta, p)) return Angle::zero();
  int prec = x.abs_prec() == PAdic::kInf
                 ? 4
                 : x.abs_prec() + std::abs(val_p(beta, p)) + 2;
  PAdic b = PAdic::from_rat(p, beta, prec);
  return (b * x).psi_angle();
}

Angle AddChar::eval_trace(const EElem& t) const { return eval(trace(t)); }

// -------------------------------------------------------------- FQuadChar

Angle FQuadChar::eval(const PAdic& x) const {
  PINT_CHECK(x.prime() == p);
  int v = x.val();
  int sign = 1;
  if (ramified_ext) {
    sign = legendre(x.unit_mod(1), p);
    if (v % 2 != 0) sign *= sign_at_p;
  } else {
    if (v % 2 != 0) sign = -1;
  }
  PINT_CHECK(sign == 1 || sign == -1);
  return sign == 1 ? Angle::zero() : Angle::half();
}

Angle FQuadChar::eval_rat(const Rat& r, int prec) const {
  return eval(PAdic::from_rat(p, r, prec));
}

FQuadChar eta_char(const QuadExt& E) {
  FQuadChar eta;
  eta.p = E.p;
  eta.ramified_ext = E.ramified();
  if (E.ramified()) {
    // p = -Nm(sqrt(D)) / (-xi) forces eta(p) = eta(-xi) since norms die.
    std::int64_t xi = E.xi().residue(1);
    eta.sign_at_p = legendre(((E.p - xi) % E.p + E.p) % E.p, E.p);
  } else {
    eta.sign_at_p = -1;
  }
  return eta;
}

// --------------------------------------------------------------- MultChar

MultChar::MultChar(std::shared_ptr<const UnitClasses> cls,
                   std::vector<Angle> table, Angle unif)
    : cls_(std::move(cls)), table_(std::move(table)), unif_(unif) {
  PINT_CHECK(table_.size() == static_cast<std::size_t>(cls_->size()));
  PINT_CHECK(table_[static_cast<std::size_t>(cls_->id_class())] ==
             Angle::zero());
}

Angle MultChar::eval(const EElem& t) const {
  auto [v, u] = unit_split(t);
  return unif_.times(v) + table_[static_cast<std::size_t>(cls_->class_of(u))];
}

Angle MultChar::at_p(int prec) const {
  return eval(elem_int(field(), field().p, 0, prec));
}

int MultChar::conductor() const {
  if (conductor_cache_ >= 0) return conductor_cache_;
  for (int j = 0; j <= level(); ++j) {
    bool trivial = true;
    for (int i : cls_->filtration_classes(j)) {
      if (!(table_[static_cast<std::size_t>(i)] == Angle::zero())) {
        trivial = false;
        break;
      }
    }
    if (trivial) {
      conductor_cache_ = j;
      return j;
    }
  }
  throw InternalError("character table is not trivial at its own level");
}

bool MultChar::is_trivial() const {
  if (!(unif_ == Angle::zero())) return false;
  return conductor() == 0;
}

bool MultChar::trivial_on_F(int prec) const {
  for (int i : cls_->f_unit_classes()) {
    if (!(table_[static_cast<std::size_t>(i)] == Angle::zero())) return false;
  }
  return at_p(prec) == Angle::zero();
}

MultChar MultChar::conjugated() const {
  std::vector<Angle> table(table_.size());
  for (int i = 0; i < cls_->size(); ++i) {
    table[static_cast<std::size_t>(i)] =
        table_[static_cast<std::size_t>(cls_->conj_class(i))];
  }
  Angle unif = unif_;
  if (field().ramified()) {
    // conj(sqrt(D)) = -sqrt(D), so the uniformizer value picks up chi(-1).
    unif = unif + table_[static_cast<std::size_t>(cls_->class_of_pair(-1, 0))];
  }
  return MultChar(cls_, std::move(table), unif);
}

MultChar MultChar::inverse() const {
  std::vector<Angle> table(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) table[i] = -table_[i];
  return MultChar(cls_, std::move(table), -unif_);
}

MultChar MultChar::at_level(int lvl) const {
  if (lvl == level()) return *this;
  if (lvl > level()) {
    auto fine = std::make_shared<UnitClasses>(field(), lvl);
    std::vector<Angle> table(static_cast<std::size_t>(fine->size()));
    for (int i = 0; i < fine->size(); ++i) {
      table[static_cast<std::size_t>(i)] =
          table_[static_cast<std::size_t>(fine->reduce_to(*cls_, i))];
    }
    return MultChar(std::move(fine), std::move(table), unif_);
  }
  if (conductor() > lvl)
    throw DomainError("cannot reduce a character below its conductor");
  auto coarse = std::make_shared<UnitClasses>(field(), lvl);
  std::vector<Angle> table(static_cast<std::size_t>(coarse->size()));
  std::vector<bool> seen(static_cast<std::size_t>(coarse->size()), false);
  for (int i = 0; i < cls_->size(); ++i) {
    int j = cls_->reduce_to(*coarse, i);
    if (seen[static_cast<std::size_t>(j)]) {
      PINT_CHECK(table[static_cast<std::size_t>(j)] ==
                 table_[static_cast<std::size_t>(i)]);
    } else {
      seen[static_cast<std::size_t>(j)] = true;
      table[static_cast<std::size_t>(j)] = table_[static_cast<std::size_t>(i)];
    }
  }
  return MultChar(std::move(coarse), std::move(table), unif_);
}

MultChar MultChar::with_uniformizer(const Angle& a) const {
  return MultChar(cls_, table_, a);
}

MultChar operator*(const MultChar& a, const MultChar& b) {
  PINT_CHECK(a.field() == b.field());
  int lvl = std::max(a.level(), b.level());
  MultChar pa = a.at_level(lvl);
  MultChar pb = b.at_level(lvl);
  PINT_CHECK(pa.cls_->size() == pb.cls_->size());
  std::vector<Angle> table(pa.table_.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = pa.table_[i] + pb.table_[i];
  }
  return MultChar(pa.cls_, std::move(table), pa.unif_ + pb.unif_);
}

bool operator==(const MultChar& a, const MultChar& b) {
  if (!(a.field() == b.field())) return false;
  if (!(a.unif_ == b.unif_)) return false;
  int lvl = std::max(a.level(), b.level());
  MultChar pa = a.at_level(lvl);
  MultChar pb = b.at_level(lvl);
  return pa.table_ == pb.table_;
}

// -------------------------------------------------- table constructions

MultChar char_from_generators(
    std::shared_ptr<const UnitClasses> cls,
    const std::vector<std::pair<EElem, Angle>>& gens, const Angle& unif) {
  int n = cls->size();
  std::vector<Angle> table(static_cast<std::size_t>(n));
  std::vector<bool> known(static_cast<std::size_t>(n), false);
  known[static_cast<std::size_t>(cls->id_class())] = true;

  std::vector<std::pair<int, Angle>> gcls;
  gcls.reserve(gens.size());
  for (const auto& [elem, angle] : gens) {
    gcls.emplace_back(cls->class_of(elem), angle);
  }

  std::deque<int> queue = {cls->id_class()};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    Angle base = table[static_cast<std::size_t>(i)];
    for (const auto& [gc, ga] : gcls) {
      int j = cls->mul(i, gc);
      Angle v = base + ga;
      if (!known[static_cast<std::size_t>(j)]) {
        known[static_cast<std::size_t>(j)] = true;
        table[static_cast<std::size_t>(j)] = v;
        queue.push_back(j);
      } else if (!(table[static_cast<std::size_t>(j)] == v)) {
        throw InconsistentTable(
            "generator values do not extend to a character");
      }
    }
  }
  for (bool k : known) {
    if (!k) throw InconsistentTable("generators do not span the unit classes");
  }
  return MultChar(std::move(cls), std::move(table), unif);
}

std::vector<MultChar> enumerate_characters(const QuadExt& E, int level,
                                           bool trivial_on_f,
                                           std::optional<int> exact_conductor) {
  auto cls = std::make_shared<UnitClasses>(E, level);
  GroupView g;
  g.elems.resize(static_cast<std::size_t>(cls->size()));
  for (int i = 0; i < cls->size(); ++i) g.elems[static_cast<std::size_t>(i)] = i;
  g.mul = [&cls](int a, int b) { return cls->mul(a, b); };
  g.id = cls->id_class();

  std::map<int, int> coset;
  GroupView q = g;
  if (trivial_on_f) {
    const auto& f = cls->f_unit_classes();
    q = quotient_view(g, std::set<int>(f.begin(), f.end()), &coset);
  } else {
    for (int i : g.elems) coset[i] = i;
  }
  BasisResult basis = abelian_basis(q);
  std::size_t r = basis.gens.size();

  // The class of xi^{-1} pins uniformizer values in the ramified case:
  // chi(p) = 2 chi(sqrt(D)) + chi(xi^{-1}) because p = sqrt(D)^2 xi^{-1}.
  int xi_inv_class = -1;
  if (E.ramified()) {
    std::int64_t pa = pow_i64(E.p, cls->ca());
    std::int64_t xi = E.xi().residue(cls->ca());
    xi_inv_class = cls->class_of_pair(inv_mod(xi, pa), 0);
  }

  std::vector<MultChar> out;
  std::vector<std::int64_t> k(r, 0);
  while (true) {
    std::vector<Angle> table(static_cast<std::size_t>(cls->size()));
    for (int i = 0; i < cls->size(); ++i) {
      const auto& e = basis.expo.at(coset.at(i));
      Angle a = Angle::zero();
      for (std::size_t j = 0; j < r; ++j) {
        a = a + Angle::make(k[j] * e[j], basis.orders[j]);
      }
      table[static_cast<std::size_t>(i)] = a;
    }

    std::vector<Angle> unifs;
    if (!trivial_on_f) {
      unifs.push_back(Angle::zero());
    } else if (!E.ramified()) {
      // The uniformizer is p itself; triviality on F^x forces value zero.
      unifs.push_back(Angle::zero());
    } else {
      Angle t = table[static_cast<std::size_t>(xi_inv_class)];
      Angle u0 = Angle::make(-t.num, 2 * t.den);
      unifs.push_back(u0);
      unifs.push_back(u0 + Angle::half());
    }

    for (const Angle& u : unifs) {
      MultChar chi(cls, table, u);
      if (exact_conductor && chi.conductor() != *exact_conductor) continue;
      out.push_back(std::move(chi));
    }

    std::size_t i = 0;
    while (i < r && ++k[i] == basis.orders[i]) {
      k[i] = 0;
      ++i;
    }
    if (i == r) break;
  }
  return out;
}

// ------------------------------------------------------------------ alpha

AlphaElement alpha_element(const MultChar& nu, int prec) {
  const QuadExt& E = nu.field();
  int c = nu.conductor();
  if (c < 2) throw DomainError("alpha is defined only for conductor >= 2");
  if (E.ramified() && c % 2 != 0) {
    throw UnsupportedCase(
        "ramified extension with odd conductor admits no trace-zero alpha");
  }

  int vy, depth;
  if (E.ramified()) {
    vy = -c / 2 - 1;
    depth = (c + 3) / 4;
  } else {
    vy = -c;
    depth = c / 2;
  }

  // nu(1 + u) on representatives of pi^{ceil(c/2)} O / pi^c O, compared
  // against psi(Tr(alpha u)) = psi(2 y u_y D).
  std::vector<EElem> grid = additive_coset_reps(E, (c + 1) / 2, c, prec);
  MultChar nu_at_c = nu.at_level(std::max(nu.level(), c));
  std::vector<Angle> lhs;
  lhs.reserve(grid.size());
  const EElem unit_one = one(E, prec);
  for (const EElem& u : grid) lhs.push_back(nu_at_c.eval(unit_one + u));

  std::int64_t pd = pow_i64(E.p, depth);
  std::int64_t denom = pow_i64(E.p, -vy);
  std::vector<std::int64_t> found;
  for (std::int64_t w = 1; w < pd; ++w) {
    if (w % E.p == 0) continue;
    Rat y = Rat::make(w, denom);
    PAdic two_y = PAdic::from_rat(E.p, y * Rat(2), prec);
    bool ok = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Angle rhs = (two_y * grid[i].y * E.D).psi_angle();
      if (!(rhs == lhs[i])) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(w);
  }
  if (found.empty())
    throw AlphaNotFound("no trace-zero parameter matches the character");
  PINT_CHECK(found.size() == 1);

  AlphaElement res;
  res.y = Rat::make(found.front(), denom);
  res.alpha = elem_rat(E, Rat(0), res.y, prec);
  res.v_e = E.ramified() ? 2 * vy + 1 : vy;
  res.amb = E.ramified() ? 2 * (vy + depth) + 1 : vy + depth;
  PINT_CHECK(val_E(res.alpha) == res.v_e);
  PINT_CHECK(res.v_e == -c + (E.ramified() ? -1 : 0));
  return res;
}

// ----------------------------------------------------------------- lambda

Angle lambda_constant(const QuadExt& E, const Rat& beta) {
  PINT_CHECK(E.ramified());
  if (val_p(beta, E.p) != 0)
    throw DomainError("lambda is computed for unit beta only");
  FQuadChar eta = eta_char(E);

  // Quadratic Gauss sum against x -> psi(beta x / p).
  AngleSum sum;
  for (std::int64_t x = 1; x < E.p; ++x) {
    PAdic arg = PAdic::from_rat(E.p, beta * Rat::make(x, E.p), 4);
    sum.add(arg.psi_angle(), Rat(legendre(x, E.p)));
  }
  Cyclo tau = sum.value(8 * E.p);
  Cyclo target = tau.scaled(Rat(eta.sign_at_p));

  const Cyclo sq = Cyclo::sqrt_q(E.p);
  for (std::int64_t k = 0; k < 4; ++k) {
    Angle a = Angle::make(k, 4);
    if (Cyclo::root(a) * sq == target) return a;
  }
  throw InternalError("normalizing constant is not a fourth root of unity");
}

// ------------------------------------------------------------------ delta

MultChar delta_char(const QuadExt& E, int c_theta, const AlphaElement& alpha,
                    int prec) {
  auto cls = std::make_shared<UnitClasses>(E, 1);
  if (!E.ramified()) {
    std::vector<Angle> table(static_cast<std::size_t>(cls->size()),
                             Angle::zero());
    return MultChar(std::move(cls), std::move(table), Angle::half());
  }
  PINT_CHECK(c_theta >= 2 && c_theta % 2 == 0);
  FQuadChar eta = eta_char(E);
  std::vector<Angle> table(static_cast<std::size_t>(cls->size()));
  for (int i = 0; i < cls->size(); ++i) {
    auto [a, b] = cls->rep_pair(i);
    (void)b;
    table[static_cast<std::size_t>(i)] =
        legendre(a, E.p) == 1 ? Angle::zero() : Angle::half();
  }
  // Value at sqrt(D): eta(y D^{c/2}) * lambda^{c-1}, where
  // sqrt(D)^{c-1} * alpha = y D^{c/2} already lies in F.
  PAdic f = PAdic::from_rat(E.p, alpha.y, prec + c_theta) * E.D.pow(c_theta / 2);
  Angle unif =
      eta.eval(f) + lambda_constant(E, Rat(1)).times(c_theta - 1);
  return MultChar(std::move(cls), std::move(table), unif);
}

// ------------------------------------------------------------------ twist

TwistResult langlands_twist(const MultChar& big_theta, int prec) {
  const QuadExt& E = big_theta.field();
  int c = big_theta.conductor();
  if (c < 2) throw UnsupportedCase("depth-zero data are not supported");
  if (E.ramified() && c % 2 != 0) {
    throw UnsupportedCase(
        "ramified extension with odd conductor is not supported");
  }
  AlphaElement alpha = alpha_element(big_theta, prec);
  MultChar delta = delta_char(E, c, alpha, prec);
  MultChar theta = big_theta * delta;
  PINT_CHECK(theta.conductor() == c);
  return TwistResult{std::move(theta), std::move(alpha), std::move(delta)};
}

}  // namespace pint
