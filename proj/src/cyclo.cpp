// SPDX-License-Identifier: MIT

#include "pint/cyclo.hpp"

#include <cmath>
#include <sstream>

#include "pint/errors.hpp"

namespace pint {

std::int64_t euler_phi(std::int64_t n) {
  PINT_CHECK(n >= 1);
  std::int64_t result = n;
  std::int64_t m = n;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of integer polynomials (ascending coefficients); the
// remainder must vanish.
std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> num,
                                         const std::vector<std::int64_t>& den) {
  PINT_CHECK(!den.empty() && den.back() == 1);  // monic
  PINT_CHECK(num.size() >= den.size());
  std::vector<std::int64_t> q(num.size() - den.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    std::int64_t coef = num[i + den.size() - 1];
    q[i] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) {
      __int128 t = static_cast<__int128>(num[i + j]) -
                   static_cast<__int128>(coef) * den[j];
      num[i + j] = detail::narrow_i64(t, "cyclotomic polynomial division");
    }
  }
  for (std::int64_t c : num) PINT_CHECK_MSG(c == 0, "division not exact");
  return q;
}

struct OrderTables {
  std::int64_t phi;
  std::vector<std::int64_t> poly;  // Phi_N
  // rows[k] = coordinates of zeta^k in the power basis, k in [0, N)
  std::vector<std::vector<std::int64_t>> rows;
};

const OrderTables& tables_for(std::int64_t n) {
  static std::map<std::int64_t, OrderTables> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  OrderTables t;
  t.phi = euler_phi(n);
  t.poly = cyclotomic_poly(n);
  t.rows.resize(static_cast<std::size_t>(n));
  std::size_t phi = static_cast<std::size_t>(t.phi);
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
    if (k < phi) {
      t.rows[k].assign(phi, 0);
      t.rows[k][k] = 1;
      continue;
    }
    // zeta^k = zeta * zeta^(k-1), reduced by the monic Phi_N.
    std::vector<std::int64_t> shifted(phi + 1, 0);
    for (std::size_t j = 0; j < phi; ++j) shifted[j + 1] = t.rows[k - 1][j];
    std::int64_t lead = shifted[phi];
    if (lead != 0) {
      for (std::size_t j = 0; j < phi; ++j) {
        __int128 v = static_cast<__int128>(shifted[j]) -
                     static_cast<__int128>(lead) * t.poly[j];
        shifted[j] = detail::narrow_i64(v, "power reduction");
      }
    }
    shifted.resize(phi);
    t.rows[k] = std::move(shifted);
  }
  return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_poly(std::int64_t n) {
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::int64_t> result;
  if (n == 1) {
    result = {-1, 1};  // x - 1
  } else {
    // (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      num = poly_div_exact(std::move(num), cyclotomic_poly(d));
    }
    result = std::move(num);
  }
  return cache.emplace(n, std::move(result)).first->second;
}

Cyclo Cyclo::rational(const Rat& r) {
  Cyclo x;
  x.c_[0] = r;
  return x;
}

Cyclo Cyclo::root(const Angle& a) {
  Cyclo x;
  x.n_ = a.den;
  const OrderTables& t = tables_for(x.n_);
  x.c_.assign(static_cast<std::size_t>(t.phi), Rat(0));
  const auto& row = t.rows[static_cast<std::size_t>(a.num)];
  for (std::size_t j = 0; j < row.size(); ++j) x.c_[j] = Rat(row[j]);
  return x;
}

Cyclo Cyclo::phased(const Rat& r, const Angle& a) {
  return root(a).scaled(r);
}

Cyclo Cyclo::promoted(std::int64_t N) const {
  PINT_CHECK_MSG(N % n_ == 0, "promotion order must be a multiple");
  if (N == n_) return *this;
  if (N > kHardOrderCap)
    throw OrderBudgetExceeded("cyclotomic order " + std::to_string(N) +
                              " above hard cap");
  const OrderTables& t = tables_for(N);
  Cyclo x;
  x.n_ = N;
  x.c_.assign(static_cast<std::size_t>(t.phi), Rat(0));
  std::int64_t stride = N / n_;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    const auto& row =
        t.rows[static_cast<std::size_t>((static_cast<std::int64_t>(i) * stride) % N)];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) x.c_[j] += c_[i] * Rat(row[j]);
  }
  return x;
}

namespace {
std::int64_t common_order(const Cyclo& a, const Cyclo& b) {
  std::int64_t N = lcm_i64(a.order(), b.order());
  if (N > Cyclo::kHardOrderCap)
    throw OrderBudgetExceeded("lcm of cyclotomic orders " +
                              std::to_string(a.order()) + ", " +
                              std::to_string(b.order()) + " above hard cap");
  return N;
}
}  // namespace

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  std::int64_t N = common_order(a, b);
  Cyclo x = a.promoted(N), y = b.promoted(N);
  for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
  std::int64_t N = common_order(a, b);
  Cyclo x = a.promoted(N), y = b.promoted(N);
  for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
  return x;
}

Cyclo Cyclo::operator-() const {
  Cyclo x = *this;
  for (auto& v : x.c_) v = -v;
  return x;
}

Cyclo Cyclo::scaled(const Rat& r) const {
  Cyclo x = *this;
  for (auto& v : x.c_) v *= r;
  return x;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  std::int64_t N = common_order(a, b);
  Cyclo x = a.promoted(N), y = b.promoted(N);
  const OrderTables& t = tables_for(N);
  std::size_t phi = static_cast<std::size_t>(t.phi);
  // Convolution with exponents folded mod N, then the tail reduced through
  // the power table.
  std::vector<Rat> acc(phi, Rat(0));
  for (std::size_t i = 0; i < phi; ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (y.c_[j].is_zero()) continue;
      Rat w = x.c_[i] * y.c_[j];
      std::size_t k = (i + j) % static_cast<std::size_t>(N);
      const auto& row = t.rows[k];
      for (std::size_t m = 0; m < phi; ++m)
        if (row[m] != 0) acc[m] += w * Rat(row[m]);
    }
  }
  Cyclo r;
  r.n_ = N;
  r.c_ = std::move(acc);
  return r;
}

Cyclo Cyclo::conj() const {
  const OrderTables& t = tables_for(n_);
  std::size_t phi = static_cast<std::size_t>(t.phi);
  std::vector<Rat> acc(phi, Rat(0));
  for (std::size_t i = 0; i < phi; ++i) {
    if (c_[i].is_zero()) continue;
    std::size_t k = static_cast<std::size_t>(
        (n_ - static_cast<std::int64_t>(i)) % n_);
    const auto& row = t.rows[k];
    for (std::size_t m = 0; m < phi; ++m)
      if (row[m] != 0) acc[m] += c_[i] * Rat(row[m]);
  }
  Cyclo r;
  r.n_ = n_;
  r.c_ = std::move(acc);
  return r;
}

Cyclo Cyclo::abs2() const { return *this * conj(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
  std::int64_t N = common_order(a, b);
  Cyclo x = a.promoted(N), y = b.promoted(N);
  return x.c_ == y.c_;
}

bool Cyclo::is_zero() const {
  for (const auto& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rat Cyclo::to_rat() const {
  if (!is_rational()) throw DomainError("cyclotomic value is not rational");
  return c_[0];
}

std::complex<double> Cyclo::approx() const {
  long double re = 0, im = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    long double coef = static_cast<long double>(c_[i].num) /
                       static_cast<long double>(c_[i].den);
    long double arg = 2.0L * 3.14159265358979323846264338327950288L *
                      static_cast<long double>(i) /
                      static_cast<long double>(n_);
    re += coef * std::cos(arg);
    im += coef * std::sin(arg);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclo::str() const {
  std::ostringstream os;
  os << "Q(zeta_" << n_ << ")[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].str();
  }
  os << ']';
  return os.str();
}

Cyclo Cyclo::sqrt_q(std::int64_t q) {
  PINT_CHECK_MSG(q > 2, "sqrt_q expects an odd prime");
  AngleSum g;
  for (std::int64_t x = 0; x < q; ++x)
    g.add(Angle::make(mul_mod(x, x, q), q), Rat(1));
  Cyclo gs = g.value(kHardOrderCap);
  if (q % 4 == 1) return gs;
  // -i * g for q = 3 mod 4.
  return Cyclo::root(Angle(3, 4)) * gs;
}

void AngleSum::add(const Angle& a, const Rat& w) {
  if (w.is_zero()) return;
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    terms_.emplace(a, w);
    return;
  }
  it->second += w;
  if (it->second.is_zero()) terms_.erase(it);
}

Cyclo AngleSum::value(std::int64_t order_cap) const {
  std::int64_t N = 1;
  for (const auto& [a, w] : terms_) {
    (void)w;
    N = lcm_i64(N, a.den);
    if (N > order_cap)
      throw OrderBudgetExceeded(
          "angle sum needs cyclotomic order above the cap " +
          std::to_string(order_cap));
  }
  // Assemble at the common order directly to avoid repeated promotions.
  Cyclo acc = Cyclo::rational(Rat(0)).promoted(N);
  for (const auto& [a, w] : terms_)
    acc = acc + Cyclo::phased(w, a);
  return acc;
}

}  // namespace pint
