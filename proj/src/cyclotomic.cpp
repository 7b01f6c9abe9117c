#include "ncinv/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "ncinv/errors.hpp"

namespace ncinv {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the monic integer polynomial f.
void reduce_mod(Poly& p, const std::vector<Integer>& f) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = p.size(); d-- > deg;) {
    if (p[d] == 0) continue;
    const Rational c = p[d];
    const std::size_t shift = d - deg;
    for (std::size_t k = 0; k <= deg; ++k) {
      if (f[k] != 0) p[shift + k] -= c * Rational(f[k]);
    }
  }
  p.resize(deg);
}

// Quotient and remainder over Q.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  const std::size_t db = b.size() - 1;
  q.assign(r.size() >= b.size() ? r.size() - db : 0, Rational(0));
  const Rational lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) r[shift + k] -= c * b[k];
    trim(r);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  Rational q;
  std::string t;
  for (char ch : text) {
    if (ch != ' ') t.push_back(ch);
  }
  if (t.empty()) throw InputError("empty rational literal");
  if (t.front() == '+') t.erase(t.begin());
  if (q.set_str(t, 10) != 0) throw InputError("malformed rational literal '" + text + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t result = m;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t m) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::vector<Integer>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed bottom-up.
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (m % d == 0) divisors.push_back(d);
  }
  for (std::uint64_t d : divisors) {
    if (cache.count(d)) continue;
    std::vector<Integer> num(d + 1, Integer(0));
    num[0] = -1;
    num[d] = 1;
    for (std::uint64_t e = 1; e < d; ++e) {
      if (d % e != 0) continue;
      const auto& den = cache.at(e);
      // exact division by a monic polynomial
      const std::size_t dd = den.size() - 1;
      std::vector<Integer> q(num.size() - dd, Integer(0));
      for (std::size_t k = num.size(); k-- > dd;) {
        const Integer c = num[k];
        if (c == 0) continue;
        q[k - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
      }
      num = std::move(q);
    }
    cache.emplace(d, std::move(num));
  }
  return cache.at(m);
}

Cyclotomic::Cyclotomic() : m_(1), c_{Rational(0)} {}
Cyclotomic::Cyclotomic(long value) : m_(1), c_{Rational(value)} {}
Cyclotomic::Cyclotomic(const Rational& value) : m_(1), c_{value} {}

Cyclotomic::Cyclotomic(std::uint64_t m, std::vector<Rational> coeffs) : m_(m) {
  if (m == 0) throw InputError("cyclotomic modulus must be positive");
  const std::size_t phi = euler_phi(m);
  if (coeffs.size() == phi) {
    c_ = std::move(coeffs);
  } else {
    reduce_from_powers(coeffs);
  }
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t m, std::int64_t k) {
  if (m == 0) throw InputError("cyclotomic modulus must be positive");
  const std::int64_t mm = static_cast<std::int64_t>(m);
  const std::int64_t e = ((k % mm) + mm) % mm;
  std::vector<Rational> powers(static_cast<std::size_t>(e) + 1, Rational(0));
  powers[static_cast<std::size_t>(e)] = 1;
  return from_powers(m, powers);
}

Cyclotomic Cyclotomic::from_powers(std::uint64_t m, const std::vector<Rational>& powers) {
  Cyclotomic r;
  r.m_ = m;
  r.reduce_from_powers(powers);
  return r;
}

void Cyclotomic::reduce_from_powers(const std::vector<Rational>& powers) {
  Poly folded(m_, Rational(0));
  for (std::size_t k = 0; k < powers.size(); ++k) {
    if (powers[k] != 0) folded[k % m_] += powers[k];
  }
  reduce_mod(folded, cyclotomic_polynomial(m_));
  c_ = std::move(folded);
}

Cyclotomic Cyclotomic::lifted(std::uint64_t target) const {
  if (target == m_) return *this;
  if (target % m_ != 0) throw InternalError("cannot lift Q(zeta_" + std::to_string(m_) + ") to modulus " +
                                            std::to_string(target));
  const std::uint64_t step = target / m_;
  Poly powers(target, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) powers[(k * step) % target] += c_[k];
  }
  return from_powers(target, powers);
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool Cyclotomic::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

std::optional<Integer> Cyclotomic::as_integer() const {
  auto q = as_rational();
  if (!q || q->get_den() != 1) return std::nullopt;
  return q->get_num();
}

bool Cyclotomic::is_real() const { return *this == conjugate(); }

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  const std::int64_t mm = static_cast<std::int64_t>(m_);
  const std::uint64_t kk = static_cast<std::uint64_t>(((k % mm) + mm) % mm);
  if (m_ > 1 && std::gcd(kk, m_) != 1) throw InputError("galois exponent not coprime to modulus");
  Poly powers(m_, Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] != 0) powers[(j * kk) % m_] += c_[j];
  }
  return from_powers(m_, powers);
}

Cyclotomic Cyclotomic::conjugate() const { return galois(-1); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero cyclotomic");
  if (m_ == 1 || is_rational()) {
    Cyclotomic r(*this);
    r.c_.assign(c_.size(), Rational(0));
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // Extended Euclid: u*a + v*f = g with g a nonzero constant because f is irreducible.
  const auto& fi = cyclotomic_polynomial(m_);
  Poly f(fi.begin(), fi.end());
  Poly a = c_;
  trim(a);
  Poly r0 = f, r1 = a, s0{}, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    if (r1.empty()) throw InternalError("cyclotomic polynomial is not irreducible");
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const Rational g = r1[0];
  for (auto& x : s1) x /= g;
  s1.resize(c_.size(), Rational(0));
  return Cyclotomic(m_, s1);
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m_);
    z += c_[k].get_d() * std::polar(1.0, angle);
  }
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.m_ != m_) {
    const std::uint64_t L = std::lcm(m_, o.m_);
    if (L != m_) *this = lifted(L);
    if (L != o.m_) return *this += o.lifted(L);
  }
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.m_ != m_) {
    const std::uint64_t L = std::lcm(m_, o.m_);
    if (L != m_) *this = lifted(L);
    if (L != o.m_) return *this *= o.lifted(L);
  }
  if (m_ == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (o.is_rational()) return *this *= o.c_[0];
  if (is_rational()) {
    const Rational s = c_[0];
    c_ = o.c_;
    return *this *= s;
  }
  Poly prod = poly_mul(c_, o.c_);
  reduce_mod(prod, cyclotomic_polynomial(m_));
  c_ = std::move(prod);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
  for (auto& x : c_) x *= q;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  const std::uint64_t L = std::lcm(a.m_, b.m_);
  return a.lifted(L).c_ == b.lifted(L).c_;
}

namespace {

// Solves A x = b over Q; empty optional when inconsistent.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      const Rational f = A[i][c] / A[r][c];
      for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i] / A[i][pivots[i]];
  return x;
}

}  // namespace

Cyclotomic Cyclotomic::reduced() const {
  if (auto q = as_rational()) return Cyclotomic(*q);
  const std::uint64_t m = m_;
  for (std::uint64_t d = 2; d < m; ++d) {
    if (m % d != 0) continue;
    const std::size_t pd = euler_phi(d), pm = euler_phi(m);
    std::vector<std::vector<Rational>> A(pm, std::vector<Rational>(pd));
    for (std::size_t i = 0; i < pd; ++i) {
      const auto col = Cyclotomic::root_of_unity(d, static_cast<std::int64_t>(i)).lifted(m).coeffs();
      for (std::size_t r = 0; r < pm; ++r) A[r][i] = col[r];
    }
    if (auto x = solve_rational(std::move(A), c_)) return Cyclotomic(d, std::move(*x));
  }
  return *this;
}

int Cyclotomic::compare(const Cyclotomic& x, const Cyclotomic& y) {
  if (x == y) return 0;
  const Cyclotomic a = x.reduced(), b = y.reduced();
  if (a.m_ != b.m_) return a.m_ < b.m_ ? -1 : 1;
  for (std::size_t k = 0; k < a.c_.size(); ++k) {
    const int c = cmp(a.c_[k], b.c_[k]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

int Cyclotomic::compare_in(const Cyclotomic& x, const Cyclotomic& y, std::uint64_t m) {
  if (x == y) return 0;
  const Cyclotomic a0 = x.reduced(), b0 = y.reduced();
  const std::uint64_t L = std::lcm(m, std::lcm(a0.m_, b0.m_));
  const Cyclotomic a = a0.lifted(L), b = b0.lifted(L);
  for (std::size_t k = 0; k < a.c_.size(); ++k) {
    const int c = cmp(a.c_[k], b.c_[k]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& q = c_[k];
    if (q == 0) continue;
    Rational mag = abs(q);
    if (!first) os << (q < 0 ? " - " : " + ");
    else if (q < 0) os << "-";
    first = false;
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z" << m_;
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ncinv
