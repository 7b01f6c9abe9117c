#include "ncinv/modular.hpp"

#include "ncinv/errors.hpp"

namespace ncinv {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  a %= q;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, q);
    a = mulmod(a, a, q);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t q) {
  if (a % q == 0) throw ArithmeticError("inverse of zero modulo a prime");
  return powmod(a, q - 2, q);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

ModularField ModularField::select(std::uint64_t E, std::uint64_t lower_bound) {
  if (E == 0) throw InternalError("modular field for exponent 0");
  ModularField F;
  F.E = E;
  std::uint64_t k = lower_bound / E + 1;
  while (!is_prime_u64(k * E + 1)) ++k;
  F.q = k * E + 1;
  const auto factors = prime_factors(E);
  for (std::uint64_t a = 2;; ++a) {
    const std::uint64_t w = powmod(a, (F.q - 1) / E, F.q);
    bool primitive = true;
    for (auto r : factors) {
      if (powmod(w, E / r, F.q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      F.w = w;
      break;
    }
  }
  return F;
}

std::uint64_t ModularField::from_int(std::int64_t v) const {
  const std::int64_t r = v % static_cast<std::int64_t>(q);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(q) : r);
}

std::uint64_t ModularField::image(const Rational& r) const {
  const std::uint64_t num_abs = mpz_fdiv_ui(r.get_num().get_mpz_t(), q);
  const std::uint64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), q);
  return mul(num_abs, inv(den));
}

std::uint64_t ModularField::image(const Cyclotomic& c) const {
  const std::uint64_t m = c.modulus();
  if (E % m != 0) throw InternalError("cyclotomic modulus does not divide the field exponent");
  const std::uint64_t wm = powmod(w, E / m, q);
  std::uint64_t acc = 0;
  std::uint64_t pw = 1;
  for (const auto& coef : c.coeffs()) {
    if (coef != 0) acc = add(acc, mul(image(coef), pw));
    pw = mul(pw, wm);
  }
  return acc;
}

std::int64_t ModularField::lift_signed(std::uint64_t a) const {
  return a > q / 2 ? -static_cast<std::int64_t>(q - a) : static_cast<std::int64_t>(a);
}

}  // namespace ncinv
