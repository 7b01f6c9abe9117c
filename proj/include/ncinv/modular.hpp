#pragma once

#include <cstdint>
#include <vector>

#include "ncinv/cyclotomic.hpp"

namespace ncinv {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q);
std::uint64_t invmod(std::uint64_t a, std::uint64_t q);
bool is_prime_u64(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// A prime field F_q with a fixed element w of multiplicative order E, i.e. a
/// ring map Z[zeta_E] -> F_q sending zeta_E to w. Moduli dividing E map
/// compatibly: zeta_m -> w^{E/m}.
struct ModularField {
  std::uint64_t q = 0;
  std::uint64_t E = 1;
  std::uint64_t w = 1;

  /// Smallest prime q = 1 (mod E) with q > lower_bound, and a deterministic w.
  static ModularField select(std::uint64_t E, std::uint64_t lower_bound);
  /// Large field (q > 2^61) in which every integer bounded by 2^60 is represented faithfully.
  static ModularField wide(std::uint64_t E) { return select(E, std::uint64_t{1} << 61); }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % q; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + q - b) % q; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mulmod(a, b, q); }
  std::uint64_t inv(std::uint64_t a) const { return invmod(a, q); }
  std::uint64_t from_int(std::int64_t v) const;
  std::uint64_t image(const Rational& r) const;
  /// Image of a cyclotomic number; its modulus must divide E.
  std::uint64_t image(const Cyclotomic& c) const;
  /// The symmetric representative in (-q/2, q/2].
  std::int64_t lift_signed(std::uint64_t a) const;
};

}  // namespace ncinv
