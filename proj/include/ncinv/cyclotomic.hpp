#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncinv {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

std::uint64_t euler_phi(std::uint64_t m);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t m);

/// An exact element of Q(zeta_m), stored in the power basis
/// 1, zeta, ..., zeta^{phi(m)-1} modulo the m-th cyclotomic polynomial.
///
/// Binary operations between different moduli lift both operands to the lcm.
/// The modulus is not minimised automatically: 1 in Q(zeta_4) and 1 in Q
/// compare equal, but keep their own modulus until combined.
class Cyclotomic {
 public:
  Cyclotomic();  // zero in Q
  Cyclotomic(long value);
  Cyclotomic(const Rational& value);
  Cyclotomic(std::uint64_t m, std::vector<Rational> coeffs);

  /// zeta_m^k.
  static Cyclotomic root_of_unity(std::uint64_t m, std::int64_t k);
  /// sum_k c_k zeta_m^k for an arbitrary-length coefficient vector (reduced).
  static Cyclotomic from_powers(std::uint64_t m, const std::vector<Rational>& powers);

  std::uint64_t modulus() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// The same number expressed in Q(zeta_target); `target` must be a multiple of modulus().
  Cyclotomic lifted(std::uint64_t target) const;

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;
  std::optional<Integer> as_integer() const;
  bool is_real() const;

  Cyclotomic conjugate() const;
  Cyclotomic inverse() const;  // throws ArithmeticError on zero
  /// Image under the Galois automorphism zeta_m -> zeta_m^k (gcd(k, m) = 1).
  Cyclotomic galois(std::int64_t k) const;

  std::complex<double> to_complex() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& q);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Same number in Q(zeta_c), c the conductor.
  Cyclotomic reduced() const;

  /// Total order independent of the stored modulus: conductor first, then
  /// coefficient vectors over the conductor's power basis. Used only for canonical orderings.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);
  /// Lexicographic order of power-basis coefficients after reducing both
  /// operands and lifting them to lcm(m, conductors).
  static int compare_in(const Cyclotomic& a, const Cyclotomic& b, std::uint64_t m = 1);

  /// Human-readable form, e.g. "-1/2 + 3*z12^2" (z<m> = zeta_m).
  std::string str() const;

 private:
  void reduce_from_powers(const std::vector<Rational>& powers);

  std::uint64_t m_ = 1;
  std::vector<Rational> c_;
};

}  // namespace ncinv
