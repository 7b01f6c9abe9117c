#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "ncinv/cyclotomic.hpp"
#include "ncinv/errors.hpp"
#include "ncinv/modular.hpp"

using namespace ncinv;

namespace {

Cyclotomic random_cyclotomic(std::mt19937_64& rng, std::uint64_t m) {
  std::vector<Rational> powers(m);
  for (auto& p : powers) {
    Rational q(static_cast<long>(rng() % 11) - 5, static_cast<long>(1 + rng() % 4));
    q.canonicalize();
    p = q;
  }
  return Cyclotomic::from_powers(m, powers);
}

// value of sum_k c_k zeta_m^k computed directly in floating point
std::complex<double> brute_value(std::uint64_t m, const std::vector<Rational>& powers) {
  std::complex<double> s = 0;
  for (std::size_t k = 0; k < powers.size(); ++k) s += powers[k].get_d() * std::polar(1.0, 2 * M_PI * k / m);
  return s;
}

}  // namespace

TEST(Cyclotomic, RootsOfUnity) {
  for (std::uint64_t m : {1u, 2u, 3u, 4u, 6u, 8u, 9u, 12u, 15u}) {
    Cyclotomic sum;
    for (std::uint64_t k = 0; k < m; ++k) sum += Cyclotomic::root_of_unity(m, k);
    EXPECT_TRUE(m == 1 ? sum == Cyclotomic(1L) : sum.is_zero()) << m;
    Cyclotomic z = Cyclotomic::root_of_unity(m, 1), p(1L);
    for (std::uint64_t k = 0; k < m; ++k) p *= z;
    EXPECT_EQ(p, Cyclotomic(1L)) << m;
  }
  EXPECT_EQ(Cyclotomic::root_of_unity(4, 2), Cyclotomic(-1L));
  EXPECT_EQ(Cyclotomic::root_of_unity(6, 1) - Cyclotomic::root_of_unity(6, 2), Cyclotomic(1L));
}

TEST(Cyclotomic, ArithmeticMatchesFloatingPoint) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t m = std::vector<std::uint64_t>{3, 4, 5, 6, 8, 9, 12}[rng() % 7];
    std::vector<Rational> pa(m), pb(m);
    for (std::size_t k = 0; k < m; ++k) {
      pa[k] = Rational(static_cast<long>(rng() % 7) - 3);
      pb[k] = Rational(static_cast<long>(rng() % 7) - 3);
    }
    const Cyclotomic a = Cyclotomic::from_powers(m, pa), b = Cyclotomic::from_powers(m, pb);
    const auto va = brute_value(m, pa), vb = brute_value(m, pb);
    EXPECT_LT(std::abs(a.to_complex() - va), 1e-9);
    EXPECT_LT(std::abs((a + b).to_complex() - (va + vb)), 1e-9);
    EXPECT_LT(std::abs((a * b).to_complex() - va * vb), 1e-9);
    EXPECT_LT(std::abs(a.conjugate().to_complex() - std::conj(va)), 1e-9);
    if (!b.is_zero()) {
      EXPECT_LT(std::abs((a / b).to_complex() - va / vb), 1e-6);
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(Cyclotomic, FieldAxioms) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Cyclotomic a = random_cyclotomic(rng, 12), b = random_cyclotomic(rng, 8), c = random_cyclotomic(rng, 3);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, Cyclotomic());
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Cyclotomic(1L));
  }
}

TEST(Cyclotomic, InverseOfZeroRaises) {
  EXPECT_THROW(Cyclotomic().inverse(), ArithmeticError);
  EXPECT_THROW(Cyclotomic(1L) / Cyclotomic(), ArithmeticError);
  const Cyclotomic z = Cyclotomic::root_of_unity(3, 1);
  EXPECT_THROW((z + z * z + Cyclotomic(1L)).inverse(), ArithmeticError);
}

TEST(Cyclotomic, GaloisAndReality) {
  const Cyclotomic z = Cyclotomic::root_of_unity(12, 1);
  EXPECT_EQ(z.galois(5), Cyclotomic::root_of_unity(12, 5));
  EXPECT_EQ(z.galois(-1), z.conjugate());
  const Cyclotomic r = z + z.conjugate();  // sqrt(3)
  EXPECT_TRUE(r.is_real());
  EXPECT_FALSE(r.is_rational());
  EXPECT_EQ(r * r, Cyclotomic(3L));
  EXPECT_FALSE(z.is_real());
  EXPECT_EQ(Cyclotomic(Rational(3, 4)).as_rational(), Rational(3, 4));
  EXPECT_FALSE(Cyclotomic(Rational(3, 4)).as_integer().has_value());
}

TEST(Cyclotomic, CanonicalRepresentation) {
  // equal numbers compare equal whatever modulus they were built in
  const Cyclotomic a = Cyclotomic::root_of_unity(3, 1);
  const Cyclotomic b = Cyclotomic::root_of_unity(6, 2);
  const Cyclotomic c = Cyclotomic::root_of_unity(12, 4);
  EXPECT_EQ(a, b);
  EXPECT_EQ(b, c);
  EXPECT_EQ(Cyclotomic::compare(a, c), 0);
  EXPECT_EQ(a.lifted(12), c.lifted(12));
  EXPECT_EQ((Cyclotomic::root_of_unity(4, 1) * Cyclotomic::root_of_unity(4, 1)).reduced().modulus(), 1u);
  EXPECT_EQ(Cyclotomic(12, {Rational(-1), Rational(0), Rational(1), Rational(0)}).reduced(), Cyclotomic::root_of_unity(3, 1));
  EXPECT_EQ(Cyclotomic(12, {Rational(-1), Rational(0), Rational(1), Rational(0)}).reduced().modulus(), 3u);
  EXPECT_NE(Cyclotomic::compare(Cyclotomic(1L), Cyclotomic(2L)), 0);
  EXPECT_EQ(Cyclotomic::compare(Cyclotomic(1L), Cyclotomic(2L)), -Cyclotomic::compare(Cyclotomic(2L), Cyclotomic(1L)));
}

TEST(Modular, FieldSelectionAndImages) {
  const auto F = ModularField::wide(12);
  EXPECT_TRUE(is_prime_u64(F.q));
  EXPECT_EQ(F.q % 12, 1u);
  EXPECT_GT(F.q, std::uint64_t{1} << 61);
  const Cyclotomic z = Cyclotomic::root_of_unity(12, 1);
  EXPECT_EQ(F.mul(F.image(z), F.image(z.inverse())), 1u);
  EXPECT_EQ(F.image(z + z.conjugate()), F.add(F.image(z), F.image(z.conjugate())));
  EXPECT_EQ(F.lift_signed(F.from_int(-17)), -17);
  EXPECT_EQ(F.image(Rational(1, 3)), F.inv(3));
}
