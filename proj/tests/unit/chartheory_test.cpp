#include <gtest/gtest.h>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "ncinv/chartheory.hpp"
#include "ncinv/errors.hpp"

using namespace ncinv;
using namespace ncinv::testing;

namespace {

class TableProperties : public ::testing::TestWithParam<std::string> {};

// per-pair checks on the first few abelian normal subgroups keep the unit run short;
// the acceptance runner covers every pair
constexpr std::size_t kPairsPerGroup = 6;

}  // namespace

TEST_P(TableProperties, Orthogonality) {
  const GroupPtr G = load_group(GetParam());
  const auto t = CharacterTable::compute(G);
  const auto f = check_orthogonality(t);
  EXPECT_TRUE(f.empty()) << join_failures(f);
}

TEST_P(TableProperties, CanonicalOrder) {
  const GroupPtr G = load_group(GetParam());
  const auto t = CharacterTable::compute(G);
  EXPECT_EQ(t[0], trivial_character(G));
  for (std::size_t i = 1; i < t.size(); ++i) {
    EXPECT_FALSE(canonical_character_less(t[i], t[i - 1]));
    EXPECT_LE(Cyclotomic::compare(t[i - 1].degree(), t[i].degree()), 0);
  }
}

TEST_P(TableProperties, FrobeniusAndClifford) {
  const GroupPtr G = load_group(GetParam());
  const auto t = CharacterTable::compute(G);
  std::size_t k = 0;
  for (const auto& N : abelian_normal_subgroups(G)) {
    if (k++ == kPairsPerGroup) break;
    const auto f = check_frobenius(t, N);
    EXPECT_TRUE(f.empty()) << "|N|=" << N.order() << ": " << join_failures(f);
    const auto c = check_clifford(t, N);
    EXPECT_TRUE(c.empty()) << "|N|=" << N.order() << ": " << join_failures(c);
  }
}

TEST_P(TableProperties, QuotientTablesAreDeflations) {
  const GroupPtr G = load_group(GetParam());
  const auto t = CharacterTable::compute(G);
  for (const auto& N : normal_subgroups(G)) {
    if (N.is_trivial() || N.is_whole() || G->order() / N.order() > 24) continue;
    const auto Q = quotient(G, N);
    const auto direct = CharacterTable::compute(Q.group);
    const auto deflated = quotient_table(t, Q);
    ASSERT_EQ(direct.size(), deflated.size());
    for (std::size_t i = 0; i < direct.size(); ++i) EXPECT_EQ(direct[i], deflated[i]);
    for (const auto& chi : deflated.irreducibles()) EXPECT_EQ(deflate(inflate(chi, Q), Q), chi);
  }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, TableProperties, ::testing::ValuesIn(property_fixtures()),
                         [](const auto& info) { return info.param; });

TEST(CharTheory, RegularCharacterDecomposition) {
  const GroupPtr G = load_group("SL2F3");
  const auto t = CharacterTable::compute(G);
  const auto m = decompose(regular_character(G), t);
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(Cyclotomic(m[i]), t[i].degree());
}

TEST(CharTheory, InertiaSubgroupsBruteForce) {
  const GroupPtr G = load_group("D16");
  for (const auto& N : abelian_normal_subgroups(G)) {
    const auto sub = EmbeddedSubgroup::make(N);
    const auto tN = CharacterTable::compute(sub.group);
    for (const auto& mu : tN.irreducibles()) {
      const Subgroup I = inertia_subgroup(mu, sub);
      const auto v = element_values(mu);
      for (Elem g = 0; g < G->order(); ++g) {
        bool fixes = true;
        for (Elem n : N.elements()) {
          const Elem local = sub.local[n], moved = sub.local[G->conj(n, g)];
          fixes = fixes && std::abs(v[local] - v[moved]) < kTol;
        }
        EXPECT_EQ(I.contains(g), fixes);
      }
    }
  }
}

TEST(CharTheory, IrrOverMatchesRestriction) {
  const GroupPtr G = load_group("S4");
  const auto t = CharacterTable::compute(G);
  const auto V = abelian_normal_subgroups(G).front();
  const auto sub = EmbeddedSubgroup::make(V);
  const auto tV = CharacterTable::compute(sub.group);
  for (const auto& mu : tV.irreducibles()) {
    const auto over = irr_over(mu, sub, t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const bool under = !inner_product(restrict(t[i], sub), mu).is_zero();
      EXPECT_EQ(std::find(over.begin(), over.end(), i) != over.end(), under);
    }
  }
}

TEST(CharTheory, DeflateRejectsCharactersNontrivialOnN) {
  const GroupPtr G = load_group("S4");
  const auto t = CharacterTable::compute(G);
  const auto V = abelian_normal_subgroups(G).front();
  const auto Q = quotient(G, V);
  std::size_t trivial = 0;
  for (const auto& chi : t.irreducibles()) {
    if (is_trivial_on(chi, V)) {
      ++trivial;
      EXPECT_NO_THROW(deflate(chi, Q));
    } else {
      EXPECT_THROW(deflate(chi, Q), InputError);
    }
  }
  EXPECT_EQ(trivial, 3u);
}

TEST(CharTheory, DecomposeRejectsNonCharacters) {
  const GroupPtr G = load_group("S3");
  const auto t = CharacterTable::compute(G);
  EXPECT_THROW(decompose(t[0] - t[1], t), InputError);
  ClassFunction half = t[2];
  for (auto& v : half.values) v *= Rational(1, 2);
  EXPECT_THROW(decompose(half, t), InputError);
  EXPECT_TRUE(is_multiplicity_free(decompose(t[1] + t[2], t)));
  EXPECT_FALSE(is_multiplicity_free(decompose(t[1] + t[1], t)));
}

TEST(CharTheory, RepresentationCharacters) {
  const GroupPtr G = load_group("S4");
  const auto pi = load_rep("S4_standard", G);
  const auto t = CharacterTable::compute(G);
  const auto m = decompose(pi.character(), t);
  EXPECT_EQ(std::accumulate(m.begin(), m.end(), 0L), 1L);
  EXPECT_TRUE(pi.kernel().is_trivial());
  for (Elem a = 0; a < G->order(); ++a) {
    for (Elem b = 0; b < G->order(); ++b) EXPECT_EQ(pi.image(G->mul(a, b)), pi.image(a) * pi.image(b));
  }
}
