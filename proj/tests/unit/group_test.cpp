#include <gtest/gtest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "ncinv/errors.hpp"
#include "ncinv/group.hpp"

using namespace ncinv;
using namespace ncinv::testing;

namespace {

std::vector<Elem> cyclic_table(std::size_t n) {
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return mul;
}

}  // namespace

TEST(Group, FixtureOrdersAndClassCounts) {
  const std::vector<std::tuple<std::string, std::size_t, std::size_t>> cases = {
      {"Z3", 3, 3}, {"S3", 6, 3}, {"Q8", 8, 5}, {"S4", 24, 5}, {"SL2F3", 24, 7}, {"D8", 8, 5}, {"D24", 24, 9}};
  for (const auto& [name, order, classes] : cases) {
    const GroupPtr G = load_group(name);
    EXPECT_EQ(G->order(), order) << name;
    EXPECT_EQ(G->classes().count(), classes) << name;
  }
}

TEST(Group, GroupAxiomsBruteForce) {
  for (const char* name : {"S4", "SL2F3", "Q8"}) {
    const GroupPtr G = load_group(name);
    const std::size_t n = G->order();
    for (Elem a = 0; a < n; ++a) {
      EXPECT_EQ(G->mul(a, 0), a);
      EXPECT_EQ(G->mul(0, a), a);
      EXPECT_EQ(G->mul(a, G->inv(a)), 0u);
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) ASSERT_EQ(G->mul(G->mul(a, b), c), G->mul(a, G->mul(b, c)));
      }
    }
  }
}

TEST(Group, ClassesAreConjugacyOrbitsInCanonicalOrder) {
  for (const char* name : {"S4", "SL2F3", "D16", "Q8"}) {
    const GroupPtr G = load_group(name);
    const auto& cls = G->classes();
    for (Elem g = 0; g < G->order(); ++g) {
      for (Elem x = 0; x < G->order(); ++x) EXPECT_EQ(cls.class_of[g], cls.class_of[G->conj(g, x)]);
    }
    std::size_t total = 0;
    for (std::size_t c = 0; c < cls.count(); ++c) {
      total += cls.sizes[c];
      EXPECT_EQ(cls.representatives[c], cls.members[c].front());
      if (c > 0) {
        const auto key = [&](std::size_t k) {
          return std::make_tuple(G->element_order(cls.representatives[k]), cls.sizes[k], cls.representatives[k]);
        };
        EXPECT_LT(key(c - 1), key(c));
      }
    }
    EXPECT_EQ(total, G->order());
    EXPECT_EQ(cls.representatives.front(), 0u);
  }
}

TEST(Group, PermutationElementsMatchTheirWords) {
  const GroupPtr G = load_group("S4");
  std::set<std::vector<std::uint32_t>> perms;
  for (Elem e = 0; e < G->order(); ++e) perms.insert(element_permutation(G, e));
  EXPECT_EQ(perms.size(), 24u);
  for (Elem a = 0; a < G->order(); ++a) {
    for (Elem b = 0; b < G->order(); ++b) {
      const auto pa = element_permutation(G, a), pb = element_permutation(G, b);
      std::vector<std::uint32_t> pq(4);
      for (std::size_t i = 0; i < 4; ++i) pq[i] = pa[pb[i]];
      EXPECT_EQ(element_permutation(G, G->mul(a, b)), pq);
    }
  }
}

TEST(Group, NormalSubgroupsOfS4) {
  const GroupPtr G = load_group("S4");
  const auto normals = normal_subgroups(G);
  std::vector<std::size_t> orders;
  for (const auto& N : normals) orders.push_back(N.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 4, 12, 24}));
  const auto ab = abelian_normal_subgroups(G);
  ASSERT_EQ(ab.size(), 1u);
  EXPECT_EQ(ab.front().order(), 4u);
  EXPECT_EQ(derived_subgroup(G).order(), 12u);
  EXPECT_EQ(center(G).order(), 1u);
  EXPECT_FALSE(is_nilpotent(G));
}

TEST(Group, NormalSubgroupsBruteForce) {
  for (const char* name : {"D8", "Q8", "S3", "D12"}) {
    const GroupPtr G = load_group(name);
    // every subgroup generated by at most two elements, filtered for normality by conjugation
    std::set<std::vector<Elem>> brute;
    for (Elem a = 0; a < G->order(); ++a) {
      for (Elem b = 0; b < G->order(); ++b) {
        const Subgroup H = subgroup_generated(G, {a, b});
        bool normal = true;
        for (Elem h : H.elements()) {
          for (Elem x = 0; x < G->order() && normal; ++x) normal = H.contains(G->conj(h, x));
        }
        if (normal) brute.insert(H.elements());
      }
    }
    std::set<std::vector<Elem>> lib;
    for (const auto& N : normal_subgroups(G)) lib.insert(N.elements());
    EXPECT_EQ(lib, brute) << name;
  }
}

TEST(Group, QuotientIsAHomomorphism) {
  const GroupPtr G = load_group("S4");
  const Subgroup V = abelian_normal_subgroups(G).front();
  const auto Q = quotient(G, V);
  EXPECT_EQ(Q.group->order(), 6u);
  for (Elem a = 0; a < G->order(); ++a) {
    for (Elem b = 0; b < G->order(); ++b) {
      EXPECT_EQ(Q.projection[G->mul(a, b)], Q.group->mul(Q.projection[a], Q.projection[b]));
    }
  }
  for (Elem c = 0; c < Q.group->order(); ++c) EXPECT_EQ(Q.projection[Q.lift[c]], c);
  EXPECT_FALSE(Q.group->is_abelian());
}

TEST(Group, CommutatorSubgroups) {
  const GroupPtr G = load_group("D16");
  const Subgroup Gp = derived_subgroup(G);
  EXPECT_EQ(Gp.order(), 4u);
  EXPECT_EQ(commutator(whole_group(G), whole_group(G)), Gp);
  EXPECT_TRUE(is_nilpotent(G));
  EXPECT_EQ(center(G).order(), 2u);
}

TEST(Group, DirectProduct) {
  const GroupPtr P = direct_product(load_group("S3"), load_group("Z3"));
  EXPECT_EQ(P->order(), 18u);
  EXPECT_EQ(P->classes().count(), 9u);
}

TEST(Group, TableValidation) {
  EXPECT_NO_THROW(group_from_table(5, cyclic_table(5)));
  auto bad = cyclic_table(4);
  bad[5] = 0;
  EXPECT_THROW(group_from_table(4, bad), InputError);
  EXPECT_THROW(group_from_table(3, {0, 1}), InputError);
  EXPECT_THROW(group_from_table(0, {}), InputError);
  // a quasigroup with identity that is not associative
  const std::vector<Elem> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(group_from_table(5, loop), InputError);
}

TEST(Group, GeneratorValidationAndBudget) {
  EXPECT_THROW(group_from_permutations(3, {{0, 0, 1}}), InputError);
  EXPECT_THROW(group_from_permutations(3, {}), InputError);
  EXPECT_THROW(group_from_permutations(6, {{1, 2, 3, 4, 5, 0}, {1, 0, 2, 3, 4, 5}}, 100), ResourceError);
  EXPECT_THROW(group_from_matrices(4, 1, {{1}}), InputError);
  EXPECT_THROW(group_from_matrices(3, 2, {{1, 1, 1, 1}}), InputError);
  const GroupPtr G = group_from_matrices(3, 2, {{0, 1, 2, 0}, {1, 1, 0, 1}});
  EXPECT_EQ(G->order(), 24u);  // SL2(F3)
}

TEST(Group, SubgroupValidation) {
  const GroupPtr G = load_group("S3");
  EXPECT_THROW(Subgroup(G, {1, 2}), InputError);
  EXPECT_THROW(Subgroup(G, {0, 17}), InputError);
  EXPECT_THROW(quotient(G, subgroup_generated(G, {G->generators()[1]})), InputError);
}
