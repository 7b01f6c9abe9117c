#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.hpp"
#include "ncinv/errors.hpp"
#include "ncinv/freegroup.hpp"

using namespace ncinv;
using namespace ncinv::testing;

TEST(FreeWord, ReductionAndInverse) {
  const FreeWord w({{0, 1}, {1, 1}, {1, -1}, {2, -1}});
  EXPECT_EQ(w.length(), 2u);
  EXPECT_TRUE((w * w.inverse()).empty());
  EXPECT_EQ(w.str({"a", "b", "c"}), "a c^-1");
  EXPECT_EQ(FreeWord::parse("a c^-1 b b^-1", {"a", "b", "c"}), w);
  EXPECT_THROW(FreeWord::parse("a d", {"a", "b", "c"}), InputError);
}

TEST(FreeWord, ShortlexOrder) {
  const std::vector<std::string> n = {"a", "b"};
  EXPECT_LT(FreeWord::parse("b", n), FreeWord::parse("a a", n));
  EXPECT_LT(FreeWord::parse("a", n), FreeWord::parse("b", n));
  EXPECT_LT(FreeWord::parse("b", n), FreeWord::parse("a^-1", n));
  EXPECT_EQ(letter_rank({1, -1}, 2), 3u);
}

TEST(Schreier, CountAndFoldLawOnRandomInstances) {
  const auto f = check_schreier_fold(12345, 50);
  EXPECT_TRUE(f.empty()) << join_failures(f);
}

TEST(Schreier, PrefixClosedTransversal) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const auto inst = random_schreier_instance(rng);
    const auto res = kernel_generators(inst.n, inst.target);
    for (const auto& t : res.transversal) {
      if (t.empty()) continue;
      const FreeWord prefix(std::vector<Letter>(t.letters().begin(), t.letters().end() - 1));
      EXPECT_NE(std::find(res.transversal.begin(), res.transversal.end(), prefix), res.transversal.end());
    }
  }
}

TEST(Schreier, NonSurjectiveTargetRejected) {
  AbelianTarget t{{6}, {{2}, {4}}};
  EXPECT_THROW(kernel_generators(2, t), InputError);
  const auto on_image = kernel_generators_on_image(2, t);
  EXPECT_EQ(on_image.generators.size(), 3u * (2 - 1) + 1);
}

TEST(Schreier, Z3OnThreeLetters) {
  // a -> 0, b -> 1, c -> 2 in Z3
  AbelianTarget t{{3}, {{0}, {1}, {2}}};
  const auto res = kernel_generators(3, t);
  EXPECT_EQ(res.generators.size(), 7u);
  const std::vector<std::string> n = {"a", "b", "c"};
  std::vector<FreeWord> printed;
  for (const char* w : {"a", "b c", "b a c", "c b", "c a b", "b b b", "c c c"}) printed.push_back(FreeWord::parse(w, n));
  EXPECT_TRUE(same_subgroup(res.generators, printed, 3));
}

TEST(Fold, RankAndIndexOfKnownSubgroups) {
  const std::vector<std::string> n = {"a", "b"};
  // <a^2, b, a b a^-1> has index 2 and rank 3
  const auto g = fold({FreeWord::parse("a a", n), FreeWord::parse("b", n), FreeWord::parse("a b a^-1", n)}, 2);
  const auto ri = graph_rank_index(g);
  EXPECT_EQ(ri.rank, 3u);
  EXPECT_EQ(ri.index, 2u);
  // <a> has infinite index in F2
  const auto h = graph_rank_index(fold({FreeWord::parse("a", n)}, 2));
  EXPECT_EQ(h.rank, 1u);
  EXPECT_EQ(h.index, kInfiniteIndex);
  // redundant generators fold away
  const auto r = graph_rank_index(fold({FreeWord::parse("a b", n), FreeWord::parse("a b a b", n)}, 2));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_FALSE(same_subgroup({FreeWord::parse("a", n)}, {FreeWord::parse("a a", n)}, 2));
  EXPECT_TRUE(accepts(g, FreeWord::parse("a b b a", n)));
  EXPECT_FALSE(accepts(g, FreeWord::parse("a b", n)));
}
