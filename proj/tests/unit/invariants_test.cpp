#include <gtest/gtest.h>

#include "../support/fixtures.hpp"
#include "ncinv/errors.hpp"
#include "ncinv/invariants.hpp"

using namespace ncinv;
using namespace ncinv::testing;

namespace {

void expect_verified(const GeneratorSet& gs, const RepresentationMatrices& pi, std::size_t trials = 3) {
  const auto rep = verify_invariance(gs, pi, trials, 4);
  EXPECT_TRUE(rep.passed) << (rep.failures.empty() ? "" : rep.failures.front());
  EXPECT_TRUE(rep.count_ok);
  EXPECT_TRUE(rep.real_ok);
  EXPECT_EQ(gs.generators.size(), gs.expected_count());
  for (const auto& lv : gs.levels) EXPECT_TRUE(lv.count_ok);
}

}  // namespace

TEST(Invariants, Z3BothFields) {
  const GroupPtr G = load_group("Z3");
  const auto pi = load_rep("Z3_perm", G);
  const auto c = invariant_generators(pi, Field::Complex);
  const auto r = invariant_generators(pi, Field::Real);
  EXPECT_EQ(c.generators.size(), 7u);
  EXPECT_EQ(r.generators.size(), 7u);
  EXPECT_EQ(r.names.front(), "w1");
  EXPECT_EQ(c.names.front(), "g1");
  expect_verified(c, pi);
  expect_verified(r, pi);
}

TEST(Invariants, S3RealList) {
  const GroupPtr G = load_group("S3");
  const auto pi = load_rep("S3_perm", G);
  const auto gs = invariant_generators(pi, Field::Real);
  const std::vector<std::string> expect = {"w1",    "w2",    "w4",       "w6",       "w3 w3",    "w3 w5",   "w3 w7",
                                           "w5 w3", "w7 w3", "w3 w1 w3", "w3 w2 w3", "w3 w4 w3", "w3 w6 w3"};
  EXPECT_EQ(gs.words, expect);
  ASSERT_EQ(gs.levels.size(), 2u);
  EXPECT_EQ(gs.levels[0].generators_out, 7u);
  EXPECT_EQ(gs.levels[1].generators_out, 13u);
  for (const auto& lv : gs.levels) {
    EXPECT_TRUE(lv.monomial);
    EXPECT_TRUE(lv.character_matches);
  }
  expect_verified(gs, pi);
}

TEST(Invariants, S4StandardThreeLevels) {
  const GroupPtr G = load_group("S4");
  const auto pi = load_rep("S4_standard", G);
  const auto gs = invariant_generators(pi, Field::Complex);
  EXPECT_EQ(gs.generators.size(), 24u * 2 + 1);
  EXPECT_EQ(gs.levels.size(), 3u);
  expect_verified(gs, pi, 1);
}

TEST(Invariants, DihedralComplex) {
  for (const char* name : {"D6", "D12"}) {
    const GroupPtr G = load_group(name);
    const auto pi = load_rep(std::string(name) + "_pi_omega", G);
    const auto gs = invariant_generators(pi, Field::Complex);
    EXPECT_EQ(gs.generators.size(), G->order() + 1) << name;
    expect_verified(gs, pi);
  }
}

TEST(Invariants, NotCompleteRaisesWithReport) {
  const GroupPtr G = load_group("D8");
  const auto pi = load_rep("D8_pi_omega", G);
  try {
    (void)invariant_generators(pi, Field::Complex);
    FAIL() << "expected NotCompleteError";
  } catch (const NotCompleteError& e) {
    EXPECT_FALSE(e.report().verdict);
  }
}

TEST(Invariants, RealFieldNeedsRealRepresentation) {
  const GroupPtr G = load_group("D6");
  EXPECT_THROW(invariant_generators(load_rep("D6_pi_omega", G), Field::Real), InputError);
}

TEST(Invariants, RawVariableIsNotInvariant) {
  const GroupPtr G = load_group("S3");
  const auto pi = load_rep("S3_perm", G);
  GeneratorSet gs = invariant_generators(pi, Field::Real);
  gs.generators[0] = NCExpr::variable(0);
  const auto rep = verify_invariance(gs, pi, 3, 4);
  EXPECT_FALSE(rep.passed);
  EXPECT_FALSE(rep.failures.empty());
}

TEST(Invariants, MissingGeneratorBreaksCount) {
  const GroupPtr G = load_group("Z3");
  const auto pi = load_rep("Z3_perm", G);
  GeneratorSet gs = invariant_generators(pi, Field::Complex);
  gs.generators.pop_back();
  gs.words.pop_back();
  gs.names.pop_back();
  const auto rep = verify_invariance(gs, pi, 1, 3);
  EXPECT_FALSE(rep.count_ok);
  EXPECT_FALSE(rep.passed);
}

TEST(Invariants, IsotypicBasisIsAnEigenbasis) {
  const GroupPtr G = load_group("S4");
  const auto pi = load_rep("S4_standard", G);
  const Subgroup V = abelian_normal_subgroups(G).front();
  const auto basis = isotypic_basis(pi, V);
  ASSERT_EQ(basis.vectors.size(), 3u);
  const auto sub = EmbeddedSubgroup::make(V);
  for (const auto& lv : basis.vectors) {
    const auto& mu = (*basis.table)[lv.character];
    for (Elem n : V.elements()) {
      const auto image = apply(pi.image(n), lv.coords);
      const Cyclotomic value = mu.values[sub.group->classes().class_of[sub.local[n]]];
      for (std::size_t i = 0; i < image.size(); ++i) EXPECT_EQ(image[i], value * lv.coords[i]);
    }
  }
}

TEST(Invariants, Realify) {
  const NCExpr x = NCExpr::variable(0), y = NCExpr::variable(1), z = NCExpr::variable(2);
  std::vector<std::string> words = {"x", "y", "z"};
  const auto out = realify_generators({x, y, z}, {1, 0, 2}, {Cyclotomic(1L), Cyclotomic(1L), Cyclotomic(1L)}, &words);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0], NCExpr::sum({x, y}));
  EXPECT_EQ(words[2], "z");
  EXPECT_THROW(realify_generators({x, y}, {1, 1}, {Cyclotomic(1L), Cyclotomic(1L)}), InputError);
  EXPECT_THROW(realify_generators({x, y}, {0}, {Cyclotomic(1L)}), InputError);
}

TEST(Invariants, ExportJson) {
  const GroupPtr G = load_group("Z3");
  const auto gs = invariant_generators(load_rep("Z3_perm", G), Field::Real);
  const json j = export_generators(gs);
  EXPECT_EQ(j.at("field"), "real");
  EXPECT_EQ(j.at("generators").size(), 7u);
  for (const auto& g : j.at("generators")) {
    EXPECT_LT(g.at("root").get<std::size_t>(), j.at("nodes").size());
  }
}
