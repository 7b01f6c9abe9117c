#include <gtest/gtest.h>

#include "ncinv/errors.hpp"
#include "ncinv/linalg.hpp"
#include "ncinv/ncexpr.hpp"

using namespace ncinv;

namespace {

Matrix rational_matrix(std::initializer_list<long> entries, std::size_t n) {
  Matrix m(n, n);
  std::size_t k = 0;
  for (long v : entries) {
    m(k / n, k % n) = Cyclotomic(v);
    ++k;
  }
  return m;
}

}  // namespace

TEST(NCExpr, SumsMergeLikeTerms) {
  const NCExpr x = NCExpr::variable(0), y = NCExpr::variable(1);
  const NCExpr s = NCExpr::sum({x, y, x});
  EXPECT_EQ(s, NCExpr::sum({NCExpr::scale(Cyclotomic(2L), x), y}));
  EXPECT_TRUE(NCExpr::sum({x, NCExpr::scale(Cyclotomic(-1L), x)}).is_zero());
  EXPECT_NE(NCExpr::product({x, y}), NCExpr::product({y, x}));
  EXPECT_EQ(NCExpr::product({x, y}).degree(), 2u);
}

TEST(NCExpr, ExpansionIsNoncommutative) {
  const NCExpr x = NCExpr::variable(0), y = NCExpr::variable(1);
  const NCExpr s = NCExpr::sum({x, y});
  const NCPolynomial p = expand(NCExpr::product({s, s}));
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p.at({0, 1}), Cyclotomic(1L));
  EXPECT_EQ(p.at({1, 0}), Cyclotomic(1L));
  EXPECT_THROW(expand(NCExpr::product({s, s, s, s}), 8), ResourceError);
}

TEST(NCExpr, ConjugationAndEvaluation) {
  const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  const NCExpr x = NCExpr::variable(0), y = NCExpr::variable(1);
  const NCExpr e = NCExpr::sum({NCExpr::scale(i, NCExpr::product({x, y})), NCExpr::inverse(x)});
  EXPECT_EQ(e.conjugate().conjugate(), e);
  EXPECT_TRUE(e.has_inverse());
  const Matrix X = rational_matrix({1, 2, 0, 1}, 2), Y = rational_matrix({0, 1, 1, 0}, 2);
  MatrixEvaluator ev({X, Y});
  const Matrix expect = i * (X * Y) + inverse(X);
  EXPECT_EQ(ev(e), expect);
  MatrixEvaluator singular({rational_matrix({1, 1, 1, 1}, 2), Y});
  EXPECT_THROW(singular(NCExpr::inverse(x)), ArithmeticError);
}

TEST(NCExpr, JsonExportSharesNodes) {
  const NCExpr x = NCExpr::variable(0), y = NCExpr::variable(1);
  const NCExpr xy = NCExpr::product({x, y});
  std::vector<std::size_t> roots;
  const json j = expressions_to_json({xy, NCExpr::sum({xy, x})}, roots);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(j.size(), 4u);  // x, y, xy, xy + x
}
