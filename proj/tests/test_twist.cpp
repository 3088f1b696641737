#include <random>

#include <gtest/gtest.h>

#include "confalg/free_lie.hpp"
#include "confalg/gc_algebra.hpp"
#include "confalg/twist.hpp"
#include "support/oracles.hpp"

using namespace confalg;

namespace {

GradedSpace odd_generator() { return GradedSpace({{"x", {1, 0, 1}}}); }

}  // namespace

TEST(TensorLie, AffineSpaceGivesAbelianAlgebra) {
  for (int n = 1; n <= 3; ++n) {
    const GLieAlgebra g = tensor_lie(builtin(BuiltinId::AffineSpace, n), free_lie(odd_generator(), 4).algebra);
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g.space()[0].degree, (Bidegree{2 * n + 1, 2 * n, 1}));
    EXPECT_EQ(g.space()[1].degree, (Bidegree{2 * n + 2, 2 * n, 2}));
    EXPECT_TRUE(g.is_abelian());
  }
}

TEST(TensorLie, AbelianFactorGivesAbelianAlgebra) {
  const GLieAlgebra l(GradedSpace({{"u", {0, 0, 1}}, {"v", {1, 0, 1}}}), {}, std::nullopt);
  for (int g = 0; g <= 2; ++g) EXPECT_TRUE(tensor_lie(builtin(BuiltinId::SmoothProperCurve, g), l).is_abelian());
  EXPECT_TRUE(tensor_lie(oracle::exterior_algebra(3), l).is_abelian());
}

TEST(TensorLie, ProjectiveLineSign) {
  const FreeLie f = free_lie(odd_generator(), 2);
  const GCAlgebra p1 = builtin(BuiltinId::ProjectiveSpace, 1);
  const GLieAlgebra g = tensor_lie(p1, f.algebra);
  // basis: 1⊗x, 1⊗[x,x], h⊗x, h⊗[x,x]
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g.space()[2].label, "h1⊗x");
  const LinComb ff = f.algebra.bracket(0, 0);
  ASSERT_EQ(ff.size(), 1u);
  const Rational c = ff[0].second;
  EXPECT_EQ(g.bracket(0, 0), (LinComb{{1, c}}));
  EXPECT_EQ(g.bracket(0, 2), (LinComb{{3, c}}));  // h even: sign +1
  EXPECT_EQ(g.bracket(2, 0), (LinComb{{3, c}}));
  EXPECT_TRUE(g.bracket(2, 2).empty());
}

TEST(TensorLie, OddAlgebraClassesPickUpSign) {
  const FreeLie f = free_lie(odd_generator(), 2);
  const GCAlgebra c = builtin(BuiltinId::SmoothProperCurve, 1);
  const GLieAlgebra g = tensor_lie(c, f.algebra);
  const std::size_t a1 = *c.space().index_of("a1");
  const std::size_t b1 = *c.space().index_of("b1");
  const std::size_t p = *c.space().index_of("p");
  const std::size_t nl = f.algebra.size();
  const Rational sq = f.algebra.bracket(0, 0)[0].second;
  // [a1⊗x, b1⊗x] = (-1)^{|x||b1|} (a1 b1) ⊗ [x,x] = -p⊗[x,x]
  EXPECT_EQ(g.bracket(a1 * nl, b1 * nl), (LinComb{{p * nl + 1, -sq}}));
}

TEST(TensorLie, SatisfiesLieAxioms) {
  const std::vector<GCAlgebra> algebras = {builtin(BuiltinId::ProjectiveSpace, 2), builtin(BuiltinId::SmoothProperCurve, 2),
                                           oracle::exterior_algebra(3)};
  const std::vector<GradedSpace> gens = {odd_generator(), GradedSpace({{"u", {0, 0, 1}}, {"v", {1, 0, 1}}}),
                                         GradedSpace({{"u", {2, 2, 1}}})};
  for (const auto& a : algebras) {
    for (const auto& v : gens) {
      const GLieAlgebra g = tensor_lie(a, free_lie(v, 3).algebra);
      const auto diags = check_lie_axioms(g);
      EXPECT_TRUE(diags.empty()) << a.meta().name << ": " << (diags.empty() ? "" : diags[0].str());
    }
  }
}

TEST(TensorLie, WeightsDistribute) {
  const GCAlgebra a = builtin(BuiltinId::SmoothProperCurve, 1);
  const FreeLie f = free_lie(GradedSpace({{"u", {0, 0, 1}}, {"v", {1, 0, 1}}}), 3);
  const GLieAlgebra g = tensor_lie(a, f.algebra);
  ASSERT_EQ(g.size(), a.size() * f.algebra.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < f.algebra.size(); ++j) {
      EXPECT_EQ(g.space()[i * f.algebra.size() + j].degree, a.space()[i].degree + f.algebra.space()[j].degree);
    }
  }
  EXPECT_EQ(g.max_weight(), 3);
}
