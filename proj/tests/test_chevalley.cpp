#include <random>

#include <gtest/gtest.h>

#include "confalg/chevalley.hpp"
#include "confalg/errors.hpp"
#include "confalg/free_lie.hpp"
#include "confalg/gc_algebra.hpp"
#include "confalg/graded_space.hpp"
#include "confalg/linalg.hpp"
#include "confalg/twist.hpp"
#include "support/oracles.hpp"

using namespace confalg;

namespace {

GradedSpace odd_x() { return GradedSpace({{"x", {1, 0, 1}}}); }

GCAlgebra point() {
  SpaceMeta meta{"point", 0, true, true, true, true};
  return GCAlgebra(GradedSpace({{"1", {0, 0, 0}}}), {{{0, 0}, {{0, Rational(1)}}}}, meta, 0);
}

std::vector<GLieAlgebra> sample_algebras() {
  std::vector<GLieAlgebra> out;
  const std::vector<GradedSpace> gens = {odd_x(), GradedSpace({{"u", {0, 0, 1}}}),
                                         GradedSpace({{"u", {0, 0, 1}}, {"v", {1, 2, 1}}})};
  for (const auto& v : gens) {
    out.push_back(free_lie(v, 4).algebra);
    out.push_back(tensor_lie(builtin(BuiltinId::ProjectiveSpace, 2), free_lie(v, 4).algebra));
    out.push_back(tensor_lie(builtin(BuiltinId::SmoothProperCurve, 1), free_lie(v, 4).algebra));
    out.push_back(tensor_lie(oracle::exterior_algebra(2), free_lie(v, 4).algebra));
  }
  return out;
}

}  // namespace

TEST(ChevalleyComplex, WeightOne) {
  const GLieAlgebra g = tensor_lie(builtin(BuiltinId::ProjectiveSpace, 1), free_lie(odd_x(), 3).algebra);
  const ChainComplex c = ce_complex(g, 1);
  EXPECT_EQ(c.term_dimension(1), 2u);
  EXPECT_TRUE(c.differential(1).is_zero());
  const BettiTable h = homology(c);
  // g_1[1]: 1⊗x and h⊗x sit in degrees 0 and 2.
  EXPECT_EQ(h.entries(), (BettiTable::Entries{{{0, 0}, 1}, {{2, 2}, 1}}));
}

TEST(ChevalleyComplex, AbelianHomologyEqualsTerms) {
  const GLieAlgebra g(GradedSpace({{"u", {0, 0, 1}}, {"v", {1, 2, 1}}, {"w", {3, 2, 2}}}), {}, std::nullopt);
  const GradedSpace shifted = shift(g.space(), 1);
  for (int w = 1; w <= 5; ++w) {
    const ChainComplex c = ce_complex(g, w);
    BettiTable expected(w);
    for (std::size_t n = 1; n <= static_cast<std::size_t>(w); ++n) {
      for (const auto& m : sym_monomials(shifted, n, w)) {
        const Bidegree d = monomial_degree(shifted, m);
        expected.add(d.coh_deg, d.tate_weight, 1);
      }
      EXPECT_TRUE(c.differential(n).is_zero());
    }
    EXPECT_EQ(homology(c), expected);
  }
}

TEST(ChevalleyComplex, OddFreeLieWeightTwo) {
  const GLieAlgebra g = free_lie(odd_x(), 2).algebra;
  const ChainComplex c = ce_complex(g, 2);
  EXPECT_EQ(c.term_dimension(2), 1u);
  EXPECT_EQ(c.term_dimension(1), 1u);
  const SparseMatrix d = c.differential(2);
  ASSERT_EQ(d.rows(), 1u);
  ASSERT_EQ(d.cols(), 1u);
  EXPECT_EQ(d.at(0, 0) * d.at(0, 0), Rational(1));
  EXPECT_EQ(ce_homology(g, 2).total(), 0u);

  EXPECT_EQ(ce_homology(tensor_lie(point(), free_lie(odd_x(), 2).algebra), 2).total(), 0u);
}

TEST(ChevalleyComplex, DSquaredVanishesUnderChangeOfBasis) {
  std::mt19937 rng(99);
  for (const GLieAlgebra& g0 : sample_algebras()) {
    for (int trial = 0; trial < 3; ++trial) {
      const GLieAlgebra g = oracle::random_change_of_basis(rng, g0, 12);
      for (int w = 2; w <= 4; ++w) {
        const ChainComplex c = ce_complex(g, w);
        for (std::size_t n = 2; n <= static_cast<std::size_t>(w); ++n) {
          EXPECT_TRUE((c.differential(n - 1) * c.differential(n)).is_zero());
        }
        EXPECT_EQ(homology(c), ce_homology(g0, w));
      }
    }
  }
}

TEST(ChevalleyComplex, BlocksPreserveGradingAndEulerCharacteristic) {
  for (const GLieAlgebra& g : sample_algebras()) {
    for (int w = 1; w <= 4; ++w) {
      const ChainComplex c = ce_complex(g, w);
      const GradedSpace& shifted = c.shifted_space();
      for (const ComplexBlock& b : c.blocks()) {
        long long euler_terms = 0;
        long long euler_homology = 0;
        for (std::size_t n = 1; n <= b.terms.size(); ++n) {
          for (const Monomial& m : b.terms[n - 1]) {
            const Bidegree d = monomial_degree(shifted, m);
            EXPECT_EQ(d.coh_deg, b.degree_of_term(n));
            EXPECT_EQ(d.tate_weight, b.key.tate_weight);
            EXPECT_EQ(d.lie_weight, w);
          }
          const long long sign = n % 2 ? -1 : 1;
          euler_terms += sign * static_cast<long long>(b.terms[n - 1].size());
          const SparseMatrix& d_out = b.differentials[n - 1];
          const SparseMatrix d_in = n < b.terms.size() ? b.differentials[n] : SparseMatrix(b.terms[n - 1].size(), 0);
          euler_homology += sign * static_cast<long long>(homology_dim(d_in, d_out));
        }
        EXPECT_EQ(euler_terms, euler_homology);
      }
    }
  }
}

TEST(ChevalleyComplex, BasisOrderIndependent) {
  std::mt19937 rng(5);
  for (const GLieAlgebra& g : sample_algebras()) {
    const auto perm = oracle::random_permutation(rng, g.size());
    for (int w = 1; w <= 4; ++w) EXPECT_EQ(ce_homology(g.with_basis_order(perm), w), ce_homology(g, w));
  }
}

TEST(ChevalleyComplex, TruncationExceeded) {
  const GLieAlgebra g = free_lie(odd_x(), 2).algebra;
  try {
    ce_complex(g, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncationExceeded);
  }
}

TEST(ChevalleyComplex, JacobiViolationIsCaught) {
  // [a,[b,e]] + [b,[e,a]] + [e,[a,b]] = d, so D^2 != 0 in weight 3.
  const GradedSpace v({{"a", {0, 0, 1}}, {"b", {0, 0, 1}}, {"e", {0, 0, 1}},
                       {"c", {0, 0, 2}}, {"f", {0, 0, 2}}, {"g", {0, 0, 2}}, {"d", {0, 0, 3}}});
  auto one = [](std::size_t i) { return LinComb{{i, Rational(1)}}; };
  auto minus = [](std::size_t i) { return LinComb{{i, Rational(-1)}}; };
  GLieAlgebra::BracketTable t;
  t[{0, 1}] = one(3);
  t[{1, 0}] = minus(3);
  t[{1, 2}] = one(4);
  t[{2, 1}] = minus(4);
  t[{2, 0}] = one(5);
  t[{0, 2}] = minus(5);
  t[{0, 4}] = one(6);
  t[{4, 0}] = minus(6);
  const GLieAlgebra g(v, t, 3);
  EXPECT_FALSE(check_lie_axioms(g).empty());
  try {
    ce_complex(g, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InternalD2Nonzero);
  }
}
