#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "confalg/graded_space.hpp"
#include "confalg/lie_algebra.hpp"
#include "confalg/sparse_matrix.hpp"

namespace confalg {

/// Block of the weight-w Chevalley complex: all monomials y_1⋯y_n of
/// Sym(g[1]) whose unshifted degrees sum to total_degree and whose Tate
/// weights sum to tate_weight. The differential preserves both, so each
/// block is a subcomplex.
struct BlockKey {
  int total_degree = 0;
  int tate_weight = 0;

  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

struct ComplexBlock {
  BlockKey key;
  /// terms[n - 1] spans (Sym^n g[1])_w within the block, n = 1..w.
  std::vector<std::vector<Monomial>> terms;
  /// differentials[n - 1] is D_n : term(n) -> term(n - 1) as a
  /// dim term(n-1) x dim term(n) matrix; D_1 has zero rows.
  std::vector<SparseMatrix> differentials;

  /// Cohomological degree of term(n) in this block.
  int degree_of_term(std::size_t n) const { return key.total_degree - static_cast<int>(n); }
};

/// Weight-w truncation of the homological Chevalley complex
///   0 -> Sym^w(g_1[1]) -> (Sym^{w-1} g[1])_w -> ... -> g_w[1] -> 0.
class ChainComplex {
 public:
  ChainComplex(GradedSpace shifted, int weight, std::vector<ComplexBlock> blocks);

  int weight() const { return weight_; }
  /// g[1], the space whose monomials span the terms.
  const GradedSpace& shifted_space() const { return shifted_; }
  const std::vector<ComplexBlock>& blocks() const { return blocks_; }

  std::size_t term_dimension(std::size_t n) const;
  /// term(n) assembled across blocks, in block order.
  GradedSpace term(std::size_t n) const;
  /// Block-diagonal D_n in the basis of term().
  SparseMatrix differential(std::size_t n) const;

 private:
  GradedSpace shifted_;
  int weight_;
  std::vector<ComplexBlock> blocks_;
};

/// Homology dimensions of one Lie weight, keyed by (degree, Tate weight).
class BettiTable {
 public:
  using Entries = std::map<std::pair<int, int>, std::size_t>;

  BettiTable() = default;
  explicit BettiTable(int lie_weight) : lie_weight_(lie_weight) {}

  int lie_weight() const { return lie_weight_; }
  const Entries& entries() const { return entries_; }

  void add(int degree, int weight, std::size_t dim);
  std::size_t at(int degree, int weight) const;
  std::size_t total() const;
  std::map<int, std::size_t> degree_totals() const;

  /// Degrees shifted by degree_shift and weights by weight_shift.
  BettiTable reindexed(int degree_shift, int weight_shift) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int lie_weight_ = 0;
  Entries entries_;
};

/// Builds the weight-w complex with
///   D(y_1⋯y_n) = Σ_{i<j} ε(i,j) ⟦y_i,y_j⟧ y_1⋯ŷ_i⋯ŷ_j⋯y_n,
/// ε(i,j) the Koszul sign of moving y_i then y_j to the front and
/// ⟦y_1,y_2⟧ = (-1)^{|y_1|} s[s⁻¹y_1, s⁻¹y_2] in shifted degrees.
/// Throws TruncationExceeded if g is truncated below w, and
/// InternalD2Nonzero if the assembled complex fails D² = 0.
ChainComplex ce_complex(const GLieAlgebra& g, int w);

/// Throws Error(InternalD2Nonzero) unless D_{n-1} D_n = 0 in every block.
void check_d_squared(const ChainComplex& c);

BettiTable homology(const ChainComplex& c);

/// Chevalley homology of g in Lie weight w.
BettiTable ce_homology(const GLieAlgebra& g, int w);

}  // namespace confalg
