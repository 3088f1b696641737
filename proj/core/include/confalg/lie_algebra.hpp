#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "confalg/errors.hpp"
#include "confalg/graded_space.hpp"
#include "confalg/lin_comb.hpp"

namespace confalg {

/// Finite-dimensional graded Lie superalgebra given by bracket structure
/// constants. Parity is cohomological degree mod 2; every basis element has
/// Lie weight >= 1. When max_weight is set, the algebra is a truncation and
/// asking for a bracket whose Lie weight exceeds it is an error rather than
/// an implicit zero.
class GLieAlgebra {
 public:
  using BracketTable = std::map<std::pair<std::size_t, std::size_t>, LinComb>;

  GLieAlgebra(GradedSpace space, BracketTable brackets, std::optional<int> max_weight);

  const GradedSpace& space() const { return space_; }
  std::size_t size() const { return space_.size(); }
  std::optional<int> max_weight() const { return max_weight_; }
  const BracketTable& brackets() const { return brackets_; }
  bool is_abelian() const { return brackets_.empty(); }

  bool within_truncation(std::size_t i, std::size_t j) const;

  /// Throws Error(TruncationExceeded) if the bracket lands above max_weight.
  const LinComb& bracket(std::size_t i, std::size_t j) const;

  /// Bracket extended bilinearly.
  LinComb bracket(const LinComb& x, const LinComb& y) const;

  /// Same algebra with basis element i of the result = element perm[i] of this.
  GLieAlgebra with_basis_order(std::span<const std::size_t> perm) const;

 private:
  GradedSpace space_;
  BracketTable brackets_;
  std::optional<int> max_weight_;
};

/// Exhaustive check of grading, graded antisymmetry
/// [x,y] = -(-1)^{|x||y|}[y,x] and graded Jacobi
/// [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]] on all basis pairs and
/// triples inside the truncation.
std::vector<Diagnostic> check_lie_axioms(const GLieAlgebra& g);

}  // namespace confalg
