#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "confalg/errors.hpp"
#include "confalg/graded_space.hpp"
#include "confalg/lin_comb.hpp"

namespace confalg {

struct SpaceMeta {
  std::string name;
  std::optional<int> dimension;
  bool smooth = false;
  bool proper = false;
  bool connected = false;
  bool unital = false;

  friend bool operator==(const SpaceMeta&, const SpaceMeta&) = default;
};

/// Dimensions keyed by (cohomological degree, Tate weight).
using DimensionTable = std::map<std::pair<int, int>, std::size_t>;

/// Finite-dimensional graded-commutative algebra, possibly without unit,
/// given by its multiplication table. Plays the role of H*_c(X).
class GCAlgebra {
 public:
  using ProductTable = std::map<std::pair<std::size_t, std::size_t>, LinComb>;

  /// Structural checks only (index ranges, Lie weight 0, unit flag
  /// consistency); algebraic identities are left to validate().
  GCAlgebra(GradedSpace space, ProductTable products, SpaceMeta meta, std::optional<std::size_t> unit = std::nullopt);

  const GradedSpace& space() const { return space_; }
  const SpaceMeta& meta() const { return meta_; }
  std::optional<std::size_t> unit() const { return unit_; }
  std::size_t size() const { return space_.size(); }

  /// Empty when the product vanishes.
  const LinComb& product(std::size_t i, std::size_t j) const;
  const ProductTable& products() const { return products_; }
  bool has_zero_product() const { return products_.empty(); }

  DimensionTable dimension_table() const;

  /// Same algebra with basis element i of the result = element perm[i] of this.
  GCAlgebra with_basis_order(std::span<const std::size_t> perm) const;

  friend bool operator==(const GCAlgebra&, const GCAlgebra&) = default;

 private:
  GradedSpace space_;
  ProductTable products_;
  SpaceMeta meta_;
  std::optional<std::size_t> unit_;
};

/// Empty iff every algebra invariant holds; otherwise one diagnostic per
/// violation with the witnessing basis labels.
std::vector<Diagnostic> validate(const GCAlgebra& a);

enum class BuiltinId { AffineSpace, ProjectiveSpace, SmoothProperCurve };

/// Accepts "affine", "projective", "curve" and the long forms
/// "affine_space", "projective_space", "smooth_proper_curve".
BuiltinId parse_builtin_id(std::string_view id);
std::string_view to_string(BuiltinId id);

/// affine_space(n), projective_space(n) with n >= 1, smooth_proper_curve(g)
/// with g >= 0. Throws Error(InvalidParams).
GCAlgebra builtin(BuiltinId id, int param);

}  // namespace confalg
