#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "confalg/chevalley.hpp"
#include "confalg/gc_algebra.hpp"
#include "confalg/graded_space.hpp"
#include "confalg/lie_algebra.hpp"

namespace confalg {

struct CardinalityResult {
  int k = 0;
  /// gr H*_c(Conf_k X, Q).
  BettiTable constant;
  /// gr H*_c(Conf_k X, ω): degrees and weights both lowered by 2dk. Present
  /// only for smooth X of known dimension d.
  std::optional<BettiTable> dualizing;
};

struct ConfResult {
  SpaceMeta meta;
  std::vector<CardinalityResult> cards;  // k = 1..max_k, in order

  /// False when every nonzero (degree, k) block has total dimension <= 1, in
  /// which case the associated graded already determines the cohomology.
  bool associated_graded() const;
  const CardinalityResult& card(int k) const;
};

/// One generator in degree 0, Tate weight 0: the constant sheaf.
GradedSpace default_generator();

/// g = tensor_lie(a, free_lie(shift(generator, -1), max_k)).
GLieAlgebra twisted_lie_algebra(const GCAlgebra& a, const GradedSpace& generator, int max_k);

/// Weightwise Chevalley homology of the twisted Lie algebra for k = 1..max_k.
/// Cardinalities are computed concurrently and collected in order.
ConfResult conf_cohomology(const GCAlgebra& a, const GradedSpace& generator, int max_k);
ConfResult conf_cohomology(const GCAlgebra& a, int max_k);

/// Constant -> dualizing re-indexing for a smooth space of dimension d.
BettiTable to_dualizing(const BettiTable& constant, int dimension, int k);

enum class Verdict { MatchInIsoRange, SurjectionRangeConsistent, OutsideRange, Mismatch };
std::string_view to_string(Verdict v);

struct StabilityRow {
  int k = 0;
  int degree = 0;
  std::size_t dim_k = 0;
  std::size_t dim_k_plus_1 = 0;
  Verdict verdict = Verdict::OutsideRange;
};

/// Dimension-level comparison of consecutive cardinalities in the dualizing
/// normalization. The stabilization map itself is not constructed: an
/// all-clear is consistency only, a Mismatch is a genuine alarm.
struct StabilityReport {
  static constexpr std::string_view kNote =
      "dimension-level check only: compares dim H^*_c(Conf_{k+1}) with dim H^*_c(Conf_k) "
      "in the dualizing normalization; the stabilization map is not constructed";

  bool curve_case = false;
  std::vector<StabilityRow> rows;

  std::size_t mismatches() const;
};

/// Requires a connected smooth space of known dimension and dualizing tables;
/// throws Error(PreconditionFailed) naming the missing hypothesis.
StabilityReport stability_report(const ConfResult& r, const SpaceMeta& meta);

}  // namespace confalg
