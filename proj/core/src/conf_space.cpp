#include "confalg/conf_space.hpp"

#include <future>
#include <string>

#include "confalg/free_lie.hpp"
#include "confalg/twist.hpp"

namespace confalg {

bool ConfResult::associated_graded() const {
  for (const auto& card : cards) {
    for (const auto& [degree, dim] : card.constant.degree_totals()) {
      if (dim > 1) return true;
    }
  }
  return false;
}

const CardinalityResult& ConfResult::card(int k) const {
  if (k < 1 || static_cast<std::size_t>(k) > cards.size()) {
    throw Error(ErrorCode::InvalidParams, "no result for cardinality " + std::to_string(k));
  }
  return cards[static_cast<std::size_t>(k) - 1];
}

GradedSpace default_generator() { return GradedSpace({{"x", {0, 0, 0}}}); }

GLieAlgebra twisted_lie_algebra(const GCAlgebra& a, const GradedSpace& generator, int max_k) {
  if (max_k < 1) throw Error(ErrorCode::InvalidParams, "max_k must be >= 1");
  if (generator.empty()) throw Error(ErrorCode::InvalidParams, "generator space must be nonzero");
  const FreeLie free = free_lie(shift(generator, -1), max_k);
  return tensor_lie(a, free.algebra);
}

BettiTable to_dualizing(const BettiTable& constant, int dimension, int k) {
  return constant.reindexed(-2 * dimension * k, -2 * dimension * k);
}

ConfResult conf_cohomology(const GCAlgebra& a, const GradedSpace& generator, int max_k) {
  const GLieAlgebra g = twisted_lie_algebra(a, generator, max_k);

  std::vector<std::future<BettiTable>> pending;
  pending.reserve(static_cast<std::size_t>(max_k));
  for (int k = 1; k <= max_k; ++k) {
    pending.push_back(std::async(std::launch::async, [&g, k] { return ce_homology(g, k); }));
  }

  ConfResult result{a.meta(), {}};
  const bool dualizable = a.meta().smooth && a.meta().dimension.has_value();
  for (int k = 1; k <= max_k; ++k) {
    CardinalityResult card{k, pending[static_cast<std::size_t>(k) - 1].get(), std::nullopt};
    if (dualizable) card.dualizing = to_dualizing(card.constant, *a.meta().dimension, k);
    result.cards.push_back(std::move(card));
  }
  return result;
}

ConfResult conf_cohomology(const GCAlgebra& a, int max_k) { return conf_cohomology(a, default_generator(), max_k); }

}  // namespace confalg
