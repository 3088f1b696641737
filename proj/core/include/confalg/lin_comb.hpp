#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "confalg/rational.hpp"

namespace confalg {

/// Sparse linear combination of basis indices: sorted by index, no zero
/// coefficients.
using LinComb = std::vector<std::pair<std::size_t, Rational>>;

using LinAccumulator = std::map<std::size_t, Rational>;

inline void accumulate(LinAccumulator& acc, const LinComb& terms, const Rational& scale) {
  if (scale.is_zero()) return;
  for (const auto& [i, c] : terms) acc[i] += c * scale;
}

inline LinComb to_lin_comb(const LinAccumulator& acc) {
  LinComb out;
  for (const auto& [i, c] : acc) {
    if (!c.is_zero()) out.emplace_back(i, c);
  }
  return out;
}

inline LinComb normalized(const LinComb& terms) {
  LinAccumulator acc;
  accumulate(acc, terms, Rational(1));
  return to_lin_comb(acc);
}

inline LinComb scaled(const LinComb& terms, const Rational& s) {
  LinAccumulator acc;
  accumulate(acc, terms, s);
  return to_lin_comb(acc);
}

}  // namespace confalg
