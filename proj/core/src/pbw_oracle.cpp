#include <stdexcept>
#include <tuple>

#include "confalg/free_lie.hpp"

namespace confalg {

namespace {

// Generating series keyed by (Lie weight, degree, Tate weight).
using Key = std::tuple<int, int, int>;
using Series = std::map<Key, long long>;

Series times(const Series& a, const Series& b, int max_weight) {
  Series out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const int w = std::get<0>(ka) + std::get<0>(kb);
      if (w > max_weight) continue;
      out[{w, std::get<1>(ka) + std::get<1>(kb), std::get<2>(ka) + std::get<2>(kb)}] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Sym of `mult` copies of a line in grading `key`: polynomial series if even,
// exterior if odd.
Series sym_series(const Key& key, long long mult, int max_weight) {
  const auto [w, deg, tate] = key;
  const bool odd = (deg & 1) != 0;
  Series out;
  for (long long k = 0; k * w <= max_weight; ++k) {
    const long long c = odd ? binomial(mult, k) : binomial(mult + k - 1, k);
    if (c == 0) break;
    out[{static_cast<int>(k) * w, static_cast<int>(k) * deg, static_cast<int>(k) * tate}] = c;
  }
  return out;
}

}  // namespace

DimensionTable graded_dimension_oracle(const GradedSpace& generators, int w) {
  if (w < 1) throw Error(ErrorCode::InvalidParams, "graded_dimension_oracle requires w >= 1");

  Series letters;
  for (const auto& g : generators.basis()) ++letters[{1, g.degree.coh_deg, g.degree.tate_weight}];

  // tensor[k] = character of V^{⊗k}
  std::vector<Series> tensor{Series{{{0, 0, 0}, 1}}};
  for (int k = 1; k <= w; ++k) tensor.push_back(times(tensor.back(), letters, w));

  // lie[k] = character of the weight-k part of Free_Lie(V)
  std::vector<Series> lie(static_cast<std::size_t>(w) + 1);
  lie[1] = letters;
  for (int k = 2; k <= w; ++k) {
    Series sym{{{0, 0, 0}, 1}};
    for (int u = 1; u < k; ++u) {
      for (const auto& [key, mult] : lie[static_cast<std::size_t>(u)]) sym = times(sym, sym_series(key, mult, k), k);
    }
    Series& target = lie[static_cast<std::size_t>(k)];
    for (const auto& [key, c] : tensor[static_cast<std::size_t>(k)]) target[key] += c;
    for (const auto& [key, c] : sym) {
      if (std::get<0>(key) == k) target[key] -= c;
    }
    std::erase_if(target, [](const auto& kv) { return kv.second == 0; });
  }

  DimensionTable out;
  for (const auto& [key, c] : lie[static_cast<std::size_t>(w)]) {
    if (c < 0) throw std::logic_error("graded_dimension_oracle: negative dimension");
    out[{std::get<1>(key), std::get<2>(key)}] = static_cast<std::size_t>(c);
  }
  return out;
}

}  // namespace confalg
