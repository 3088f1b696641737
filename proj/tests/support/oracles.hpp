#pragma once

// Test-only oracles and generators. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "confalg/gc_algebra.hpp"
#include "confalg/lie_algebra.hpp"
#include "confalg/rational.hpp"
#include "confalg/sparse_matrix.hpp"

namespace confalg::oracle {

/// Plain dense Gauss-Jordan rank over Q.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (coin(rng) < density) t.push_back({r, c, Rational(num(rng), den(rng))});
    }
  }
  return SparseMatrix::from_triplets(rows, cols, std::move(t));
}

/// Low-rank matrix: product of random rows x k and k x cols factors.
inline SparseMatrix random_low_rank(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t k) {
  return random_matrix(rng, rows, k, 0.7) * random_matrix(rng, k, cols, 0.7);
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// dim Sym^n of a superspace with `even` even and `odd` odd basis vectors:
/// multisets on the even part times subsets of the odd part.
inline long long super_sym_dimension(int even, int odd, int n) {
  long long total = 0;
  for (int j = 0; j <= n; ++j) {
    const long long multisets = even == 0 ? (j == 0 ? 1 : 0) : binomial(even + j - 1, j);
    total += multisets * binomial(odd, n - j);
  }
  return total;
}

/// Number of Lyndon words of length n over k letters (Witt's formula).
inline long long witt(long long k, long long n) {
  auto mobius = [](long long m) {
    int sign = 1;
    for (long long p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        sign = -sign;
      }
    }
    if (m > 1) sign = -sign;
    return sign;
  };
  long long total = 0;
  for (long long d = 1; d <= n; ++d) {
    if (n % d) continue;
    long long power = 1;
    for (long long i = 0; i < n / d; ++i) power *= k;
    total += mobius(d) * power;
  }
  return total / n;
}

inline std::vector<std::size_t> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Exterior algebra on m odd classes in degree 1 (weight 1 each), i.e. the
/// cohomology ring of a compact m-torus; unital.
inline GCAlgebra exterior_algebra(int m) {
  const std::size_t size = std::size_t{1} << m;
  std::vector<BasisElement> basis;
  for (std::size_t mask = 0; mask < size; ++mask) {
    std::string label = "e";
    for (int i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << i)) label += std::to_string(i + 1);
    }
    const int deg = __builtin_popcountll(mask);
    basis.push_back({mask == 0 ? "1" : label, {deg, deg, 0}});
  }
  GCAlgebra::ProductTable products;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (a & b) continue;
      // sign of merging the sorted index lists a and b
      int swaps = 0;
      for (int i = 0; i < m; ++i) {
        if (!(b & (std::size_t{1} << i))) continue;
        for (int j = i + 1; j < m; ++j) swaps += (a >> j) & 1;
      }
      products[{a, b}] = {{a | b, Rational(swaps % 2 ? -1 : 1)}};
    }
  }
  SpaceMeta meta{"torus(" + std::to_string(m) + ")", m, true, true, true, true};
  return GCAlgebra(GradedSpace(std::move(basis)), std::move(products), std::move(meta), 0);
}

/// Rescales basis element i by factors[i] (e'_i = f_i e_i).
inline GCAlgebra rescaled(const GCAlgebra& a, const std::vector<Rational>& factors) {
  GCAlgebra::ProductTable products;
  for (const auto& [key, terms] : a.products()) {
    LinComb out;
    for (const auto& [k, c] : terms) out.emplace_back(k, c * factors[key.first] * factors[key.second] / factors[k]);
    products.emplace(key, std::move(out));
  }
  return GCAlgebra(a.space(), std::move(products), a.meta(), a.unit());
}

/// Change of basis e'_a = e_a + c e_b for a != b in the same graded piece.
inline GLieAlgebra elementary_change(const GLieAlgebra& g, std::size_t a, std::size_t b, const Rational& c) {
  auto to_new = [&](const LinComb& v) {
    LinAccumulator acc;
    for (const auto& [k, x] : v) acc[k] += x;
    if (auto it = acc.find(a); it != acc.end()) acc[b] -= c * it->second;
    return to_lin_comb(acc);
  };
  auto old_of = [&](std::size_t i) {
    LinComb v{{i, Rational(1)}};
    if (i == a) {
      v.emplace_back(b, c);
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    return v;
  };
  GLieAlgebra::BracketTable brackets;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!g.within_truncation(i, j)) continue;
      LinComb v = to_new(g.bracket(old_of(i), old_of(j)));
      if (!v.empty()) brackets.emplace(std::make_pair(i, j), std::move(v));
    }
  }
  return GLieAlgebra(g.space(), std::move(brackets), g.max_weight());
}

/// Random homogeneous change of basis built from elementary moves.
inline GLieAlgebra random_change_of_basis(std::mt19937& rng, const GLieAlgebra& g, int moves) {
  GLieAlgebra out = g;
  std::uniform_int_distribution<std::size_t> pick(0, g.size() ? g.size() - 1 : 0);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int m = 0; m < moves; ++m) {
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    const long c = coeff(rng);
    if (a == b || c == 0 || g.space()[a].degree != g.space()[b].degree) continue;
    out = elementary_change(out, a, b, Rational(c));
  }
  return out;
}

}  // namespace confalg::oracle
