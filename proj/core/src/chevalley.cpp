#include "confalg/chevalley.hpp"

#include <stdexcept>
#include <string>

#include "confalg/linalg.hpp"

namespace confalg {

ChainComplex::ChainComplex(GradedSpace shifted, int weight, std::vector<ComplexBlock> blocks)
    : shifted_(std::move(shifted)), weight_(weight), blocks_(std::move(blocks)) {}

std::size_t ChainComplex::term_dimension(std::size_t n) const {
  std::size_t total = 0;
  for (const auto& b : blocks_) total += b.terms.at(n - 1).size();
  return total;
}

GradedSpace ChainComplex::term(std::size_t n) const {
  std::vector<BasisElement> basis;
  for (const auto& b : blocks_) {
    for (const auto& m : b.terms.at(n - 1)) basis.push_back({monomial_label(shifted_, m), monomial_degree(shifted_, m)});
  }
  return GradedSpace(std::move(basis));
}

SparseMatrix ChainComplex::differential(std::size_t n) const {
  std::vector<Triplet> triplets;
  std::size_t row_offset = 0;
  std::size_t col_offset = 0;
  for (const auto& b : blocks_) {
    const SparseMatrix& d = b.differentials.at(n - 1);
    for (std::size_t r = 0; r < d.rows(); ++r) {
      for (const auto& [c, v] : d.row(r)) triplets.push_back({row_offset + r, col_offset + c, v});
    }
    row_offset += d.rows();
    col_offset += d.cols();
  }
  return SparseMatrix::from_triplets(row_offset, col_offset, std::move(triplets));
}

void BettiTable::add(int degree, int weight, std::size_t dim) {
  if (dim == 0) return;
  entries_[{degree, weight}] += dim;
}

std::size_t BettiTable::at(int degree, int weight) const {
  auto it = entries_.find({degree, weight});
  return it == entries_.end() ? 0 : it->second;
}

std::size_t BettiTable::total() const {
  std::size_t sum = 0;
  for (const auto& [k, d] : entries_) sum += d;
  return sum;
}

std::map<int, std::size_t> BettiTable::degree_totals() const {
  std::map<int, std::size_t> out;
  for (const auto& [k, d] : entries_) out[k.first] += d;
  return out;
}

BettiTable BettiTable::reindexed(int degree_shift, int weight_shift) const {
  BettiTable out(lie_weight_);
  for (const auto& [k, d] : entries_) out.add(k.first + degree_shift, k.second + weight_shift, d);
  return out;
}

namespace {

struct MonomialIndex {
  std::map<Monomial, std::size_t> index;
};

}  // namespace

ChainComplex ce_complex(const GLieAlgebra& g, int w) {
  if (w < 1) throw Error(ErrorCode::InvalidParams, "ce_complex requires w >= 1");
  if (g.max_weight() && *g.max_weight() < w) {
    throw Error(ErrorCode::TruncationExceeded, "Lie algebra truncated at weight " + std::to_string(*g.max_weight()) +
                                                   " but weight " + std::to_string(w) + " was requested");
  }
  const GradedSpace shifted = shift(g.space(), 1);
  const auto W = static_cast<std::size_t>(w);

  std::map<BlockKey, ComplexBlock> blocks;
  for (std::size_t n = 1; n <= W; ++n) {
    for (Monomial& m : sym_monomials(shifted, n, w)) {
      const Bidegree d = monomial_degree(shifted, m);
      const BlockKey key{d.coh_deg + static_cast<int>(n), d.tate_weight};
      ComplexBlock& block = blocks[key];
      block.key = key;
      block.terms.resize(W);
      block.terms[n - 1].push_back(std::move(m));
    }
  }

  std::vector<int> parity(shifted.size());
  for (std::size_t i = 0; i < shifted.size(); ++i) parity[i] = shifted[i].degree.parity();

  std::vector<ComplexBlock> out;
  out.reserve(blocks.size());
  for (auto& [key, block] : blocks) {
    std::vector<MonomialIndex> lookup(W);
    for (std::size_t n = 1; n <= W; ++n) {
      for (std::size_t k = 0; k < block.terms[n - 1].size(); ++k) lookup[n - 1].index.emplace(block.terms[n - 1][k], k);
    }

    block.differentials.push_back(SparseMatrix(0, block.terms[0].size()));
    for (std::size_t n = 2; n <= W; ++n) {
      std::vector<Triplet> triplets;
      const auto& sources = block.terms[n - 1];
      for (std::size_t col = 0; col < sources.size(); ++col) {
        const Monomial& y = sources[col];
        for (std::size_t i = 0; i < n; ++i) {
          int before_i = 0;
          for (std::size_t k = 0; k < i; ++k) before_i += parity[y[k]];
          for (std::size_t j = i + 1; j < n; ++j) {
            const LinComb& br = g.bracket(y[i], y[j]);
            if (br.empty()) continue;
            int before_j = 0;
            for (std::size_t k = 0; k < j; ++k) {
              if (k != i) before_j += parity[y[k]];
            }
            const int exponent = parity[y[i]] * before_i + parity[y[j]] * before_j + parity[y[i]];
            const int sign = (exponent & 1) ? -1 : 1;

            Monomial rest;
            rest.reserve(n - 1);
            rest.push_back(0);
            for (std::size_t k = 0; k < n; ++k) {
              if (k != i && k != j) rest.push_back(y[k]);
            }
            for (const auto& [t, c] : br) {
              Monomial target = rest;
              target.front() = t;
              const int sort_sign = koszul_sort(shifted, target);
              if (sort_sign == 0) continue;
              auto it = lookup[n - 2].index.find(target);
              if (it == lookup[n - 2].index.end()) {
                throw std::logic_error("ce_complex: differential left its (degree, weight) block");
              }
              triplets.push_back({it->second, col, c * Rational(sign * sort_sign)});
            }
          }
        }
      }
      block.differentials.push_back(
          SparseMatrix::from_triplets(block.terms[n - 2].size(), sources.size(), std::move(triplets)));
    }
    out.push_back(std::move(block));
  }

  ChainComplex complex(shifted, w, std::move(out));
  check_d_squared(complex);
  return complex;
}

void check_d_squared(const ChainComplex& c) {
  for (const auto& block : c.blocks()) {
    for (std::size_t n = 2; n < block.differentials.size(); ++n) {
      // differentials[n] is D_{n+1}; differentials[n-1] is D_n.
      if (!(block.differentials[n - 1] * block.differentials[n]).is_zero()) {
        throw Error(ErrorCode::InternalD2Nonzero, "D_" + std::to_string(n) + " D_" + std::to_string(n + 1) +
                                                      " != 0 in block (degree " +
                                                      std::to_string(block.key.total_degree) + ", weight " +
                                                      std::to_string(block.key.tate_weight) + ")");
      }
    }
  }
}

BettiTable homology(const ChainComplex& c) {
  BettiTable table(c.weight());
  const auto W = static_cast<std::size_t>(c.weight());
  for (const auto& block : c.blocks()) {
    for (std::size_t n = 1; n <= W; ++n) {
      const SparseMatrix& d_out = block.differentials[n - 1];
      const SparseMatrix d_in = n < W ? block.differentials[n] : SparseMatrix(block.terms[n - 1].size(), 0);
      table.add(block.degree_of_term(n), block.key.tate_weight, homology_dim(d_in, d_out));
    }
  }
  return table;
}

BettiTable ce_homology(const GLieAlgebra& g, int w) { return homology(ce_complex(g, w)); }

}  // namespace confalg
