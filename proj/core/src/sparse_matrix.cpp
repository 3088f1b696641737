#include "confalg/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "confalg/errors.hpp"

namespace confalg {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
  SparseMatrix m(rows, cols);
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) {
      throw Error(ErrorCode::ShapeMismatch, "entry (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                                                ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    auto& row = m.data_[t.row];
    if (!row.empty() && row.back().first == t.col) {
      row.back().second += t.value;
    } else {
      row.emplace_back(t.col, std::move(t.value));
    }
  }
  for (auto& row : m.data_) {
    std::erase_if(row, [](const Entry& e) { return e.second.is_zero(); });
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
  const std::size_t rows = dense.size();
  const std::size_t cols = rows ? dense.front().size() : 0;
  std::vector<Triplet> triplets;
  for (std::size_t r = 0; r < rows; ++r) {
    if (dense[r].size() != cols) throw Error(ErrorCode::ShapeMismatch, "ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!dense[r][c].is_zero()) triplets.push_back({r, c, dense[r][c]});
    }
  }
  return from_triplets(rows, cols, std::move(triplets));
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rational(1));
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& row : data_) total += row.size();
  return total;
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Rational(0);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  }
  return t;
}

SparseMatrix SparseMatrix::permuted(std::span<const std::size_t> row_perm, std::span<const std::size_t> col_perm) const {
  if (row_perm.size() != rows_ || col_perm.size() != cols_) {
    throw Error(ErrorCode::ShapeMismatch, "permutation size does not match matrix shape");
  }
  std::vector<std::size_t> col_inverse(cols_);
  for (std::size_t j = 0; j < cols_; ++j) col_inverse.at(col_perm[j]) = j;
  std::vector<Triplet> triplets;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [c, v] : data_.at(row_perm[i])) triplets.push_back({i, col_inverse[c], v});
  }
  return from_triplets(rows_, cols_, std::move(triplets));
}

SparseMatrix SparseMatrix::scale_rows(std::span<const Rational> factors) const {
  if (factors.size() != rows_) throw Error(ErrorCode::ShapeMismatch, "row scaling size mismatch");
  std::vector<Triplet> triplets;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) triplets.push_back({r, c, v * factors[r]});
  }
  return from_triplets(rows_, cols_, std::move(triplets));
}

std::vector<std::vector<Rational>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Rational>> dense(rows_, std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) dense[r][c] = v;
  }
  return dense;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::ShapeMismatch, "cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                              " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  SparseMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, av] : a.data_[r]) {
      for (const auto& [c, bv] : b.data_[k]) acc[c] += av * bv;
    }
    for (auto& [c, v] : acc) {
      if (!v.is_zero()) out.data_[r].emplace_back(c, std::move(v));
    }
  }
  return out;
}

}  // namespace confalg
