#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "confalg/rational.hpp"

namespace confalg {

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

/// Immutable row-compressed sparse matrix over Q. No stored zeros; each row
/// is sorted by column.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  /// Duplicate coordinates are summed; zeros are dropped. Throws
  /// Error(ShapeMismatch) on out-of-range indices.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& dense);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  std::span<const Entry> row(std::size_t r) const { return data_[r]; }
  Rational at(std::size_t r, std::size_t c) const;

  SparseMatrix transpose() const;
  /// result(i, j) = this(row_perm[i], col_perm[j]).
  SparseMatrix permuted(std::span<const std::size_t> row_perm, std::span<const std::size_t> col_perm) const;
  SparseMatrix scale_rows(std::span<const Rational> factors) const;
  std::vector<std::vector<Rational>> to_dense() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> data_;
};

}  // namespace confalg
