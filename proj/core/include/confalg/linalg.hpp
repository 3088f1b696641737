#pragma once

#include <cstddef>

#include "confalg/sparse_matrix.hpp"

namespace confalg {

/// Rank over Q by fraction-free elimination on integer-scaled rows.
std::size_t rank(const SparseMatrix& m);

/// Columns form a basis of ker(m); the result is cols(m) x (cols(m) - rank(m)).
SparseMatrix kernel_basis(const SparseMatrix& m);

/// dim ker(d_out) - rank(d_in) for the complex  . --d_in--> V --d_out--> .
/// Throws ShapeMismatch if cols(d_out) != rows(d_in), CompositionNonzero if
/// d_out * d_in != 0.
std::size_t homology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out);

}  // namespace confalg
