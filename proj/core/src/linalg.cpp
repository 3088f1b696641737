#include "confalg/linalg.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "confalg/errors.hpp"

namespace confalg {

namespace {

using IntEntry = std::pair<std::size_t, mpz_class>;
using IntRow = std::vector<IntEntry>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow integer_row(std::span<const SparseMatrix::Entry> row) {
  mpz_class lcm = 1;
  for (const auto& [c, v] : row) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.value().get_den_mpz_t());
  }
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    mpz_class scaled = v.value().get_num() * (lcm / v.value().get_den());
    out.emplace_back(c, std::move(scaled));
  }
  make_primitive(out);
  return out;
}

const mpz_class* find_entry(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const IntEntry& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// target := (pivot_val/g) * target - (target_val/g) * pivot_row, then primitive.
void eliminate_into(IntRow& target, const IntRow& pivot_row, const mpz_class& pivot_val, const mpz_class& target_val) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), pivot_val.get_mpz_t(), target_val.get_mpz_t());
  const mpz_class a = pivot_val / g;
  const mpz_class b = target_val / g;

  IntRow out;
  out.reserve(target.size() + pivot_row.size());
  auto t = target.begin();
  auto p = pivot_row.begin();
  while (t != target.end() || p != pivot_row.end()) {
    if (p == pivot_row.end() || (t != target.end() && t->first < p->first)) {
      out.emplace_back(t->first, a * t->second);
      ++t;
    } else if (t == target.end() || p->first < t->first) {
      out.emplace_back(p->first, -b * p->second);
      ++p;
    } else {
      mpz_class v = a * t->second - b * p->second;
      if (v != 0) out.emplace_back(t->first, std::move(v));
      ++t;
      ++p;
    }
  }
  make_primitive(out);
  target = std::move(out);
}

struct Echelon {
  std::vector<IntRow> rows;         // pivot rows, in pivot order
  std::vector<std::size_t> pivots;  // pivot column of each row
};

// Fraction-free elimination. Pivot rows are chosen by sparsity, and within a
// row the entry of smallest magnitude is the pivot. With full_reduction every
// pivot column is cleared from all other rows (Gauss-Jordan form).
Echelon eliminate(const SparseMatrix& m, bool full_reduction) {
  std::vector<IntRow> active;
  active.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!m.row(r).empty()) active.push_back(integer_row(m.row(r)));
  }

  Echelon ech;
  while (!active.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < active.size(); ++i) {
      if (active[i].size() < active[best].size()) best = i;
    }
    IntRow pivot_row = std::move(active[best]);
    active[best] = std::move(active.back());
    active.pop_back();

    std::size_t pivot_pos = 0;
    for (std::size_t k = 1; k < pivot_row.size(); ++k) {
      if (mpz_cmpabs(pivot_row[k].second.get_mpz_t(), pivot_row[pivot_pos].second.get_mpz_t()) < 0) pivot_pos = k;
    }
    const std::size_t pivot_col = pivot_row[pivot_pos].first;
    const mpz_class pivot_val = pivot_row[pivot_pos].second;

    for (auto& row : active) {
      if (const mpz_class* v = find_entry(row, pivot_col)) {
        const mpz_class target_val = *v;
        eliminate_into(row, pivot_row, pivot_val, target_val);
      }
    }
    std::erase_if(active, [](const IntRow& row) { return row.empty(); });

    if (full_reduction) {
      for (auto& row : ech.rows) {
        if (const mpz_class* v = find_entry(row, pivot_col)) {
          const mpz_class target_val = *v;
          eliminate_into(row, pivot_row, pivot_val, target_val);
        }
      }
    }
    ech.rows.push_back(std::move(pivot_row));
    ech.pivots.push_back(pivot_col);
  }
  return ech;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) { return eliminate(m, false).rows.size(); }

SparseMatrix kernel_basis(const SparseMatrix& m) {
  const Echelon ech = eliminate(m, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ech.pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  std::vector<std::size_t> free_index(m.cols(), std::numeric_limits<std::size_t>::max());
  for (std::size_t k = 0; k < free_cols.size(); ++k) free_index[free_cols[k]] = k;

  std::vector<Triplet> triplets;
  for (std::size_t k = 0; k < free_cols.size(); ++k) triplets.push_back({free_cols[k], k, Rational(1)});
  for (std::size_t i = 0; i < ech.rows.size(); ++i) {
    const std::size_t pc = ech.pivots[i];
    const mpz_class* pv = find_entry(ech.rows[i], pc);
    for (const auto& [c, v] : ech.rows[i]) {
      if (c == pc) continue;
      // After full reduction a non-pivot entry can only sit in a free column.
      triplets.push_back({pc, free_index[c], -Rational(v, *pv)});
    }
  }
  return SparseMatrix::from_triplets(m.cols(), free_cols.size(), std::move(triplets));
}

std::size_t homology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out) {
  if (d_out.cols() != d_in.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "cols(d_out) = " + std::to_string(d_out.cols()) +
                                              " but rows(d_in) = " + std::to_string(d_in.rows()));
  }
  if (!(d_out * d_in).is_zero()) {
    throw Error(ErrorCode::CompositionNonzero, "d_out * d_in is not zero");
  }
  const std::size_t kernel = d_out.cols() - rank(d_out);
  return kernel - rank(d_in);
}

}  // namespace confalg
