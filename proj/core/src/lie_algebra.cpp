#include "confalg/lie_algebra.hpp"

#include <algorithm>
#include <string>

namespace confalg {

namespace {

const LinComb kZero;

int koszul(const Bidegree& a, const Bidegree& b) { return (a.is_odd() && b.is_odd()) ? -1 : 1; }

}  // namespace

GLieAlgebra::GLieAlgebra(GradedSpace space, BracketTable brackets, std::optional<int> max_weight)
    : space_(std::move(space)), max_weight_(max_weight) {
  for (const auto& e : space_.basis()) {
    if (e.degree.lie_weight < 1) {
      throw Error(ErrorCode::InvalidParams, "Lie algebra element '" + e.label + "' must have lie weight >= 1");
    }
    if (max_weight_ && e.degree.lie_weight > *max_weight_) {
      throw Error(ErrorCode::InvalidParams, "element '" + e.label + "' lies above the truncation weight");
    }
  }
  for (auto& [key, terms] : brackets) {
    if (key.first >= size() || key.second >= size()) throw Error(ErrorCode::InvalidParams, "bracket index out of range");
    if (!within_truncation(key.first, key.second)) {
      throw Error(ErrorCode::TruncationExceeded, "bracket data given above the truncation weight");
    }
    for (const auto& [k, c] : terms) {
      if (k >= size()) throw Error(ErrorCode::InvalidParams, "bracket term index out of range");
    }
    LinComb clean = normalized(terms);
    if (!clean.empty()) brackets_.emplace(key, std::move(clean));
  }
}

bool GLieAlgebra::within_truncation(std::size_t i, std::size_t j) const {
  return !max_weight_ || space_[i].degree.lie_weight + space_[j].degree.lie_weight <= *max_weight_;
}

const LinComb& GLieAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (!within_truncation(i, j)) {
    throw Error(ErrorCode::TruncationExceeded, "[" + space_[i].label + ", " + space_[j].label +
                                                   "] exceeds truncation weight " + std::to_string(*max_weight_));
  }
  auto it = brackets_.find({i, j});
  return it == brackets_.end() ? kZero : it->second;
}

LinComb GLieAlgebra::bracket(const LinComb& x, const LinComb& y) const {
  LinAccumulator acc;
  for (const auto& [i, ci] : x) {
    for (const auto& [j, cj] : y) accumulate(acc, bracket(i, j), ci * cj);
  }
  return to_lin_comb(acc);
}

GLieAlgebra GLieAlgebra::with_basis_order(std::span<const std::size_t> perm) const {
  if (perm.size() != size()) throw Error(ErrorCode::InvalidParams, "permutation size mismatch");
  std::vector<std::size_t> inverse(size(), size());
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= size() || inverse[perm[i]] != size()) throw Error(ErrorCode::InvalidParams, "not a permutation");
    inverse[perm[i]] = i;
    basis.push_back(space_[perm[i]]);
  }
  BracketTable brackets;
  for (const auto& [key, terms] : brackets_) {
    LinComb remapped;
    for (const auto& [k, c] : terms) remapped.emplace_back(inverse[k], c);
    std::sort(remapped.begin(), remapped.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    brackets.emplace(std::make_pair(inverse[key.first], inverse[key.second]), std::move(remapped));
  }
  return GLieAlgebra(GradedSpace(std::move(basis)), std::move(brackets), max_weight_);
}

std::vector<Diagnostic> check_lie_axioms(const GLieAlgebra& g) {
  std::vector<Diagnostic> out;
  const GradedSpace& v = g.space();
  const std::size_t n = g.size();

  for (const auto& [key, terms] : g.brackets()) {
    const Bidegree expected = v[key.first].degree + v[key.second].degree;
    for (const auto& [k, c] : terms) {
      if (v[k].degree != expected) {
        out.push_back({DiagnosticKind::Grading,
                       {v[key.first].label, v[key.second].label, v[k].label},
                       "bracket term does not carry the summed gradings"});
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!g.within_truncation(i, j)) continue;
      const LinComb expected = scaled(g.bracket(j, i), Rational(-koszul(v[i].degree, v[j].degree)));
      if (g.bracket(i, j) != expected) {
        out.push_back({DiagnosticKind::Antisymmetry, {v[i].label, v[j].label}, "[x,y] != -(-1)^{|x||y|}[y,x]"});
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const LinComb x{{i, Rational(1)}};
    for (std::size_t j = 0; j < n; ++j) {
      if (!g.within_truncation(i, j)) continue;
      const LinComb y{{j, Rational(1)}};
      const LinComb& xy = g.bracket(i, j);
      const int sign_xy = koszul(v[i].degree, v[j].degree);
      for (std::size_t k = 0; k < n; ++k) {
        const int total = v[i].degree.lie_weight + v[j].degree.lie_weight + v[k].degree.lie_weight;
        if (g.max_weight() && total > *g.max_weight()) continue;
        const LinComb z{{k, Rational(1)}};
        const LinComb lhs = g.bracket(x, g.bracket(j, k));
        LinAccumulator rhs;
        accumulate(rhs, g.bracket(xy, z), Rational(1));
        accumulate(rhs, g.bracket(y, g.bracket(i, k)), Rational(sign_xy));
        if (lhs != to_lin_comb(rhs)) {
          out.push_back({DiagnosticKind::Jacobi,
                         {v[i].label, v[j].label, v[k].label},
                         "[x,[y,z]] != [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]"});
        }
      }
    }
  }
  return out;
}

}  // namespace confalg
