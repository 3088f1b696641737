#include "confalg/graded_space.hpp"

#include "confalg/errors.hpp"

namespace confalg {

GradedSpace::GradedSpace(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].degree.lie_weight < 0) {
      throw Error(ErrorCode::InvalidParams, "negative lie weight on '" + basis_[i].label + "'");
    }
    if (!index_.emplace(basis_[i].label, i).second) {
      throw Error(ErrorCode::DuplicateLabel, "label '" + basis_[i].label + "' appears twice");
    }
  }
}

std::optional<std::size_t> GradedSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::map<Bidegree, std::size_t> GradedSpace::dimensions() const {
  std::map<Bidegree, std::size_t> dims;
  for (const auto& e : basis_) ++dims[e.degree];
  return dims;
}

GradedSpace shift(const GradedSpace& v, int n) {
  std::vector<BasisElement> basis = v.basis();
  for (auto& e : basis) e.degree.coh_deg -= n;
  return GradedSpace(std::move(basis));
}

GradedSpace tate_twist(const GradedSpace& v, int m) {
  std::vector<BasisElement> basis = v.basis();
  for (auto& e : basis) e.degree.tate_weight -= 2 * m;
  return GradedSpace(std::move(basis));
}

GradedSpace tensor(const GradedSpace& v, const GradedSpace& w) {
  std::vector<BasisElement> basis;
  basis.reserve(v.size() * w.size());
  for (const auto& a : v.basis()) {
    for (const auto& b : w.basis()) {
      basis.push_back({a.label + "⊗" + b.label, a.degree + b.degree});
    }
  }
  return GradedSpace(std::move(basis));
}

namespace {

void enumerate_monomials(const GradedSpace& v, std::size_t start, std::size_t remaining, int weight_so_far,
                         std::optional<int> target, Monomial& current, std::vector<Monomial>& out) {
  if (remaining == 0) {
    if (!target || weight_so_far == *target) out.push_back(current);
    return;
  }
  for (std::size_t i = start; i < v.size(); ++i) {
    const Bidegree& d = v[i].degree;
    if (target && weight_so_far + d.lie_weight > *target) continue;
    current.push_back(i);
    enumerate_monomials(v, d.is_odd() ? i + 1 : i, remaining - 1, weight_so_far + d.lie_weight, target, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Monomial> sym_monomials(const GradedSpace& v, std::size_t n, std::optional<int> lie_weight) {
  std::vector<Monomial> out;
  Monomial current;
  current.reserve(n);
  enumerate_monomials(v, 0, n, 0, lie_weight, current, out);
  return out;
}

GradedSpace sym_power(const GradedSpace& v, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidParams, "sym_power requires n >= 1");
  std::vector<BasisElement> basis;
  for (const auto& m : sym_monomials(v, n)) basis.push_back({monomial_label(v, m), monomial_degree(v, m)});
  return GradedSpace(std::move(basis));
}

GradedSpace lie_weight_component(const GradedSpace& v, int w) {
  std::vector<BasisElement> basis;
  for (const auto& e : v.basis()) {
    if (e.degree.lie_weight == w) basis.push_back(e);
  }
  return GradedSpace(std::move(basis));
}

Bidegree monomial_degree(const GradedSpace& v, const Monomial& m) {
  Bidegree total;
  for (std::size_t i : m) total = total + v[i].degree;
  return total;
}

std::string monomial_label(const GradedSpace& v, const Monomial& m) {
  std::string label;
  for (std::size_t k = 0; k < m.size();) {
    std::size_t run = 1;
    while (k + run < m.size() && m[k + run] == m[k]) ++run;
    if (!label.empty()) label += "·";
    label += v[m[k]].label;
    if (run > 1) label += "^" + std::to_string(run);
    k += run;
  }
  return label;
}

int koszul_sort(const GradedSpace& v, Monomial& factors) {
  int sign = 1;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    for (std::size_t j = i; j > 0 && factors[j - 1] > factors[j]; --j) {
      if (v[factors[j - 1]].degree.is_odd() && v[factors[j]].degree.is_odd()) sign = -sign;
      std::swap(factors[j - 1], factors[j]);
    }
  }
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i] == factors[i - 1] && v[factors[i]].degree.is_odd()) return 0;
  }
  return sign;
}

}  // namespace confalg
