#include "confalg/gc_algebra.hpp"

#include <algorithm>
#include <string>

namespace confalg {

namespace {

const LinComb kZero;

int koszul(const Bidegree& a, const Bidegree& b) { return (a.is_odd() && b.is_odd()) ? -1 : 1; }

LinComb remap(const LinComb& terms, const std::vector<std::size_t>& inverse) {
  LinComb out;
  out.reserve(terms.size());
  for (const auto& [i, c] : terms) out.emplace_back(inverse[i], c);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

// x * y for linear combinations of basis elements.
LinComb multiply(const GCAlgebra& a, const LinComb& x, const LinComb& y) {
  LinAccumulator acc;
  for (const auto& [i, ci] : x) {
    for (const auto& [j, cj] : y) accumulate(acc, a.product(i, j), ci * cj);
  }
  return to_lin_comb(acc);
}

}  // namespace

GCAlgebra::GCAlgebra(GradedSpace space, ProductTable products, SpaceMeta meta, std::optional<std::size_t> unit)
    : space_(std::move(space)), meta_(std::move(meta)), unit_(unit) {
  for (const auto& e : space_.basis()) {
    if (e.degree.lie_weight != 0) {
      throw Error(ErrorCode::InvalidParams, "algebra basis element '" + e.label + "' must have lie weight 0");
    }
  }
  if (unit_ && *unit_ >= space_.size()) throw Error(ErrorCode::InvalidParams, "unit index out of range");
  if (meta_.unital != unit_.has_value()) {
    throw Error(ErrorCode::InvalidParams, "a unit element is required exactly when the algebra is unital");
  }
  for (auto& [key, terms] : products) {
    if (key.first >= space_.size() || key.second >= space_.size()) {
      throw Error(ErrorCode::InvalidParams, "product index out of range");
    }
    for (const auto& [k, c] : terms) {
      if (k >= space_.size()) throw Error(ErrorCode::InvalidParams, "product term index out of range");
    }
    LinComb clean = normalized(terms);
    if (!clean.empty()) products_.emplace(key, std::move(clean));
  }
}

const LinComb& GCAlgebra::product(std::size_t i, std::size_t j) const {
  auto it = products_.find({i, j});
  return it == products_.end() ? kZero : it->second;
}

DimensionTable GCAlgebra::dimension_table() const {
  DimensionTable table;
  for (const auto& e : space_.basis()) ++table[{e.degree.coh_deg, e.degree.tate_weight}];
  return table;
}

GCAlgebra GCAlgebra::with_basis_order(std::span<const std::size_t> perm) const {
  if (perm.size() != size()) throw Error(ErrorCode::InvalidParams, "permutation size mismatch");
  std::vector<std::size_t> inverse(size(), size());
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= size() || inverse[perm[i]] != size()) throw Error(ErrorCode::InvalidParams, "not a permutation");
    inverse[perm[i]] = i;
    basis.push_back(space_[perm[i]]);
  }
  ProductTable products;
  for (const auto& [key, terms] : products_) {
    products.emplace(std::make_pair(inverse[key.first], inverse[key.second]), remap(terms, inverse));
  }
  std::optional<std::size_t> unit;
  if (unit_) unit = inverse[*unit_];
  return GCAlgebra(GradedSpace(std::move(basis)), std::move(products), meta_, unit);
}

std::vector<Diagnostic> validate(const GCAlgebra& a) {
  std::vector<Diagnostic> out;
  const GradedSpace& v = a.space();
  const std::size_t n = a.size();

  if (a.meta().smooth && !a.meta().dimension) {
    out.push_back({DiagnosticKind::Metadata, {}, "smooth spaces must declare a dimension"});
  }

  for (const auto& [key, terms] : a.products()) {
    const Bidegree expected = v[key.first].degree + v[key.second].degree;
    for (const auto& [k, c] : terms) {
      const Bidegree& got = v[k].degree;
      if (got.coh_deg != expected.coh_deg || got.tate_weight != expected.tate_weight) {
        out.push_back({DiagnosticKind::Grading,
                       {v[key.first].label, v[key.second].label, v[k].label},
                       "product term does not have the summed degree and weight"});
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const LinComb& ij = a.product(i, j);
      const LinComb ji = scaled(a.product(j, i), Rational(koszul(v[i].degree, v[j].degree)));
      if (ij != ji) {
        out.push_back({DiagnosticKind::GradedCommutativity,
                       {v[i].label, v[j].label},
                       "a·b != (-1)^{|a||b|} b·a"});
      }
    }
  }

  // Under graded commutativity (ab)c = ±c(ba), so the triples (a,b,c) and
  // (c,b,a) witness the same failure; only one of them is reported.
  const bool commutative = out.empty() || std::none_of(out.begin(), out.end(), [](const Diagnostic& d) {
    return d.kind == DiagnosticKind::GradedCommutativity;
  });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const LinComb& ij = a.product(i, j);
      for (std::size_t k = commutative ? i : 0; k < n; ++k) {
        const LinComb left = multiply(a, ij, LinComb{{k, Rational(1)}});
        const LinComb right = multiply(a, LinComb{{i, Rational(1)}}, a.product(j, k));
        if (left != right) {
          out.push_back({DiagnosticKind::Associativity,
                         {v[i].label, v[j].label, v[k].label},
                         "(a·b)·c != a·(b·c)"});
        }
      }
    }
  }

  if (const auto u = a.unit()) {
    const Bidegree& d = v[*u].degree;
    if (d.coh_deg != 0 || d.tate_weight != 0) {
      out.push_back({DiagnosticKind::Unit, {v[*u].label}, "unit must sit in degree 0 and weight 0"});
    }
    for (std::size_t i = 0; i < n; ++i) {
      const LinComb self{{i, Rational(1)}};
      if (a.product(*u, i) != self || a.product(i, *u) != self) {
        out.push_back({DiagnosticKind::Unit, {v[*u].label, v[i].label}, "unit does not act as the identity"});
      }
    }
  }
  return out;
}

BuiltinId parse_builtin_id(std::string_view id) {
  if (id == "affine" || id == "affine_space") return BuiltinId::AffineSpace;
  if (id == "projective" || id == "projective_space") return BuiltinId::ProjectiveSpace;
  if (id == "curve" || id == "smooth_proper_curve") return BuiltinId::SmoothProperCurve;
  throw Error(ErrorCode::UnknownBuiltin, "no builtin named '" + std::string(id) + "'");
}

std::string_view to_string(BuiltinId id) {
  switch (id) {
    case BuiltinId::AffineSpace: return "affine_space";
    case BuiltinId::ProjectiveSpace: return "projective_space";
    case BuiltinId::SmoothProperCurve: return "smooth_proper_curve";
  }
  return "unknown";
}

namespace {

// H*_c(A^n) = Q[-2n](-n), no cup product.
GCAlgebra affine_space(int n) {
  GradedSpace space({{"e", {2 * n, 2 * n, 0}}});
  SpaceMeta meta{"affine_space(" + std::to_string(n) + ")", n, true, false, true, false};
  return GCAlgebra(std::move(space), {}, std::move(meta));
}

GCAlgebra projective_space(int n) {
  std::vector<BasisElement> basis;
  for (int i = 0; i <= n; ++i) basis.push_back({"h" + std::to_string(i), {2 * i, 2 * i, 0}});
  GCAlgebra::ProductTable products;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      products[{static_cast<std::size_t>(i), static_cast<std::size_t>(j)}] = {
          {static_cast<std::size_t>(i + j), Rational(1)}};
    }
  }
  SpaceMeta meta{"projective_space(" + std::to_string(n) + ")", n, true, true, true, true};
  return GCAlgebra(GradedSpace(std::move(basis)), std::move(products), std::move(meta), 0);
}

// Basis: 1, a_1..a_g, b_1..b_g, p with a_i b_i = p = -b_i a_i.
GCAlgebra smooth_proper_curve(int g) {
  const auto G = static_cast<std::size_t>(g);
  std::vector<BasisElement> basis{{"1", {0, 0, 0}}};
  for (int i = 1; i <= g; ++i) basis.push_back({"a" + std::to_string(i), {1, 1, 0}});
  for (int i = 1; i <= g; ++i) basis.push_back({"b" + std::to_string(i), {1, 1, 0}});
  basis.push_back({"p", {2, 2, 0}});
  const std::size_t point = basis.size() - 1;

  GCAlgebra::ProductTable products;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    products[{0, i}] = {{i, Rational(1)}};
    products[{i, 0}] = {{i, Rational(1)}};
  }
  for (std::size_t i = 1; i <= G; ++i) {
    products[{i, i + G}] = {{point, Rational(1)}};
    products[{i + G, i}] = {{point, Rational(-1)}};
  }
  SpaceMeta meta{"smooth_proper_curve(" + std::to_string(g) + ")", 1, true, true, true, true};
  return GCAlgebra(GradedSpace(std::move(basis)), std::move(products), std::move(meta), 0);
}

}  // namespace

GCAlgebra builtin(BuiltinId id, int param) {
  switch (id) {
    case BuiltinId::AffineSpace:
      if (param < 1) throw Error(ErrorCode::InvalidParams, "affine_space requires n >= 1");
      return affine_space(param);
    case BuiltinId::ProjectiveSpace:
      if (param < 1) throw Error(ErrorCode::InvalidParams, "projective_space requires n >= 1");
      return projective_space(param);
    case BuiltinId::SmoothProperCurve:
      if (param < 0) throw Error(ErrorCode::InvalidParams, "smooth_proper_curve requires g >= 0");
      return smooth_proper_curve(param);
  }
  throw Error(ErrorCode::UnknownBuiltin, "unknown builtin id");
}

}  // namespace confalg
