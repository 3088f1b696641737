#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace confalg {

/// Trigrading carried by every basis element. The Tate weight is normalized
/// so that Q(-1) has weight 2; Lie weight 0 is reserved for scalars and
/// algebra data.
struct Bidegree {
  int coh_deg = 0;
  int tate_weight = 0;
  int lie_weight = 0;

  int parity() const { return coh_deg & 1; }
  bool is_odd() const { return parity() != 0; }

  friend Bidegree operator+(Bidegree a, const Bidegree& b) {
    a.coh_deg += b.coh_deg;
    a.tate_weight += b.tate_weight;
    a.lie_weight += b.lie_weight;
    return a;
  }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

struct BasisElement {
  std::string label;
  Bidegree degree;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Finite-dimensional trigraded vector space with a labeled, ordered basis.
class GradedSpace {
 public:
  GradedSpace() = default;
  /// Throws Error(DuplicateLabel) on repeated labels and Error(InvalidParams)
  /// on negative Lie weight.
  explicit GradedSpace(std::vector<BasisElement> basis);

  std::size_t size() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }
  const BasisElement& operator[](std::size_t i) const { return basis_[i]; }
  const std::vector<BasisElement>& basis() const { return basis_; }

  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Dimension of each nonzero graded piece.
  std::map<Bidegree, std::size_t> dimensions() const;

  friend bool operator==(const GradedSpace& a, const GradedSpace& b) { return a.basis_ == b.basis_; }

 private:
  std::vector<BasisElement> basis_;
  std::map<std::string, std::size_t> index_;
};

/// Convention (V[n])^i = V^{n+i}: every cohomological degree drops by n.
GradedSpace shift(const GradedSpace& v, int n);

/// V(m): every Tate weight drops by 2m.
GradedSpace tate_twist(const GradedSpace& v, int m);

/// Basis of ordered pairs (row-major in v, then w); gradings add.
GradedSpace tensor(const GradedSpace& v, const GradedSpace& w);

/// A monomial of Sym(V) in canonical form: basis indices sorted ascending,
/// odd-parity indices occurring at most once.
using Monomial = std::vector<std::size_t>;

/// Canonical monomials of Sym^n(V), optionally restricted to total Lie weight.
std::vector<Monomial> sym_monomials(const GradedSpace& v, std::size_t n, std::optional<int> lie_weight = std::nullopt);

/// Sym^n(V) with the Koszul rule; n >= 1, otherwise Error(InvalidParams).
GradedSpace sym_power(const GradedSpace& v, std::size_t n);

GradedSpace lie_weight_component(const GradedSpace& v, int w);

Bidegree monomial_degree(const GradedSpace& v, const Monomial& m);
std::string monomial_label(const GradedSpace& v, const Monomial& m);

/// Sorts `factors` into canonical order. Returns the Koszul sign of the
/// permutation (only odd/odd transpositions count), or 0 if an odd factor
/// repeats and the product vanishes.
int koszul_sort(const GradedSpace& v, Monomial& factors);

}  // namespace confalg
