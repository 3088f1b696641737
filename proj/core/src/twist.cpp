#include "confalg/twist.hpp"

namespace confalg {

GLieAlgebra tensor_lie(const GCAlgebra& a, const GLieAlgebra& l) {
  const GradedSpace& av = a.space();
  const GradedSpace& lv = l.space();
  const std::size_t nl = l.size();
  auto index = [nl](std::size_t i, std::size_t j) { return i * nl + j; };

  std::vector<BasisElement> basis;
  basis.reserve(a.size() * nl);
  for (const auto& x : av.basis()) {
    for (const auto& v : lv.basis()) basis.push_back({x.label + "⊗" + v.label, x.degree + v.degree});
  }

  GLieAlgebra::BracketTable brackets;
  for (const auto& [apair, ab] : a.products()) {
    const auto [ai, bi] = apair;
    for (std::size_t vi = 0; vi < nl; ++vi) {
      const bool v_odd = lv[vi].degree.is_odd();
      const bool b_odd = av[bi].degree.is_odd();
      const Rational sign((v_odd && b_odd) ? -1 : 1);
      for (std::size_t wi = 0; wi < nl; ++wi) {
        if (!l.within_truncation(vi, wi)) continue;
        const LinComb& vw = l.bracket(vi, wi);
        if (vw.empty()) continue;
        LinAccumulator acc;
        for (const auto& [c, cc] : ab) {
          for (const auto& [t, ct] : vw) acc[index(c, t)] += sign * cc * ct;
        }
        LinComb terms = to_lin_comb(acc);
        if (!terms.empty()) brackets.emplace(std::make_pair(index(ai, vi), index(bi, wi)), std::move(terms));
      }
    }
  }
  return GLieAlgebra(GradedSpace(std::move(basis)), std::move(brackets), l.max_weight());
}

}  // namespace confalg
