#include "confalg/free_lie.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace confalg {

namespace {

struct LetterInfo {
  std::vector<int> parity;
};

int word_parity(const Word& w, const LetterInfo& info) {
  int p = 0;
  for (std::size_t letter : w) p ^= info.parity[letter];
  return p;
}

WordPolynomial multiply(const WordPolynomial& a, const WordPolynomial& b) {
  WordPolynomial out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      out[std::move(w)] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// Super-commutator PQ - (-1)^{|P||Q|} QP of homogeneous polynomials.
WordPolynomial commutator(const WordPolynomial& p, int parity_p, const WordPolynomial& q, int parity_q) {
  WordPolynomial out = multiply(p, q);
  const Rational sign((parity_p && parity_q) ? 1 : -1);
  for (const auto& [w, c] : multiply(q, p)) out[w] += sign * c;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

struct Leading {
  std::size_t index;
  Rational coeff;
};

}  // namespace

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end())) {
      return false;
    }
  }
  return true;
}

std::vector<Word> lyndon_words(std::size_t letters, std::size_t max_length) {
  std::vector<Word> out;
  if (letters == 0 || max_length == 0) return out;
  // Duval: w is grown to max_length by periodic repetition, then stripped of
  // trailing maximal letters before incrementing.
  std::vector<long> w{-1};
  const long top = static_cast<long>(letters) - 1;
  while (!w.empty()) {
    ++w.back();
    out.emplace_back(w.begin(), w.end());
    const std::size_t m = w.size();
    while (w.size() < max_length) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == top) w.pop_back();
  }
  return out;
}

FreeLie free_lie(const GradedSpace& generators, int max_weight) {
  if (max_weight < 1) throw Error(ErrorCode::InvalidParams, "free_lie requires max_weight >= 1");
  const auto W = static_cast<std::size_t>(max_weight);

  LetterInfo info;
  for (const auto& g : generators.basis()) info.parity.push_back(g.degree.parity());

  auto word_degree = [&](const Word& w) {
    Bidegree d;
    for (std::size_t letter : w) d = d + generators[letter].degree;
    d.lie_weight = static_cast<int>(w.size());
    return d;
  };

  // Collect Lyndon words and the squares of odd ones, ordered by (length, word).
  std::vector<LyndonBracket> words;
  for (Word& w : lyndon_words(generators.size(), W)) words.push_back({std::move(w), false, {}, {}});
  const std::size_t lyndon_count = words.size();
  for (std::size_t i = 0; i < lyndon_count; ++i) {
    const Word& u = words[i].word;
    if (2 * u.size() <= W && word_parity(u, info)) {
      Word uu = u;
      uu.insert(uu.end(), u.begin(), u.end());
      words.push_back({std::move(uu), true, {}, {}});
    }
  }
  std::sort(words.begin(), words.end(), [](const LyndonBracket& a, const LyndonBracket& b) {
    return a.word.size() != b.word.size() ? a.word.size() < b.word.size() : a.word < b.word;
  });

  std::map<Word, std::size_t> index_of_word;
  for (std::size_t i = 0; i < words.size(); ++i) index_of_word.emplace(words[i].word, i);

  // Expansions in T(V); the smallest word of each is its own word.
  std::vector<WordPolynomial> expansions(words.size());
  std::vector<int> parity(words.size());
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < words.size(); ++i) {
    LyndonBracket& lb = words[i];
    parity[i] = word_parity(lb.word, info);
    std::string label;
    if (lb.word.size() == 1) {
      expansions[i] = {{lb.word, Rational(1)}};
      label = generators[lb.word.front()].label;
    } else {
      std::size_t split;
      if (lb.is_square) {
        split = lb.word.size() / 2;
      } else {
        split = 1;
        while (!is_lyndon(Word(lb.word.begin() + static_cast<std::ptrdiff_t>(split), lb.word.end()))) ++split;
      }
      const Word u(lb.word.begin(), lb.word.begin() + static_cast<std::ptrdiff_t>(split));
      const Word v(lb.word.begin() + static_cast<std::ptrdiff_t>(split), lb.word.end());
      lb.left = index_of_word.at(u);
      lb.right = index_of_word.at(v);
      expansions[i] = commutator(expansions[*lb.left], parity[*lb.left], expansions[*lb.right], parity[*lb.right]);
      label = "[" + basis[*lb.left].label + "," + basis[*lb.right].label + "]";
    }
    if (expansions[i].empty() || expansions[i].begin()->first != lb.word) {
      throw std::logic_error("free_lie: leading word of " + label + " is not its own word");
    }
    basis.push_back({std::move(label), word_degree(lb.word)});
  }

  std::map<Word, Leading> leading;
  for (std::size_t i = 0; i < words.size(); ++i) leading.emplace(words[i].word, Leading{i, expansions[i].begin()->second});

  // Rewrites a Lie polynomial against the triangular basis.
  auto rewrite = [&](WordPolynomial p) {
    LinComb out;
    while (!p.empty()) {
      const auto it = leading.find(p.begin()->first);
      if (it == leading.end()) throw std::logic_error("free_lie: bracket left the span of the Lyndon basis");
      const Rational coeff = p.begin()->second / it->second.coeff;
      out.emplace_back(it->second.index, coeff);
      for (const auto& [w, c] : expansions[it->second.index]) p[w] -= coeff * c;
      std::erase_if(p, [](const auto& kv) { return kv.second.is_zero(); });
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };

  GLieAlgebra::BracketTable brackets;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (words[i].word.size() + words[j].word.size() > W) continue;
      // [y, x] follows from [x, y] by antisymmetry.
      if (j < i) {
        auto it = brackets.find({j, i});
        if (it != brackets.end()) {
          brackets.emplace(std::make_pair(i, j), scaled(it->second, Rational((parity[i] && parity[j]) ? 1 : -1)));
        }
        continue;
      }
      LinComb terms = rewrite(commutator(expansions[i], parity[i], expansions[j], parity[j]));
      if (!terms.empty()) brackets.emplace(std::make_pair(i, j), std::move(terms));
    }
  }

  return FreeLie{GLieAlgebra(GradedSpace(std::move(basis)), std::move(brackets), max_weight), std::move(words),
                 std::move(expansions)};
}

}  // namespace confalg
