#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "confalg/gc_algebra.hpp"
#include "confalg/graded_space.hpp"
#include "confalg/lie_algebra.hpp"
#include "confalg/rational.hpp"

namespace confalg {

/// Word over the generator alphabet; letters are generator indices.
using Word = std::vector<std::size_t>;

/// Noncommutative polynomial in the tensor algebra T(V), keyed by word in
/// lexicographic order so the first entry is the smallest word.
using WordPolynomial = std::map<Word, Rational>;

/// A basis element of the free Lie superalgebra: the standard bracketing of
/// a Lyndon word, or the square [u,u] of an odd Lyndon word u.
struct LyndonBracket {
  Word word;  // for a square this is u·u
  bool is_square = false;
  // Basis indices of the two bracketed factors; absent for generators.
  std::optional<std::size_t> left;
  std::optional<std::size_t> right;
};

struct FreeLie {
  GLieAlgebra algebra;
  std::vector<LyndonBracket> words;           // parallel to algebra.space()
  std::vector<WordPolynomial> expansions;     // image of each basis element in T(V)
};

/// Free Lie superalgebra on `generators`, truncated at Lie weight
/// max_weight >= 1. Generators receive Lie weight 1; the letter order is the
/// input basis order.
FreeLie free_lie(const GradedSpace& generators, int max_weight);

/// Lyndon words of length <= max_length over an alphabet of `letters`
/// letters, in lexicographic order (Duval's algorithm).
std::vector<Word> lyndon_words(std::size_t letters, std::size_t max_length);
bool is_lyndon(const Word& w);

/// Dimensions of Free_Lie(V) in Lie weight w, keyed by (degree, Tate weight),
/// obtained from the PBW identity  dim T(V) = dim Sym(Free_Lie(V))  solved
/// weight by weight. Independent of the Lyndon construction.
DimensionTable graded_dimension_oracle(const GradedSpace& generators, int w);

}  // namespace confalg
