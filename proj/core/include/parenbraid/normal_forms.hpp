#pragma once

#include <optional>
#include <vector>

#include "parenbraid/trees.hpp"
#include "parenbraid/words.hpp"

namespace parenbraid {

// braid . thompson represents the split element; braid is a positive sigma-word, thompson a positive a-word.
struct ZSPair {
  Word braid;
  Word thompson;
};

ZSPair zs_split(const Word& w);

// w = numerator^{-1} . denominator = f^{-1} . beta^{-1} . gamma . g,
// with (beta, f) = zs_split(numerator) and (gamma, g) = zs_split(denominator).
struct FractionForm {
  Word numerator;
  Word denominator;
  Word f;
  Word beta;
  Word gamma;
  Word g;
};

FractionForm fraction_form(const Word& w);

// z_1 . shift(z_2) . shift^2(z_3) ...
Word reassemble(const std::vector<Word>& factors);

// factors reassemble to the input. For decompose_positive, braids holds every leaf colour of the
// factors in order and thompson the skeleton evaluations, so that
// reassemble(braids) . reassemble(thompson) also represents the input.
struct SpecialDecomposition {
  std::vector<Word> factors;
  std::vector<Word> braids;
  std::vector<Word> thompson;
};

// The tree t with ev(t) = f when f is a special Thompson element.
std::optional<Tree> parse_special_thompson(const Word& f);

SpecialDecomposition special_decomposition_F(const Word& f);
SpecialDecomposition decompose_positive(const Word& w);

// z = reassemble(braids) . thompson with every braid special; thompson is special of length braids.size() - 1.
struct SpecialSplit {
  std::vector<Word> braids;
  Word thompson;
};

// Throws NotSpecialError when the vine test fails.
SpecialSplit split_special(const Word& z);

bool is_pure(const Word& w);

}  // namespace parenbraid
