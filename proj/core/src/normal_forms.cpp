#include "parenbraid/normal_forms.hpp"

#include "parenbraid/errors.hpp"
#include "parenbraid/ld_structure.hpp"
#include "parenbraid/reversing.hpp"

namespace parenbraid {

namespace {

// Enough factors for every letter of w to act on a right vine without running out.
Tree vine_for(const Word& w) { return right_vine(static_cast<int>(w.size()) + w.max_index() + 2); }

bool trivial_leaf(const ColouredTree<Word>& t) { return t.tree.is_leaf() && t.colours.front().empty(); }

}  // namespace

ZSPair zs_split(const Word& w) {
  if (!w.is_positive()) throw DomainError("zs_split needs a positive word");
  Word braid;
  std::vector<int> thompson;
  for (const Letter& x : w) {
    if (x.is_a()) {
      thompson.push_back(x.index);
      continue;
    }
    // a_k . beta = db_k(beta) . a_{beta^{-1}[k]}, applied from the rightmost a-letter outwards.
    Word beta{x};
    for (auto it = thompson.rbegin(); it != thompson.rend(); ++it) {
      const int k = *it;
      *it = strand_destination(beta, k);
      beta = double_strand(beta, k);
    }
    braid *= beta;
  }
  Word f;
  for (int k : thompson) f.push_back(Letter::a(k));
  return {braid, f};
}

FractionForm fraction_form(const Word& w) {
  const Fraction fr = left_reverse(w);
  const ZSPair num = zs_split(fr.numerator);
  const ZSPair den = zs_split(fr.denominator);
  return {fr.numerator, fr.denominator, num.thompson, num.braid, den.braid, den.thompson};
}

Word reassemble(const std::vector<Word>& factors) {
  Word out;
  for (std::size_t k = 0; k < factors.size(); ++k) out *= shift(factors[k], static_cast<int>(k));
  return out;
}

std::optional<Tree> parse_special_thompson(const Word& f) {
  if (!f.is_positive() || !f.is_a_word()) return std::nullopt;
  const std::vector<Tree> factors = dec(act_tree(vine_for(f), f));
  for (std::size_t k = 1; k < factors.size(); ++k) {
    if (!factors[k].is_leaf()) return std::nullopt;
  }
  return factors.front();
}

SpecialDecomposition special_decomposition_F(const Word& f) {
  if (!f.is_positive() || !f.is_a_word()) throw DomainError("special_decomposition_F needs a positive a-word");
  std::vector<Tree> factors = dec(act_tree(vine_for(f), f));
  while (!factors.empty() && factors.back().is_leaf()) factors.pop_back();
  SpecialDecomposition out;
  for (const Tree& t : factors) out.factors.push_back(ev(t));
  out.thompson = out.factors;
  return out;
}

SpecialDecomposition decompose_positive(const Word& w) {
  if (!w.is_positive()) throw DomainError("decompose_positive needs a positive word");
  const auto start = ColouredTree<Word>::uniform(vine_for(w), Word{});
  ColouredDec<Word> d = coloured_dec(act_coloured(start, w, BraidColours{}));
  while (!d.factors.empty() && trivial_leaf(d.factors.back())) d.factors.pop_back();
  SpecialDecomposition out;
  for (const auto& t : d.factors) {
    out.factors.push_back(ev(t));
    out.braids.insert(out.braids.end(), t.colours.begin(), t.colours.end());
    out.thompson.push_back(ev(t.tree));
  }
  return out;
}

SpecialSplit split_special(const Word& z) {
  const auto start = ColouredTree<Word>::uniform(vine_for(z), Word{});
  ColouredTree<Word> result;
  try {
    result = act_coloured(start, z, BraidRack{});
  } catch (const PartialityError&) {
    throw NotSpecialError("the word does not act on a right vine");
  } catch (const DomainError& e) {
    throw NotSpecialError(std::string("vine test failed: ") + e.what());
  }
  const ColouredDec<Word> d = coloured_dec(result);
  for (std::size_t k = 1; k < d.factors.size(); ++k) {
    if (!trivial_leaf(d.factors[k])) throw NotSpecialError("vine test failed at factor " + std::to_string(k + 1));
  }
  if (!d.last.empty()) throw NotSpecialError("vine test failed at the final leaf");
  const ColouredTree<Word>& head = d.factors.front();
  return {head.colours, ev(head.tree)};
}

bool is_pure(const Word& w) {
  const Tree t = minimal_input_tree(w);
  if (!(act_tree(t, w) == t)) return false;
  for (const Position& p : tree_positions(t).positions) {
    Position cur = p;
    for (const Letter& x : w) cur = move_position(cur, x);
    if (!(cur == p)) return false;
  }
  return true;
}

}  // namespace parenbraid
