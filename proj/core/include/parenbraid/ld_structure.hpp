#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "parenbraid/errors.hpp"
#include "parenbraid/reversing.hpp"
#include "parenbraid/trees.hpp"
#include "parenbraid/words.hpp"

namespace parenbraid {

// x[y] = x . shift(y) . sigma_1 . shift(x)^{-1}, assembled literally.
Word bracket(const Word& x, const Word& y);
// x o y = x . shift(y) . a_1.
Word circ(const Word& x, const Word& y);

// A left self-distributive colour carrier. Racks also provide the inverse bracket:
// inverse_bracket(x, z) is the unique y with bracket(x, y) = z.
template <class S>
concept ColourStructure = requires(const S& s, const typename S::value_type& x) {
  { s.bracket(x, x) } -> std::convertible_to<typename S::value_type>;
  { s.equal(x, x) } -> std::convertible_to<bool>;
  { S::is_rack } -> std::convertible_to<bool>;
};

template <class S>
concept RackStructure = ColourStructure<S> && S::is_rack && requires(const S& s, const typename S::value_type& x) {
  { s.inverse_bracket(x, x) } -> std::convertible_to<typename S::value_type>;
};

// Parenthesized braid words under the bracket; equality is word_problem. Not a rack here.
struct BraidColours {
  using value_type = Word;
  static constexpr bool is_rack = false;
  Word bracket(const Word& x, const Word& y) const;
  bool equal(const Word& x, const Word& y) const { return word_problem(x, y); }
};

// Braids in B_infinity under the bracket. The inverse bracket solves x[y] = z for y by de-shifting
// the handle-reduced form of x^{-1} z shift(x) sigma_1^{-1}; a handle-free word of an element of
// shift(B_infinity) has no sigma_1. Throws DomainError off B_infinity or when z is not in the image.
struct BraidRack {
  using value_type = Word;
  static constexpr bool is_rack = true;
  Word bracket(const Word& x, const Word& y) const;
  Word inverse_bracket(const Word& x, const Word& z) const;
  bool equal(const Word& x, const Word& y) const { return word_problem(x, y); }
};

// Conjugation x[y] = x y x^{-1} in a finite symmetric group; p[k] is the image of k.
struct PermutationRack {
  using value_type = std::vector<int>;
  static constexpr bool is_rack = true;
  value_type bracket(const value_type& x, const value_type& y) const;
  value_type inverse_bracket(const value_type& x, const value_type& z) const;
  bool equal(const value_type& x, const value_type& y) const { return x == y; }
};

// x[y] = y: the colour-blind structure used for skeleton-only actions.
struct TrivialColours {
  using value_type = int;
  static constexpr bool is_rack = true;
  int bracket(int, int y) const { return y; }
  int inverse_bracket(int, int z) const { return z; }
  bool equal(int x, int y) const { return x == y; }
};

// A tree with one colour per leaf, left to right. The last leaf is coloured too and never moves.
template <class C>
struct ColouredTree {
  Tree tree;
  std::vector<C> colours;

  static ColouredTree uniform(const Tree& t, const C& c) {
    return {t, std::vector<C>(static_cast<std::size_t>(t.leaf_count()), c)};
  }
};

template <class C>
ColouredTree<C> make_coloured(const Tree& t, std::vector<C> colours) {
  if (colours.size() != static_cast<std::size_t>(t.leaf_count())) {
    throw DomainError("colour count differs from leaf count");
  }
  return {t, std::move(colours)};
}

// Right decomposition of a coloured tree: the factors and the colour of the final leaf.
template <class C>
struct ColouredDec {
  std::vector<ColouredTree<C>> factors;
  C last;
};

template <class C>
ColouredDec<C> coloured_dec(const ColouredTree<C>& t) {
  ColouredDec<C> out;
  std::size_t at = 0;
  for (const Tree& f : dec(t.tree)) {
    const auto n = static_cast<std::size_t>(f.leaf_count());
    out.factors.push_back({f, std::vector<C>(t.colours.begin() + static_cast<std::ptrdiff_t>(at),
                                             t.colours.begin() + static_cast<std::ptrdiff_t>(at + n))});
    at += n;
  }
  out.last = t.colours.back();
  return out;
}

template <class C>
ColouredTree<C> coloured_from_dec(const ColouredDec<C>& d) {
  std::vector<Tree> skeletons;
  std::vector<C> colours;
  for (const auto& f : d.factors) {
    skeletons.push_back(f.tree);
    colours.insert(colours.end(), f.colours.begin(), f.colours.end());
  }
  colours.push_back(d.last);
  return {from_dec(skeletons), std::move(colours)};
}

// t[t']: t' with every colour y replaced by x_1[x_2[...x_p[y]...]], x_k the colours of t.
template <ColourStructure S>
ColouredTree<typename S::value_type> tree_bracket(const S& s, const ColouredTree<typename S::value_type>& t,
                                                  const ColouredTree<typename S::value_type>& u) {
  ColouredTree<typename S::value_type> out = u;
  for (auto& y : out.colours) {
    for (auto it = t.colours.rbegin(); it != t.colours.rend(); ++it) y = s.bracket(*it, y);
  }
  return out;
}

template <class C>
ColouredTree<C> coloured_node(const ColouredTree<C>& l, const ColouredTree<C>& r) {
  std::vector<C> colours = l.colours;
  colours.insert(colours.end(), r.colours.begin(), r.colours.end());
  return {Tree::node(l.tree, r.tree), std::move(colours)};
}

template <ColourStructure S>
ColouredTree<typename S::value_type> act_coloured(const ColouredTree<typename S::value_type>& t, const Word& w,
                                                  const S& s) {
  using C = typename S::value_type;
  ColouredTree<C> cur = t;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    const Letter x = w[pos];
    ColouredDec<C> d = coloured_dec(cur);
    const auto i = static_cast<std::size_t>(x.index);
    const bool needs_pair = x.is_sigma() || !x.inverse;
    if ((needs_pair && d.factors.size() <= i) || (!needs_pair && d.factors.size() < i)) {
      throw PartialityError(pos, "action undefined at letter " + std::to_string(pos + 1) + " (" + letter_name(x) + ")");
    }
    auto& f = d.factors;
    if (x.is_sigma() && !x.inverse) {
      ColouredTree<C> first = tree_bracket(s, f[i - 1], f[i]);
      f[i] = f[i - 1];
      f[i - 1] = std::move(first);
    } else if (x.is_sigma()) {
      if constexpr (RackStructure<S>) {
        ColouredTree<C> second = f[i - 1];
        for (auto& y : second.colours) {
          for (const auto& b : f[i].colours) y = s.inverse_bracket(b, y);
        }
        f[i - 1] = f[i];
        f[i] = std::move(second);
      } else {
        throw DomainError("inverse crossing needs a rack colour structure");
      }
    } else if (!x.inverse) {
      f[i - 1] = coloured_node(f[i - 1], f[i]);
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      if (f[i - 1].tree.is_leaf()) {
        throw PartialityError(pos, "action undefined at letter " + std::to_string(pos + 1) + " (" + letter_name(x) + ")");
      }
      const Tree l = f[i - 1].tree.left();
      const Tree r = f[i - 1].tree.right();
      const auto nl = static_cast<std::ptrdiff_t>(l.leaf_count());
      ColouredTree<C> left{l, std::vector<C>(f[i - 1].colours.begin(), f[i - 1].colours.begin() + nl)};
      ColouredTree<C> right{r, std::vector<C>(f[i - 1].colours.begin() + nl, f[i - 1].colours.end())};
      f[i - 1] = std::move(left);
      f.insert(f.begin() + static_cast<std::ptrdiff_t>(i), std::move(right));
    }
    cur = coloured_from_dec(d);
  }
  return cur;
}

// ev(leaf_x) = x, ev(t t') = ev(t) o ev(t'); the result is freely reduced.
Word ev(const ColouredTree<Word>& t);
// Uncoloured trees are read with every colour equal to 1.
Word ev(const Tree& t);
// ev(t_1) . shift(ev(t_2)) . ... over the right decomposition; a lone leaf gives its colour.
Word ev_star(const ColouredTree<Word>& t);
Word ev_star(const Tree& t);

enum class SpecialMode { bracket_only, circ_only, both };

struct SpecialEnumeration {
  std::vector<Word> elements;      // sorted by length, then lexicographically
  std::size_t expressions = 0;     // expressions built, before deduplication
  std::size_t collisions = 0;      // expressions whose value was already present
};

// Elements buildable from 1 with expressions having at most `depth` occurrences of 1.
SpecialEnumeration enumerate_special(int depth, SpecialMode mode, int max_depth = 6);

}  // namespace parenbraid
