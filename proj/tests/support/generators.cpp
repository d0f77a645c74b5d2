#include "generators.hpp"

#include <algorithm>

namespace parenbraid::testing {

int Gen::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Gen::coin() { return uniform(0, 1) == 1; }

Letter Gen::letter(int max_index, bool allow_inverse, bool sigma, bool a) {
  const bool use_sigma = sigma && (!a || coin());
  const int i = uniform(1, max_index);
  const bool inv = allow_inverse && coin();
  return use_sigma ? Letter::sigma(i, inv) : Letter::a(i, inv);
}

Word Gen::word(int max_length, int max_index) {
  Word w;
  const int n = uniform(0, max_length);
  for (int k = 0; k < n; ++k) w.push_back(letter(max_index, true));
  return w;
}

Word Gen::positive_word(int max_length, int max_index) {
  Word w;
  const int n = uniform(0, max_length);
  for (int k = 0; k < n; ++k) w.push_back(letter(max_index, false));
  return w;
}

Word Gen::sigma_word(int max_length, int max_index, bool positive) {
  Word w;
  const int n = uniform(0, max_length);
  for (int k = 0; k < n; ++k) w.push_back(letter(max_index, !positive, true, false));
  return w;
}

Word Gen::a_word(int max_length, int max_index, bool positive) {
  Word w;
  const int n = uniform(0, max_length);
  for (int k = 0; k < n; ++k) w.push_back(letter(max_index, !positive, false, true));
  return w;
}

namespace {

Tree random_tree(Gen& g, int leaves) {
  if (leaves == 1) return Tree::leaf();
  const int left = g.uniform(1, leaves - 1);
  return Tree::node(random_tree(g, left), random_tree(g, leaves - left));
}

}  // namespace

Tree Gen::tree(int max_leaves) { return random_tree(*this, uniform(1, max_leaves)); }

Word Gen::sigma1_positive_word(int max_length, int max_index) {
  // Letters other than sigma_1^{+-1}, with at least one sigma_1 inserted.
  Word w;
  const int n = uniform(0, std::max(0, max_length - 1));
  for (int k = 0; k < n; ++k) {
    Letter x = letter(max_index, true);
    if (x.is_sigma() && x.index == 1) x.inverse = false;
    w.push_back(x);
  }
  return splice(w, static_cast<std::size_t>(uniform(0, static_cast<int>(w.size()))), 0, Word{Letter::sigma(1)});
}

std::vector<std::size_t> occurrences(const Word& w, const Word& pattern) {
  std::vector<std::size_t> out;
  if (pattern.size() > w.size()) return out;
  for (std::size_t i = 0; i + pattern.size() <= w.size(); ++i) {
    if (std::equal(pattern.begin(), pattern.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) out.push_back(i);
  }
  return out;
}

Word splice(const Word& w, std::size_t at, std::size_t length, const Word& to) {
  std::vector<Letter> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), to.begin(), to.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(at + length), w.end());
  return Word(std::move(out));
}

std::vector<Word> single_rewrites(const Word& w, const std::vector<Relation>& relations) {
  std::vector<Word> out;
  for (const Relation& r : relations) {
    for (std::size_t at : occurrences(w, r.lhs)) out.push_back(splice(w, at, r.lhs.size(), r.rhs));
    for (std::size_t at : occurrences(w, r.rhs)) out.push_back(splice(w, at, r.rhs.size(), r.lhs));
  }
  return out;
}

Word rewritable_word(Gen& g, const std::vector<Relation>& relations, int pieces, int max_index) {
  Word w;
  for (int k = 0; k < pieces; ++k) {
    if (g.coin()) {
      const Relation& r = g.pick(relations);
      w *= g.coin() ? r.lhs : r.rhs;
    } else {
      w.push_back(g.letter(max_index, false));
    }
  }
  return w;
}

Word equivalent_variant(Gen& g, const Word& w, const std::vector<Relation>& relations, int rounds) {
  Word cur = w;
  for (int k = 0; k < rounds; ++k) {
    const int move = g.uniform(0, 2);
    if (move == 0) {
      const std::vector<Word> next = single_rewrites(cur, relations);
      if (!next.empty()) cur = g.pick(next);
    } else if (move == 1) {
      const Letter x = g.letter(std::max(1, cur.max_index()), true);
      cur = splice(cur, static_cast<std::size_t>(g.uniform(0, static_cast<int>(cur.size()))), 0,
                   Word{x, x.inverted()});
    } else {
      cur = free_reduce(cur);
    }
  }
  return cur;
}

}  // namespace parenbraid::testing
