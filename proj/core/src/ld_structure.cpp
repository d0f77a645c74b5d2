#include "parenbraid/ld_structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "parenbraid/ordering.hpp"

namespace parenbraid {

Word bracket(const Word& x, const Word& y) {
  return x * shift(y) * Word{Letter::sigma(1)} * invert(shift(x));
}

Word circ(const Word& x, const Word& y) { return x * shift(y) * Word{Letter::a(1)}; }

Word BraidColours::bracket(const Word& x, const Word& y) const { return free_reduce(parenbraid::bracket(x, y)); }

Word BraidRack::bracket(const Word& x, const Word& y) const {
  if (!x.is_sigma_word() || !y.is_sigma_word()) throw DomainError("braid rack colours are sigma-words");
  return handle_reduce(parenbraid::bracket(x, y));
}

Word BraidRack::inverse_bracket(const Word& x, const Word& z) const {
  if (!x.is_sigma_word() || !z.is_sigma_word()) throw DomainError("braid rack colours are sigma-words");
  const Word r = handle_reduce(invert(x) * z * shift(x) * Word{Letter::sigma(1, true)});
  Word out;
  for (const Letter& l : r) {
    if (l.index == 1) throw DomainError("no inverse bracket: the quotient is not a shifted braid");
    out.push_back({l.family, l.index - 1, l.inverse});
  }
  return out;
}

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q) {
  // (p q)[k] = p[q[k]]
  Perm out(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) out[k] = p[static_cast<std::size_t>(q[k])];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[static_cast<std::size_t>(p[k])] = static_cast<int>(k);
  return out;
}

void ev_into(const Tree& t, const std::vector<Word>& colours, std::size_t& at, Word& out) {
  if (t.is_leaf()) {
    out = colours[at++];
    return;
  }
  Word l;
  Word r;
  ev_into(t.left(), colours, at, l);
  ev_into(t.right(), colours, at, r);
  out = free_reduce(circ(l, r));
}

// Faithful invariant of a sigma-word: images of x_1..x_n under the classical Artin action,
// with trailing fixed generators dropped.
std::string braid_key(const Word& w) {
  using FreeWord = std::vector<int>;
  const int n = w.max_index() + 1;
  std::vector<FreeWord> images(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) images[static_cast<std::size_t>(j)] = {j};
  auto append = [](FreeWord& out, int g) {
    if (!out.empty() && out.back() == -g) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  };
  auto substitute = [&](const FreeWord& u) {
    FreeWord out;
    for (int g : u) {
      const FreeWord& img = images[static_cast<std::size_t>(std::abs(g))];
      if (g > 0) {
        for (int h : img) append(out, h);
      } else {
        for (auto it = img.rbegin(); it != img.rend(); ++it) append(out, -*it);
      }
    }
    return out;
  };
  for (const Letter& x : w) {
    if (!x.is_sigma()) throw DomainError("braid key needs a sigma-word");
    const int i = x.index;
    // sigma_i: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i; the inverse letter uses the inverse map.
    const FreeWord gi = x.inverse ? FreeWord{i + 1} : FreeWord{i, i + 1, -i};
    const FreeWord gj = x.inverse ? FreeWord{-(i + 1), i, i + 1} : FreeWord{i};
    FreeWord ni = substitute(gi);
    FreeWord nj = substitute(gj);
    images[static_cast<std::size_t>(i)] = std::move(ni);
    images[static_cast<std::size_t>(i + 1)] = std::move(nj);
  }
  int last = n;
  while (last >= 1 && images[static_cast<std::size_t>(last)] == FreeWord{last}) --last;
  std::string key;
  for (int j = 1; j <= last; ++j) {
    for (int g : images[static_cast<std::size_t>(j)]) key += std::to_string(g) + ",";
    key += ";";
  }
  return key;
}

std::string skeleton_key(const Tree& t) {
  if (t.is_leaf()) return ".";
  return "(" + skeleton_key(t.left()) + skeleton_key(t.right()) + ")";
}

}  // namespace

PermutationRack::value_type PermutationRack::bracket(const value_type& x, const value_type& y) const {
  return compose(compose(x, y), inverse(x));
}

PermutationRack::value_type PermutationRack::inverse_bracket(const value_type& x, const value_type& z) const {
  return compose(compose(inverse(x), z), x);
}

Word ev(const ColouredTree<Word>& t) {
  std::size_t at = 0;
  Word out;
  ev_into(t.tree, t.colours, at, out);
  return out;
}

Word ev(const Tree& t) { return ev(ColouredTree<Word>::uniform(t, Word{})); }

Word ev_star(const ColouredTree<Word>& t) {
  // A lone leaf has an empty decomposition and counts as its own factor.
  if (t.tree.is_leaf()) return free_reduce(t.colours.front());
  const ColouredDec<Word> d = coloured_dec(t);
  Word out;
  for (std::size_t k = 0; k < d.factors.size(); ++k) out *= shift(ev(d.factors[k]), static_cast<int>(k));
  return free_reduce(out);
}

Word ev_star(const Tree& t) { return ev_star(ColouredTree<Word>::uniform(t, Word{})); }

SpecialEnumeration enumerate_special(int depth, SpecialMode mode, int max_depth) {
  if (depth < 1) throw DomainError("depth must be positive");
  if (depth > max_depth) throw DomainError("depth " + std::to_string(depth) + " exceeds the cap " + std::to_string(max_depth));

  struct Entry {
    Word word;
    ColouredTree<Word> tree;  // ev(tree) is the element
  };
  const BraidColours colours;
  SpecialEnumeration out;
  std::vector<std::vector<Entry>> levels(static_cast<std::size_t>(depth) + 1);
  // Elements with the same action on a vine share a skeleton, so buckets by skeleton are safe.
  // Elements are keyed by their coloured tree: the skeleton and the braid class of every colour.
  // Equal elements have equal keys (the decomposition into special braids is unique); a key hit is
  // confirmed by word_problem before it counts as a collision.
  std::map<std::string, std::vector<Word>> buckets;

  auto admit = [&](Entry e, std::size_t level) {
    ++out.expressions;
    std::string key = skeleton_key(e.tree.tree);
    for (const Word& c : e.tree.colours) key += "|" + braid_key(c);
    auto& bucket = buckets[key];
    for (const Word& known : bucket) {
      if (word_problem(known, e.word)) {
        ++out.collisions;
        return;
      }
    }
    bucket.push_back(e.word);
    out.elements.push_back(e.word);
    levels[level].push_back(std::move(e));
  };

  admit({Word{}, ColouredTree<Word>::uniform(Tree::leaf(), Word{})}, 1);
  for (int d = 2; d <= depth; ++d) {
    for (int l = 1; l < d; ++l) {
      for (const Entry& x : levels[static_cast<std::size_t>(l)]) {
        for (const Entry& y : levels[static_cast<std::size_t>(d - l)]) {
          if (mode != SpecialMode::circ_only) {
            admit({free_reduce(bracket(x.word, y.word)), tree_bracket(colours, x.tree, y.tree)},
                  static_cast<std::size_t>(d));
          }
          if (mode != SpecialMode::bracket_only) {
            admit({free_reduce(circ(x.word, y.word)), coloured_node(x.tree, y.tree)}, static_cast<std::size_t>(d));
          }
        }
      }
    }
  }
  std::sort(out.elements.begin(), out.elements.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace parenbraid
