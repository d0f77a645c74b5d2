#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "parenbraid/text.hpp"
#include "parenbraid/trees.hpp"

using namespace parenbraid;
using parenbraid::testing::Gen;

namespace {

Word W(const char* text) { return parse_word(text); }
Tree T(const char* text) { return parse_tree(text); }
Position P(std::vector<int> e) { return Position(std::move(e)); }

// Oracle for Dyad(t): the leaf intervals of t, computed by halving [lo, hi] at every node.
void leaf_bounds(const Tree& t, Dyadic lo, Dyadic hi, std::vector<Dyadic>& out) {
  if (t.is_leaf()) {
    out.push_back(lo);
    return;
  }
  const Dyadic mid = lo + (hi - lo).times_power_of_two(-1);
  leaf_bounds(t.left(), lo, mid, out);
  leaf_bounds(t.right(), mid, hi, out);
}

std::vector<Dyadic> oracle_dyads(const Tree& t) {
  std::vector<Dyadic> out;
  leaf_bounds(t, Dyadic(), Dyadic::one(), out);
  out.push_back(Dyadic::one());
  return out;
}

// Smallest tree, by leaf count, on which w acts; exhaustive.
std::optional<Tree> smallest_input(const Word& w, int max_leaves) {
  for (int n = 1; n <= max_leaves; ++n) {
    std::vector<Tree> hits;
    for (const Tree& t : enumerate_trees(n)) {
      if (action_defined(t, w)) hits.push_back(t);
    }
    if (hits.size() == 1) return hits.front();
    if (hits.size() > 1) return std::nullopt;
  }
  return std::nullopt;
}

std::size_t catalan(int n) {
  std::size_t c = 1;
  for (int k = 1; k <= n; ++k) c = c * 2 * static_cast<std::size_t>(2 * k - 1) / static_cast<std::size_t>(k + 1);
  return c;
}

}  // namespace

TEST(Positions, DyadicValues) {
  EXPECT_EQ(position_to_dyadic(P({1, 2, 1})), Dyadic(13, 5));
  EXPECT_EQ(position_to_dyadic(P({1})), Dyadic());
  EXPECT_EQ(position_to_dyadic(P({2})), Dyadic::half());
  EXPECT_EQ(position_to_dyadic(P({3})), Dyadic(3, 2));
  EXPECT_THROW(Position({0, 1}), DomainError);
  EXPECT_THROW(Position({1, 0}), DomainError);
  EXPECT_NO_THROW(Position({1, 0, 1}));
}

TEST(Positions, DyadicRoundTripAndInjective) {
  std::set<Dyadic> seen;
  std::vector<Position> all;
  for (int a = 1; a <= 3; ++a) {
    all.push_back(P({a}));
    for (int b = 0; b <= 3; ++b) {
      for (int c = 1; c <= 3; ++c) all.push_back(P({a, b, c}));
      if (b > 0) all.push_back(P({a, b}));
    }
  }
  for (const Position& p : all) {
    const Dyadic d = position_to_dyadic(p);
    EXPECT_TRUE(seen.insert(d).second) << format_position(p);
    EXPECT_EQ(dyadic_to_position(d), p);
  }
}

TEST(TreePositions, Examples) {
  const TreePositions tp = tree_positions(T("(.((..).))"));
  EXPECT_EQ(tp.dyads, (std::vector<Dyadic>{Dyadic(), Dyadic::half(), Dyadic(5, 3), Dyadic(3, 2), Dyadic::one()}));
  EXPECT_EQ(tp.positions, (std::vector<Position>{P({1}), P({2}), P({2, 1})}));
  for (int n = 0; n <= 6; ++n) {
    std::vector<Position> expected;
    for (int k = 1; k <= n; ++k) expected.push_back(P({k}));
    EXPECT_EQ(tree_positions(right_vine(n)).positions, expected);
  }
  EXPECT_EQ(tree_positions(Tree::leaf()).dyads, (std::vector<Dyadic>{Dyadic(), Dyadic::one()}));
  EXPECT_TRUE(tree_positions(Tree::leaf()).positions.empty());
}

TEST(TreePositions, MatchesIntervalOracleAndRoundTrips) {
  for (int n = 1; n <= 10; ++n) {
    for (const Tree& t : enumerate_trees(n)) {
      const TreePositions tp = tree_positions(t);
      EXPECT_EQ(tp.dyads, oracle_dyads(t)) << format_tree(t);
      ASSERT_EQ(tp.positions.size(), static_cast<std::size_t>(n - 1));
      for (std::size_t k = 0; k < tp.positions.size(); ++k) {
        EXPECT_EQ(position_to_dyadic(tp.positions[k]), tp.dyads[k]);
      }
      EXPECT_TRUE(tree_from_positions(tp.positions) == t) << format_tree(t);
    }
  }
}

TEST(TreePositions, Inverse) {
  EXPECT_TRUE(tree_from_positions({P({1}), P({2}), P({2, 1})}) == T("(.((..).))"));
  EXPECT_TRUE(tree_from_positions({}) == Tree::leaf());
  EXPECT_TRUE(tree_from_positions({P({1}), P({2}), P({3})}) == right_vine(3));
  EXPECT_THROW(tree_from_positions({P({2})}), DomainError);
}

TEST(Trees, EnumerationCountsAreCatalan) {
  for (int n = 1; n <= 9; ++n) {
    const std::vector<Tree> trees = enumerate_trees(n);
    EXPECT_EQ(trees.size(), catalan(n - 1));
    std::set<std::string> distinct;
    for (const Tree& t : trees) distinct.insert(format_tree(t));
    EXPECT_EQ(distinct.size(), trees.size());
  }
}

TEST(Dec, Examples) {
  EXPECT_EQ(dec(T("(.(..))")).size(), 2u);
  EXPECT_TRUE(dec(T("(.(..))"))[0].is_leaf());
  const std::vector<Tree> d = dec(T("((..).)"));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_TRUE(d[0] == T("(..)"));
  for (int n = 1; n <= 5; ++n) {
    const std::vector<Tree> v = dec(right_vine(n));
    EXPECT_EQ(v.size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(std::all_of(v.begin(), v.end(), [](const Tree& t) { return t.is_leaf(); }));
  }
  EXPECT_TRUE(dec(Tree::leaf()).empty());
}

TEST(Dec, RoundTripAndHeight) {
  for (int n = 1; n <= 8; ++n) {
    for (const Tree& t : enumerate_trees(n)) {
      EXPECT_TRUE(from_dec(dec(t)) == t);
      EXPECT_EQ(dec(t).size(), static_cast<std::size_t>(t.right_height()));
    }
  }
}

TEST(Action, Examples) {
  EXPECT_TRUE(act_tree(T("(.(.(..)))"), W("a1")) == T("((..)(..))"));
  EXPECT_TRUE(act_tree(T("(.(..))"), W("s1")) == T("(.(..))"));
  EXPECT_TRUE(act_tree(T("((..)(..))"), W("A1")) == T("(.(.(..)))"));
  EXPECT_TRUE(act_tree(T("((..)(..))"), W("s1")) == T("(.((..).))"));
  EXPECT_TRUE(act_tree(T("((..)(.(..)))"), W("s1")) == T("(.((..)(..)))"));
}

TEST(Action, PartialityNamesTheLetter) {
  try {
    act_tree(T("(.(..))"), W("s1 a2"));
    FAIL() << "expected partiality";
  } catch (const PartialityError& e) {
    EXPECT_EQ(e.letter_index(), 1u);
  }
  EXPECT_THROW(act_tree(Tree::leaf(), W("A1")), PartialityError);
  EXPECT_FALSE(action_defined(T("(.(..))"), W("a2")));
}

TEST(Action, InverseUndoes) {
  Gen g(11);
  for (int n = 0; n < 300; ++n) {
    const Word w = g.word(6, 3);
    const Tree t = minimal_input_tree(w);
    const Tree out = act_tree(t, w);
    EXPECT_TRUE(act_tree(out, invert(w)) == t) << format_word(w);
  }
}

TEST(Action, AWordsKeepLeafCount) {
  Gen g(12);
  for (int n = 0; n < 200; ++n) {
    const Word f = g.a_word(5, 3);
    const Tree t = minimal_input_tree(f);
    EXPECT_EQ(act_tree(t, f).leaf_count(), t.leaf_count());
  }
}

TEST(MinimalInput, Examples) {
  EXPECT_TRUE(minimal_input_tree(Word{}) == Tree::leaf());
  EXPECT_TRUE(minimal_input_tree(W("s1")) == T("(.(..))"));
  EXPECT_TRUE(minimal_input_tree(W("A1")) == T("((..).)"));
}

TEST(MinimalInput, MatchesExhaustiveSearch) {
  Gen g(13);
  for (int n = 0; n < 80; ++n) {
    const Word w = g.word(4, 2);
    const Tree t = minimal_input_tree(w);
    EXPECT_TRUE(action_defined(t, w));
    const std::optional<Tree> oracle = smallest_input(w, t.leaf_count());
    if (oracle) EXPECT_TRUE(*oracle == t) << format_word(w);
    // No tree with fewer leaves works.
    for (int m = 1; m < t.leaf_count(); ++m) {
      for (const Tree& u : enumerate_trees(m)) EXPECT_FALSE(action_defined(u, w)) << format_word(w);
    }
  }
}

TEST(MinimalInput, MonotoneDefinedness) {
  Gen g(14);
  for (int n = 0; n < 200; ++n) {
    const Word w = g.word(5, 3);
    Tree t = minimal_input_tree(w);
    for (int k = 0; k < 3; ++k) {
      const Tree bigger = split_leaf(t, g.uniform(0, t.leaf_count() - 1));
      EXPECT_TRUE(tree_contains(bigger, t));
      EXPECT_TRUE(action_defined(bigger, w)) << format_word(w);
      t = bigger;
    }
  }
}

TEST(Addresses, LeafAddressesGivePositions) {
  for (int n = 1; n <= 8; ++n) {
    for (const Tree& t : enumerate_trees(n)) {
      std::vector<Address> leaves = leaf_addresses(t);
      leaves.pop_back();
      std::vector<Position> derived;
      for (Address a : leaves) {
        for (std::size_t k = 1; k < a.size(); ++k) --a[k];
        while (a.size() > 1 && a.back() == 0) a.pop_back();
        derived.emplace_back(a);
      }
      std::sort(derived.begin(), derived.end(), [](const Position& x, const Position& y) {
        return position_to_dyadic(x) < position_to_dyadic(y);
      });
      EXPECT_EQ(derived, tree_positions(t).positions) << format_tree(t);
    }
  }
}

TEST(Addresses, LeafRangesAndSubtrees) {
  for (int n = 1; n <= 7; ++n) {
    for (const Tree& t : enumerate_trees(n)) {
      for (const Address& a : node_addresses(t)) {
        const auto sub = subtree_at(t, a);
        const auto range = leaf_range(t, a);
        ASSERT_TRUE(sub && range);
        EXPECT_EQ(range->count, sub->leaf_count());
        EXPECT_TRUE(tree_contains(t, extend_to_address(Tree::leaf(), a)));
      }
    }
  }
}
