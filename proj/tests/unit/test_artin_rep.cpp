#include <gtest/gtest.h>

#include "generators.hpp"
#include "parenbraid/artin_rep.hpp"
#include "parenbraid/reversing.hpp"
#include "parenbraid/text.hpp"

using namespace parenbraid;
using parenbraid::testing::Gen;

namespace {

Word W(const char* text) { return parse_word(text); }
FWord X(std::vector<int> s, bool inverse = false) { return FWord::gen(std::move(s), inverse); }

FWord random_fword(Gen& g, int length, int depth, int max_entry) {
  std::vector<FLetter> letters;
  for (int k = 0; k < length; ++k) {
    std::vector<int> s;
    for (int d = g.uniform(1, depth); d > 0; --d) s.push_back(g.uniform(1, max_entry));
    letters.push_back({FGen(s), g.coin()});
  }
  return FWord(letters);
}

std::vector<int> extend(std::vector<int> s, Gen& g, int max_entry) {
  for (int d = g.uniform(1, 2); d > 0; --d) s.push_back(g.uniform(1, max_entry));
  return s;
}

}  // namespace

TEST(FreeWords, ReducedOnConstruction) {
  const FWord u = X({1}) * X({2}) * X({2}, true) * X({1, 1});
  EXPECT_EQ(u, X({1}) * X({1, 1}));
  EXPECT_TRUE((u * u.inverse()).empty());
  EXPECT_THROW(FGen({0}), DomainError);
  EXPECT_THROW(FGen({}), DomainError);
}

TEST(NaturalColours, Examples) {
  EXPECT_EQ(natural_colour({2, 1, 1}), X({2, 1}));
  EXPECT_EQ(natural_colour({2, 2}), X({2, 1}, true) * X({2}));
  EXPECT_EQ(natural_colour({1}), FWord());
  EXPECT_EQ(natural_colour({3}), X({2}, true) * X({1}, true));
  EXPECT_EQ(natural_colour({2, 3}), X({2, 2}, true) * X({2, 1}, true) * X({2}));
}

TEST(NaturalColours, NodeColoursAreNatural) {
  for (int n = 1; n <= 7; ++n) {
    for (const Tree& t : enumerate_trees(n)) {
      const ColouredTree<FWord> c = natural_colouring(t);
      for (const Address& a : node_addresses(t)) EXPECT_EQ(node_colour(c, a), natural_colour(a)) << format_tree(t);
    }
  }
}

TEST(ColouredAction, Examples) {
  const auto start = natural_colouring(right_vine(2));
  const auto out = act_F_coloured(start, W("s1"));
  EXPECT_EQ(out.colours[0], X({1}) * X({2}) * X({1}, true));
  EXPECT_EQ(out.colours[1], X({1}));
  const auto glued = act_F_coloured(start, W("a1"));
  EXPECT_EQ(glued.colours, start.colours);

  const Tree t = parse_tree("(.(.(..)))");
  const auto fig = act_F_coloured(natural_colouring(t), W("a2 s1"));
  // The node naturally coloured x_1 in the output tree.
  const Address first{1, 1};
  EXPECT_EQ(natural_colour(first), X({1}));
  EXPECT_EQ(node_colour(fig, first), X({1}) * X({2}) * X({3}) * X({1}, true));
}

TEST(Automorphisms, FigureValues) {
  EXPECT_EQ(aut_apply(W("a2 s1"), X({1})), X({1}) * X({2}) * X({3}) * X({1}, true));
  EXPECT_EQ(aut_apply_by_colouring(W("a2 s1"), X({1})), X({1}) * X({2}) * X({3}) * X({1}, true));
  // Both routes give x_1 x_3 x_1^{-1} for the second value of the figure.
  const FWord second = aut_apply(W("a2 s1"), X({1, 1}, true) * X({1}));
  EXPECT_EQ(second, X({1}) * X({3}) * X({1}, true));
  EXPECT_EQ(aut_apply_by_colouring(W("a2 s1"), X({1, 1}, true) * X({1})), second);
}

TEST(Automorphisms, GeneratorExamples) {
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(aut_apply(Word{Letter::sigma(i)}, X({i, 2})), X({i}) * X({i + 1, 2}) * X({i}, true));
    EXPECT_EQ(aut_apply(Word{Letter::sigma(i)}, X({i + 1, 1})), X({i, 1}));
    EXPECT_EQ(aut_apply(Word{Letter::a(i)}, X({i})), X({i}) * X({i + 1}));
    EXPECT_EQ(generator_image(Letter::a(i, true), FGen({i + 1})), X({i, 1}, true) * X({i}));
    const ExtendedLetter c{ExtendedLetter::Kind::c, i, false};
    EXPECT_EQ(generator_image(c, FGen({i})), X({i}, true));
    EXPECT_EQ(generator_image(c, FGen({i + 2, 1})), X({i, 2, 1}));
    EXPECT_EQ(generator_image(Letter::sigma(i), FGen({i + 3, 2})), X({i + 3, 2}));
  }
  const FWord u = X({1}) * X({2, 1}, true);
  EXPECT_EQ(aut_apply(Word{}, u), u);
}

TEST(Automorphisms, RoutesAgree) {
  Gen g(61);
  const std::vector<FGen> gens = generators_up_to(3, 4);
  for (int n = 0; n < 200; ++n) {
    const Word w = g.word(8, 3);
    const FGen& x = g.pick(gens);
    const FWord u = FWord::gen(x.index());
    EXPECT_EQ(aut_apply(w, u), aut_apply_by_colouring(w, u)) << format_word(w) << " on " << format_fgen(x);
  }
}

TEST(Automorphisms, ProductsAndInverses) {
  Gen g(62);
  for (int n = 0; n < 200; ++n) {
    const Word w = g.word(5, 3);
    const Word v = g.word(5, 3);
    const FWord u = random_fword(g, 4, 2, 4);
    EXPECT_EQ(aut_apply(w * v, u), aut_apply(w, aut_apply(v, u)));
    EXPECT_EQ(aut_apply(invert(w), aut_apply(w, u)), u);
    const FWord u2 = random_fword(g, 3, 2, 4);
    EXPECT_EQ(aut_apply(w, u * u2), aut_apply(w, u) * aut_apply(w, u2));
  }
}

TEST(Automorphisms, RelationsInduceTheSameMap) {
  const std::vector<FGen> gens = generators_up_to(3, 6);
  for (const Relation& r : defining_relations(4, 3)) {
    for (const FGen& x : gens) {
      const FWord u = FWord::gen(x.index());
      EXPECT_EQ(aut_apply(r.lhs, u), aut_apply(r.rhs, u)) << r.schema;
    }
  }
}

TEST(Automorphisms, FinalInverseLetterSurvivesCrossings) {
  Gen g(63);
  for (int n = 0; n < 300; ++n) {
    const int i = g.uniform(1, 3);
    const FWord u = random_fword(g, 4, 2, 4) * X({i}, true);
    if (u.empty() || !(u.letters().back() == FLetter{FGen({i}), true})) continue;
    const FWord image = aut_apply(Word{Letter::sigma(i)}, u);
    ASSERT_FALSE(image.empty());
    EXPECT_EQ(image.letters().back(), (FLetter{FGen({i}), true}));
    const int j = g.uniform(i + 1, i + 3);
    const FWord other = aut_apply(Word{Letter::sigma(j, g.coin())}, u);
    ASSERT_FALSE(other.empty());
    EXPECT_EQ(other.letters().back(), (FLetter{FGen({i}), true}));
  }
}

TEST(SpecialWords, Examples) {
  EXPECT_TRUE(is_special_fword(X({1}, true)));
  EXPECT_TRUE(is_special_fword(X({1}) * X({2}, true) * X({2, 1})));
  EXPECT_FALSE(is_special_fword(X({1})));
  EXPECT_FALSE(is_special_fword(X({2}, true) * X({1, 1})));
}

TEST(SpecialWords, PreservedByInverseGluing) {
  Gen g(64);
  for (int n = 0; n < 300; ++n) {
    std::vector<int> s{g.uniform(1, 3)};
    if (g.coin()) s.push_back(g.uniform(1, 3));
    FWord u = random_fword(g, 3, 2, 3) * FWord::gen(s, true);
    for (int r = g.uniform(0, 2); r > 0; --r) u *= FWord::gen(extend(s, g, 3));
    if (!is_special_fword(u)) continue;
    const int i = g.uniform(1, 3);
    EXPECT_TRUE(is_special_fword(aut_apply(Word{Letter::a(i, true)}, u))) << format_fword(u) << " i=" << i;
  }
}

TEST(Witnesses, Examples) {
  for (int depth = 1; depth <= 3; ++depth) EXPECT_FALSE(nontriviality_witness(W("a1 s2 A1 S3"), depth));
  auto x = nontriviality_witness(W("s1"), 2);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, FGen({1}));
  EXPECT_EQ(aut_apply(W("s1"), X({1})), X({1}) * X({2}) * X({1}, true));
  x = nontriviality_witness(W("a1"), 2);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, FGen({1}));
}

TEST(Witnesses, AgreeWithTheWordProblem) {
  Gen g(65);
  const auto relations = defining_relations(3, 3);
  for (int n = 0; n < 150; ++n) {
    const Word w = g.word(8, 3);
    EXPECT_EQ(nontriviality_witness(w, 4).has_value(), !word_problem(w, Word{})) << format_word(w);
    const Word v = g.word(4, 3);
    const Word trivial = v * invert(parenbraid::testing::equivalent_variant(g, v, relations, 3));
    EXPECT_FALSE(nontriviality_witness(trivial, 4).has_value()) << format_word(trivial);
  }
}
