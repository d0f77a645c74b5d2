#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "generators.hpp"
#include "parenbraid/render.hpp"
#include "parenbraid/reversing.hpp"
#include "parenbraid/serialize.hpp"
#include "parenbraid/text.hpp"

using namespace parenbraid;
using parenbraid::testing::Gen;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

Word W(const char* text) { return parse_word(text); }
Tree T(const char* text) { return parse_tree(text); }

}  // namespace

TEST(WordText, Grammar) {
  EXPECT_EQ(parse_word("s1 a2^-1"), (Word{Letter::sigma(1), Letter::a(2, true)}));
  EXPECT_EQ(parse_word("s1.a2^-1"), parse_word("s1 a2^-1"));
  EXPECT_EQ(parse_word("S3 A1"), (Word{Letter::sigma(3, true), Letter::a(1, true)}));
  EXPECT_EQ(parse_word("  s12  "), Word{Letter::sigma(12)});
  EXPECT_TRUE(parse_word("").empty());
  for (const char* bad : {"s1 xq", "s", "s0", "a1^", "a1^-2", "s1a2", "t1", "s-1"}) {
    EXPECT_THROW(parse_word(bad), ParseError) << bad;
  }
}

TEST(WordText, RoundTrip) {
  Gen g(71);
  for (int n = 0; n < 200; ++n) {
    const Word w = g.word(8, 12);
    EXPECT_EQ(parse_word(format_word(w)), w);
  }
  EXPECT_EQ(format_word(Word{}), "");
  EXPECT_EQ(display_word(Word{}), "1");
  EXPECT_EQ(format_word(W("S1 a2")), "s1^-1 a2");
}

TEST(TreeText, Grammar) {
  EXPECT_TRUE(parse_tree(".") == Tree::leaf());
  EXPECT_TRUE(parse_tree(" ( . ( . . ) ) ") == right_vine(2));
  for (const char* bad : {"", "(.", "(...)", "(.)", "x", ". ."}) EXPECT_THROW(parse_tree(bad), ParseError) << bad;
  for (int n = 1; n <= 6; ++n) {
    for (const Tree& t : enumerate_trees(n)) EXPECT_TRUE(parse_tree(format_tree(t)) == t);
  }
}

TEST(FreeGroupText, Grammar) {
  EXPECT_EQ(parse_fgen("x(2,1)"), FGen({2, 1}));
  EXPECT_EQ(format_fgen(FGen({3})), "x(3)");
  const FWord u = parse_fword("x(1) x(2)^-1 x(2,1)");
  EXPECT_EQ(u.size(), 3u);
  EXPECT_EQ(format_fword(u), "x(1) x(2)^-1 x(2,1)");
  EXPECT_TRUE(parse_fword("x(1) x(1)^-1").empty());
  for (const char* bad : {"x()", "x(0)", "y(1)", "x(1", "x(1,)"}) EXPECT_THROW(parse_fgen(bad), ParseError) << bad;
  EXPECT_EQ(parse_position("(1,0,2)"), Position({1, 0, 2}));
  EXPECT_EQ(format_position(Position({2, 1})), "(2,1)");
}

TEST(Render, EmptyDiagram) {
  const DiagramLayout l = layout_diagram(Tree::leaf(), Word{});
  EXPECT_TRUE(l.crossings.empty());
  ASSERT_EQ(l.x.size(), 1u);
  EXPECT_TRUE(l.x[0].empty());
  const std::string svg = render_svg(l);
  EXPECT_NE(svg.find("<rect"), std::string::npos);
  EXPECT_EQ(svg.find("<line"), std::string::npos);
}

TEST(Render, SingleCrossing) {
  const DiagramLayout l = layout_diagram(T("(.(..))"), W("s1"));
  ASSERT_EQ(l.crossings.size(), 1u);
  const Crossing& c = l.crossings.front();
  EXPECT_EQ(c.row, 0u);
  // Strand 0 starts at 0 and ends at 1/2; it passes over strand 1.
  EXPECT_EQ(c.over, 0u);
  EXPECT_EQ(c.under, 1u);
  EXPECT_EQ(l.x[0][0], Dyadic());
  EXPECT_EQ(l.x[1][0], Dyadic::half());
  EXPECT_EQ(l.x[0][1], Dyadic::half());
  EXPECT_EQ(l.x[1][1], Dyadic());
}

TEST(Render, PartialityNamesTheLetter) {
  try {
    render_diagram(T("(.(..))"), W("a2"), DiagramFormat::svg);
    FAIL();
  } catch (const PartialityError& e) {
    EXPECT_EQ(e.letter_index(), 0u);
    EXPECT_NE(std::string(e.what()).find("letter 1"), std::string::npos);
  }
}

TEST(Render, FinalAbscissaeArePositionsOfTheOutputTree) {
  Gen g(72);
  for (int n = 0; n < 150; ++n) {
    const Word w = g.word(6, 3);
    const Tree t = minimal_input_tree(w);
    const DiagramLayout l = layout_diagram(t, w);
    std::vector<Dyadic> finals = l.x.back();
    std::sort(finals.begin(), finals.end());
    std::vector<Dyadic> expected = tree_positions(act_tree(t, w)).dyads;
    expected.resize(expected.size() - 2);
    EXPECT_EQ(finals, expected) << format_word(w);
    for (std::size_t r = 0; r < l.trees.size(); ++r) {
      std::vector<Dyadic> row = l.x[r];
      std::sort(row.begin(), row.end());
      std::vector<Dyadic> want = tree_positions(l.trees[r]).dyads;
      want.resize(want.size() - 2);
      EXPECT_EQ(row, want);
    }
  }
}

TEST(Render, Deterministic) {
  const Word w = W("s2 a1 S1 A1 s3");
  const Tree t = minimal_input_tree(w);
  for (DiagramFormat f : {DiagramFormat::svg, DiagramFormat::ascii}) {
    EXPECT_EQ(render_diagram(t, w, f), render_diagram(t, w, f));
  }
  const std::string svg = render_diagram(t, w, DiagramFormat::svg);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(render_diagram(T("(.(..))"), W("s1"), DiagramFormat::ascii),
            "+-------+\n"
            "| |  |  |\n"
            "|  \\/   |\n"
            "|   \\   | s1\n"
            "|  /\\   |\n"
            "| |  |  |\n"
            "+-------+\n");
}

TEST(Render, AtomicWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "parenbraid_test_render";
  std::filesystem::create_directories(dir);
  const auto path = dir / "d.svg";
  write_atomically(path, "first");
  write_atomically(path, "second");
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(content, "second");
  EXPECT_FALSE(std::filesystem::exists(dir / "d.svg.tmp"));
  std::filesystem::remove_all(dir);
}

TEST(Serialize, NormalFormDocument) {
  const nlohmann::json j = normal_form_json(W("A1 S3 s1 a1"));
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("fraction").at("numerator"), "s3 a1");
  EXPECT_EQ(j.at("fraction").at("denominator"), "s1 a1");
  const nlohmann::json c = comparison_json(Comparison{Outcome::less, W("s1")});
  EXPECT_EQ(c.at("outcome"), "<");
  EXPECT_EQ(c.at("certificate"), "s1");
}

TEST(Serialize, TraceReplays) {
  ReversalTrace trace;
  const RightReversal r = right_reverse(W("S4 a2 S2 a1"), default_budget(), &trace);
  const nlohmann::json j = right_reversal_json(r, trace);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("steps").size(), 4u);
  EXPECT_EQ(j.at("outcome"), "done");
}

TEST(Cli, EqualityAndComparison) {
  CliRun r = run({"eq", "s1 s2 s1", "s2 s1 s2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "equal\n");
  r = run({"eq", "s1", "s2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "not equal\n");
  r = run({"cmp", "s2", "s1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 2), "<\n");
  r = run({"eq", "s1 xq", "s1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"act", "--tree", "(.(..))", "a2"}).code, 1);
  EXPECT_EQ(run({"act", "--tree", "(.(..", "a1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"reverse", "--side", "up", "s1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Commands) {
  CliRun r = run({"act", "--tree", "(.(.(..)))", "a1"});
  EXPECT_EQ(r.out, "((..)(..))\n");
  r = run({"aut", "a2 s1", "--on", "x(1)"});
  EXPECT_EQ(r.out, "x(1) x(2) x(3) x(1)^-1\n");
  r = run({"aut", "s1 S1", "--on", "x(2,1)"});
  EXPECT_EQ(r.out, "x(2,1)\n");
  r = run({"reverse", "--side", "right", "S4 a2 S2 a1"});
  EXPECT_EQ(r.out, "a2 s1 s2 a3 s2^-1 s1^-1\n");
  r = run({"reverse", "--side", "right", "A1 a2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("stuck"), std::string::npos);
  r = run({"reverse", "--side", "left", "s1 A1"});
  EXPECT_EQ(r.out, "a2^-1 s1 s2\n");
  r = run({"reverse", "--side", "left", "--json", "s1 A1"});
  EXPECT_EQ(nlohmann::json::parse(r.out).at("schema"), 1);
  r = run({"pure", "s1 s1"});
  EXPECT_EQ(r.out, "pure\n");
  r = run({"cube", "--side", "right", "--max-index", "2"});
  EXPECT_EQ(r.out, "64 triples checked, 0 failures\n");
  r = run({"special", "--enumerate", "2"});
  EXPECT_NE(r.out.find("count 3"), std::string::npos);
  r = run({"nf", "s1 a1 S1"});
  EXPECT_EQ(nlohmann::json::parse(r.out).at("schema"), 1);
}

TEST(Cli, DrawToFile) {
  const auto path = std::filesystem::temp_directory_path() / "parenbraid_cli_draw.txt";
  const CliRun r = run({"draw", "--tree", "(.(..))", "s1", "-o", path.string(), "--format", "ascii"});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(content, render_diagram(T("(.(..))"), W("s1"), DiagramFormat::ascii));
  std::filesystem::remove(path);
}
