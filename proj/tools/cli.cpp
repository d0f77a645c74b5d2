#include "cli.hpp"

#include <CLI11.hpp>

#include "parenbraid/artin_rep.hpp"
#include "parenbraid/errors.hpp"
#include "parenbraid/ld_structure.hpp"
#include "parenbraid/normal_forms.hpp"
#include "parenbraid/ordering.hpp"
#include "parenbraid/render.hpp"
#include "parenbraid/reversing.hpp"
#include "parenbraid/serialize.hpp"
#include "parenbraid/text.hpp"

namespace parenbraid::cli {

namespace {

std::vector<Letter> letters_up_to(int n) {
  std::vector<Letter> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back(Letter::sigma(i));
    out.push_back(Letter::a(i));
  }
  return out;
}

const char* cube_status(CubeCheck::Status s) {
  switch (s) {
    case CubeCheck::Status::holds: return "holds";
    case CubeCheck::Status::fails: return "fails";
    case CubeCheck::Status::vacuous: return "vacuous";
    case CubeCheck::Status::indeterminate: return "indeterminate";
  }
  return "?";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parenthesized braid toolkit"};
  app.require_subcommand(1);

  std::string w1;
  std::string w2;
  std::string tree_text;
  std::string side = "left";
  std::string on;
  std::string file;
  std::string format = "svg";
  std::string mode = "both";
  int max_index = 3;
  int depth = 3;
  bool as_json = false;

  auto* eq = app.add_subcommand("eq", "Decide whether two words represent the same element");
  eq->add_option("w1", w1)->required();
  eq->add_option("w2", w2)->required();

  auto* cmp_cmd = app.add_subcommand("cmp", "Compare two elements in the linear order");
  cmp_cmd->add_option("w1", w1)->required();
  cmp_cmd->add_option("w2", w2)->required();

  auto* nf = app.add_subcommand("nf", "Fraction, Zappa-Szep and special decompositions as JSON");
  nf->add_option("w", w1)->required();

  auto* rev = app.add_subcommand("reverse", "Left or right reversing");
  rev->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  rev->add_flag("--json", as_json, "Print the trace as JSON");
  rev->add_option("w", w1)->required();

  auto* act = app.add_subcommand("act", "Act on a tree");
  act->add_option("--tree", tree_text)->required();
  act->add_option("w", w1)->required();

  auto* aut = app.add_subcommand("aut", "Apply the free group automorphism of a word");
  aut->add_option("w", w1)->required();
  aut->add_option("--on", on)->required();

  auto* draw = app.add_subcommand("draw", "Render a diagram");
  draw->add_option("--tree", tree_text)->required();
  draw->add_option("w", w1)->required();
  draw->add_option("-o,--output", file);
  draw->add_option("--format", format)->check(CLI::IsMember({"svg", "ascii"}));

  auto* cube = app.add_subcommand("cube", "Check the cube condition on all letter triples");
  cube->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  cube->add_option("--max-index", max_index)->check(CLI::Range(1, 12));

  auto* pure = app.add_subcommand("pure", "Decide purity");
  pure->add_option("w", w1)->required();

  auto* special = app.add_subcommand("special", "Enumerate special elements");
  special->add_option("--enumerate", depth)->required()->check(CLI::Range(1, 8));
  special->add_option("--mode", mode)->check(CLI::IsMember({"both", "bracket", "circ"}));

  std::vector<const char*> argv{"parenbraid"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eq->parsed()) {
      out << (word_problem(parse_word(w1), parse_word(w2)) ? "equal" : "not equal") << "\n";
    } else if (cmp_cmd->parsed()) {
      const Comparison c = cmp(parse_word(w1), parse_word(w2));
      out << outcome_symbol(c.outcome) << "\n";
      if (c.certificate) out << "certificate: " << display_word(*c.certificate) << "\n";
    } else if (nf->parsed()) {
      out << normal_form_json(parse_word(w1)).dump(2) << "\n";
    } else if (rev->parsed()) {
      const Word w = parse_word(w1);
      ReversalTrace trace;
      if (side == "left") {
        const Fraction f = left_reverse(w, &trace);
        const Word result = invert(f.numerator) * f.denominator;
        if (as_json) {
          out << trace_json(trace, result).dump(2) << "\n";
        } else {
          out << display_word(result) << "\n";
        }
      } else {
        const RightReversal r = right_reverse(w, default_budget(), &trace);
        if (as_json) {
          out << right_reversal_json(r, trace).dump(2) << "\n";
        } else if (r.kind == RightReversal::Kind::done) {
          out << display_word(r.numerator * invert(r.denominator)) << "\n";
        } else if (r.kind == RightReversal::Kind::stuck) {
          out << "stuck at " << format_word(Word{r.stuck_first, r.stuck_second}) << " (position " << r.stuck_position
              << ")\n";
        } else {
          out << "budget exceeded after " << r.steps << " steps\n";
        }
      }
    } else if (act->parsed()) {
      out << format_tree(act_tree(parse_tree(tree_text), parse_word(w1))) << "\n";
    } else if (aut->parsed()) {
      const FWord image = aut_apply(parse_word(w1), parse_fword(on));
      out << (image.empty() ? "1" : format_fword(image)) << "\n";
    } else if (draw->parsed()) {
      const std::string bytes = render_diagram(parse_tree(tree_text), parse_word(w1),
                                               format == "svg" ? DiagramFormat::svg : DiagramFormat::ascii);
      if (file.empty()) {
        out << bytes;
      } else {
        write_atomically(file, bytes);
      }
    } else if (cube->parsed()) {
      const Side s = side == "left" ? Side::left : Side::right;
      const auto letters = letters_up_to(max_index);
      std::size_t checked = 0;
      std::size_t failures = 0;
      for (const Letter& x : letters) {
        for (const Letter& y : letters) {
          for (const Letter& z : letters) {
            const CubeCheck c = cube_condition(s, x, y, z);
            ++checked;
            if (!c.passed()) {
              ++failures;
              out << cube_status(c.status) << ": " << format_word(Word{x, y, z}) << "\n";
            }
          }
        }
      }
      out << checked << " triples checked, " << failures << " failures\n";
    } else if (pure->parsed()) {
      out << (is_pure(parse_word(w1)) ? "pure" : "not pure") << "\n";
    } else if (special->parsed()) {
      const SpecialMode m = mode == "both" ? SpecialMode::both
                            : mode == "bracket" ? SpecialMode::bracket_only
                                                : SpecialMode::circ_only;
      const SpecialEnumeration e = enumerate_special(depth, m, 8);
      for (const Word& w : e.elements) out << display_word(w) << "\n";
      out << "count " << e.elements.size() << ", expressions " << e.expressions << ", collisions " << e.collisions
          << "\n";
    }
  } catch (const PartialityError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace parenbraid::cli
