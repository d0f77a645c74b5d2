#include "parenbraid/serialize.hpp"

#include "parenbraid/text.hpp"

namespace parenbraid {

namespace {

using nlohmann::json;

json words_json(const std::vector<Word>& ws) {
  json out = json::array();
  for (const Word& w : ws) out.push_back(format_word(w));
  return out;
}

json steps_json(const ReversalTrace& trace) {
  json steps = json::array();
  for (const ReversalStep& s : trace.steps) {
    steps.push_back({{"position", s.position},
                     {"pair", format_word(Word{s.first, s.second})},
                     {"replacement", format_word(s.replacement)}});
  }
  return steps;
}

json decomposition_json(const Word& w) {
  const SpecialDecomposition d = decompose_positive(w);
  return {{"factors", words_json(d.factors)},
          {"annotation", {{"braids", words_json(d.braids)}, {"thompson", words_json(d.thompson)}}}};
}

}  // namespace

const char* outcome_symbol(Outcome o) {
  switch (o) {
    case Outcome::less: return "<";
    case Outcome::equal: return "=";
    case Outcome::greater: return ">";
  }
  return "?";
}

json trace_json(const ReversalTrace& trace, const Word& output) {
  return {{"schema", 1}, {"input", format_word(trace.input)}, {"output", format_word(output)}, {"steps", steps_json(trace)}};
}

json right_reversal_json(const RightReversal& r, const ReversalTrace& trace) {
  json out = {{"schema", 1}, {"input", format_word(trace.input)}, {"steps", steps_json(trace)}};
  switch (r.kind) {
    case RightReversal::Kind::done:
      out["outcome"] = "done";
      out["numerator"] = format_word(r.numerator);
      out["denominator"] = format_word(r.denominator);
      break;
    case RightReversal::Kind::stuck:
      out["outcome"] = "stuck";
      out["position"] = r.stuck_position;
      out["pair"] = format_word(Word{r.stuck_first, r.stuck_second});
      break;
    case RightReversal::Kind::budget_exceeded:
      out["outcome"] = "budget_exceeded";
      out["steps_taken"] = r.steps;
      break;
  }
  out["current"] = format_word(r.current);
  return out;
}

json normal_form_json(const Word& w) {
  const FractionForm f = fraction_form(w);
  return {{"schema", 1},
          {"input", format_word(w)},
          {"fraction",
           {{"numerator", format_word(f.numerator)},
            {"denominator", format_word(f.denominator)},
            {"annotation",
             {{"f", format_word(f.f)}, {"beta", format_word(f.beta)}, {"gamma", format_word(f.gamma)}, {"g", format_word(f.g)}}}}},
          {"zs",
           {{"numerator", {{"braid", format_word(f.beta)}, {"thompson", format_word(f.f)}}},
            {"denominator", {{"braid", format_word(f.gamma)}, {"thompson", format_word(f.g)}}}}},
          {"special", {{"numerator", decomposition_json(f.numerator)}, {"denominator", decomposition_json(f.denominator)}}}};
}

json comparison_json(const Comparison& c) {
  json out = {{"schema", 1}, {"outcome", outcome_symbol(c.outcome)}};
  if (c.certificate) out["certificate"] = format_word(*c.certificate);
  return out;
}

}  // namespace parenbraid
