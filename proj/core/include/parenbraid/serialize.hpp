#pragma once

#include <json.hpp>

#include "parenbraid/normal_forms.hpp"
#include "parenbraid/ordering.hpp"
#include "parenbraid/reversing.hpp"

namespace parenbraid {

// Every document carries "schema": 1; words use the text grammar of format_word.
nlohmann::json trace_json(const ReversalTrace& trace, const Word& output);
nlohmann::json right_reversal_json(const RightReversal& r, const ReversalTrace& trace);
nlohmann::json normal_form_json(const Word& w);
nlohmann::json comparison_json(const Comparison& c);

const char* outcome_symbol(Outcome o);

}  // namespace parenbraid
