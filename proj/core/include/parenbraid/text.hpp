#pragma once

#include <string>
#include <string_view>

#include "parenbraid/artin_rep.hpp"
#include "parenbraid/trees.hpp"
#include "parenbraid/words.hpp"

namespace parenbraid {

// Tokens separated by whitespace or '.'; a token is s<digits> or a<digits> with an optional "^-1".
// Upper-case S and A denote inverse letters. The empty string is the empty word.
Word parse_word(std::string_view text);
// Space-separated tokens; the empty word formats as "".
std::string format_word(const Word& w);
// As format_word, but the empty word shows as "1".
std::string display_word(const Word& w);

// "." for a leaf, "(" left right ")" for a node; whitespace is ignored.
Tree parse_tree(std::string_view text);
std::string format_tree(const Tree& t);

Position parse_position(std::string_view text);
std::string format_position(const Position& p);

// "x(2,1)".
FGen parse_fgen(std::string_view text);
std::string format_fgen(const FGen& x);
// "x(1) x(2)^-1 x(2,1)"; the empty string is the identity.
FWord parse_fword(std::string_view text);
std::string format_fword(const FWord& u);

}  // namespace parenbraid
