#include "parenbraid/text.hpp"

#include <cctype>
#include <charconv>

#include "parenbraid/errors.hpp"

namespace parenbraid {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void advance() { ++pos_; }
  bool accept(std::string_view s) {
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int number() {
    const std::size_t start = pos_;
    while (!done() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a number");
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) fail("number out of range");
    return value;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<int> int_list(Cursor& c) {
  std::vector<int> out;
  c.skip_space();
  c.expect('(');
  for (;;) {
    c.skip_space();
    out.push_back(c.number());
    c.skip_space();
    if (c.peek() == ')') break;
    c.expect(',');
  }
  c.expect(')');
  return out;
}

std::string int_list_text(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(v[k]);
  }
  return out + ")";
}

Tree tree_at(Cursor& c) {
  c.skip_space();
  if (c.accept(".")) return Tree::leaf();
  c.expect('(');
  Tree l = tree_at(c);
  Tree r = tree_at(c);
  c.skip_space();
  c.expect(')');
  return Tree::node(std::move(l), std::move(r));
}

FGen fgen_at(Cursor& c) {
  c.skip_space();
  c.expect('x');
  try {
    return FGen(int_list(c));
  } catch (const DomainError& e) {
    c.fail(e.what());
  }
}

}  // namespace

Word parse_word(std::string_view text) {
  Cursor c(text);
  Word out;
  for (;;) {
    while (!c.done() && (is_space(c.peek()) || c.peek() == '.')) c.advance();
    if (c.done()) break;
    const char head = c.peek();
    bool inverse = false;
    Family family = Family::sigma;
    switch (head) {
      case 's': break;
      case 'S': inverse = true; break;
      case 'a': family = Family::a; break;
      case 'A': family = Family::a; inverse = true; break;
      default: c.fail(std::string("unexpected character '") + head + "'");
    }
    c.advance();
    const int index = c.number();
    if (index < 1) c.fail("letter index must be positive");
    if (c.accept("^-1")) inverse = !inverse;
    if (!c.done() && !is_space(c.peek()) && c.peek() != '.') c.fail("letters must be separated");
    out.push_back({family, index, inverse});
  }
  return out;
}

std::string format_word(const Word& w) {
  std::string out;
  for (const Letter& x : w) {
    if (!out.empty()) out += ' ';
    out += letter_name(x);
  }
  return out;
}

std::string display_word(const Word& w) { return w.empty() ? "1" : format_word(w); }

Tree parse_tree(std::string_view text) {
  Cursor c(text);
  Tree t = tree_at(c);
  c.skip_space();
  if (!c.done()) c.fail("trailing characters after tree");
  return t;
}

std::string format_tree(const Tree& t) {
  if (t.is_leaf()) return ".";
  return "(" + format_tree(t.left()) + format_tree(t.right()) + ")";
}

Position parse_position(std::string_view text) {
  Cursor c(text);
  std::vector<int> v = int_list(c);
  c.skip_space();
  if (!c.done()) c.fail("trailing characters after position");
  try {
    return Position(std::move(v));
  } catch (const DomainError& e) {
    c.fail(e.what());
  }
}

std::string format_position(const Position& p) { return int_list_text(p.entries()); }

FGen parse_fgen(std::string_view text) {
  Cursor c(text);
  FGen x = fgen_at(c);
  c.skip_space();
  if (!c.done()) c.fail("trailing characters after generator");
  return x;
}

std::string format_fgen(const FGen& x) { return "x" + int_list_text(x.index()); }

FWord parse_fword(std::string_view text) {
  Cursor c(text);
  std::vector<FLetter> letters;
  for (;;) {
    c.skip_space();
    if (c.done()) break;
    FGen x = fgen_at(c);
    const bool inverse = c.accept("^-1");
    letters.push_back({std::move(x), inverse});
  }
  return FWord(letters);
}

std::string format_fword(const FWord& u) {
  std::string out;
  for (const FLetter& x : u.letters()) {
    if (!out.empty()) out += ' ';
    out += format_fgen(x.gen);
    if (x.inverse) out += "^-1";
  }
  return out;
}

}  // namespace parenbraid
