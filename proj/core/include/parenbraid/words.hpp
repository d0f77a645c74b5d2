#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace parenbraid {

enum class Family : std::uint8_t { sigma, a };

// A generator sigma_i or a_i, possibly inverted. Indices start at 1.
struct Letter {
  Family family = Family::sigma;
  int index = 1;
  bool inverse = false;

  static Letter sigma(int i, bool inverted = false);
  static Letter a(int i, bool inverted = false);

  bool is_sigma() const noexcept { return family == Family::sigma; }
  bool is_a() const noexcept { return family == Family::a; }
  bool positive() const noexcept { return !inverse; }
  Letter inverted() const noexcept { return {family, index, !inverse}; }
  Letter positive_part() const noexcept { return {family, index, false}; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A finite sequence of letters; the empty word stands for 1.
class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }

  void push_back(Letter x) { letters_.push_back(x); }
  Word& operator*=(const Word& other);

  bool is_positive() const noexcept;
  bool is_sigma_word() const noexcept;
  bool is_a_word() const noexcept;
  bool is_tidy() const noexcept;
  int max_index() const noexcept;  // 0 for the empty word

  // Subword [first, first + count).
  Word slice(std::size_t first, std::size_t count) const;

  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Text name of a letter: "s2", "a1^-1".
std::string letter_name(const Letter& x);

Word sigma_word(std::initializer_list<int> signed_indices);
Word a_word(std::initializer_list<int> signed_indices);

Word shift(const Word& w, int d = 1);
Word invert(const Word& w);
Word free_reduce(const Word& w);

// Strand bookkeeping on sigma-words (inverse letters allowed).
// strand_image(w, k) = w[k]: initial position of the strand ending at k.
int strand_image(const Word& w, int k);
// strand_destination(w, k) = w^{-1}[k]: final position of the strand starting at k.
int strand_destination(const Word& w, int k);
// db_k(w): w with the strand starting at position k doubled.
Word double_strand(const Word& w, int k);

std::uint64_t lambda_weight(const Word& w);
std::optional<int> is_sigma_positive(const Word& w);

// Equivalent tidy word: a^{-1}-letters, then sigma-letters, then a-letters.
Word make_tidy(const Word& w);

}  // namespace parenbraid
