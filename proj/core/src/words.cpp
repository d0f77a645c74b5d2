#include "parenbraid/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "parenbraid/errors.hpp"

namespace parenbraid {

Letter Letter::sigma(int i, bool inverted) {
  if (i < 1) throw DomainError("letter index must be at least 1");
  return {Family::sigma, i, inverted};
}

Letter Letter::a(int i, bool inverted) {
  if (i < 1) throw DomainError("letter index must be at least 1");
  return {Family::a, i, inverted};
}

Word& Word::operator*=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

bool Word::is_positive() const noexcept {
  return std::all_of(begin(), end(), [](const Letter& x) { return x.positive(); });
}

bool Word::is_sigma_word() const noexcept {
  return std::all_of(begin(), end(), [](const Letter& x) { return x.is_sigma(); });
}

bool Word::is_a_word() const noexcept {
  return std::all_of(begin(), end(), [](const Letter& x) { return x.is_a(); });
}

namespace {

// 0 for a^{-1}, 1 for sigma^{+-1}, 2 for a.
int tidy_rank(const Letter& x) {
  if (x.is_sigma()) return 1;
  return x.inverse ? 0 : 2;
}

int transpose(int i, int k) {
  if (k == i) return i + 1;
  if (k == i + 1) return i;
  return k;
}

Word require_sigma_word(const Word& w) {
  if (!w.is_sigma_word()) throw DomainError("expected a sigma-word");
  return w;
}

// db_k of a single sigma letter.
Word double_letter(const Letter& x, int k) {
  const int i = x.index;
  Word positive;
  if (!x.inverse) {
    if (k < i) {
      positive = {Letter::sigma(i + 1)};
    } else if (k == i) {
      positive = {Letter::sigma(i + 1), Letter::sigma(i)};
    } else if (k == i + 1) {
      positive = {Letter::sigma(i), Letter::sigma(i + 1)};
    } else {
      positive = {Letter::sigma(i)};
    }
    return positive;
  }
  // db_k(sigma_i^{-1}) = db_{sigma_i[k]}(sigma_i)^{-1}.
  return invert(double_letter(x.inverted(), transpose(i, k)));
}

}  // namespace

bool Word::is_tidy() const noexcept {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (tidy_rank(letters_[i - 1]) > tidy_rank(letters_[i])) return false;
  }
  return true;
}

int Word::max_index() const noexcept {
  int m = 0;
  for (const auto& x : letters_) m = std::max(m, x.index);
  return m;
}

Word Word::slice(std::size_t first, std::size_t count) const {
  first = std::min(first, letters_.size());
  count = std::min(count, letters_.size() - first);
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(first),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

std::string letter_name(const Letter& x) {
  std::string s = x.is_sigma() ? "s" : "a";
  s += std::to_string(x.index);
  if (x.inverse) s += "^-1";
  return s;
}

Word sigma_word(std::initializer_list<int> signed_indices) {
  Word w;
  for (int s : signed_indices) w.push_back(Letter::sigma(std::abs(s), s < 0));
  return w;
}

Word a_word(std::initializer_list<int> signed_indices) {
  Word w;
  for (int s : signed_indices) w.push_back(Letter::a(std::abs(s), s < 0));
  return w;
}

Word shift(const Word& w, int d) {
  if (d < 0) throw DomainError("shift amount must be nonnegative");
  std::vector<Letter> out(w.begin(), w.end());
  for (auto& x : out) x.index += d;
  return Word(std::move(out));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverted());
  return Word(std::move(out));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& x : w) {
    if (!out.empty() && out.back() == x.inverted()) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return Word(std::move(out));
}

int strand_image(const Word& w, int k) {
  require_sigma_word(w);
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) k = transpose(it->index, k);
  return k;
}

int strand_destination(const Word& w, int k) {
  require_sigma_word(w);
  for (const auto& x : w) k = transpose(x.index, k);
  return k;
}

Word double_strand(const Word& w, int k) {
  require_sigma_word(w);
  if (k < 1) throw DomainError("strand index must be at least 1");
  Word out;
  for (const auto& x : w) {
    out *= double_letter(x, k);
    k = transpose(x.index, k);
  }
  return out;
}

std::uint64_t lambda_weight(const Word& w) {
  if (!w.is_positive()) throw DomainError("lambda weight needs a positive word");
  // Slot i holds n_i; slots past the end are implicitly 1.
  std::vector<std::uint64_t> n(static_cast<std::size_t>(w.max_index()) + 2, 1);
  std::uint64_t total = 0;
  for (const auto& x : w) {
    const auto i = static_cast<std::size_t>(x.index - 1);
    if (x.is_a()) {
      total += 1;
      n[i] += n[i + 1];
      n.erase(n.begin() + static_cast<std::ptrdiff_t>(i + 1));
      n.push_back(1);
    } else {
      total += n[i] * n[i + 1];
      std::swap(n[i], n[i + 1]);
    }
  }
  return total;
}

std::optional<int> is_sigma_positive(const Word& w) {
  int lowest = 0;
  bool negative_seen = false;
  for (const auto& x : w) {
    if (!x.is_sigma()) continue;
    if (lowest == 0 || x.index < lowest) {
      lowest = x.index;
      negative_seen = x.inverse;
    } else if (x.index == lowest) {
      negative_seen = negative_seen || x.inverse;
    }
  }
  if (lowest == 0 || negative_seen) return std::nullopt;
  return lowest;
}

Word make_tidy(const Word& w) {
  std::vector<Letter> cur(w.begin(), w.end());
  std::size_t i = 0;
  while (i + 1 < cur.size()) {
    const Letter x = cur[i];
    const Letter y = cur[i + 1];
    if (tidy_rank(x) <= tidy_rank(y)) {
      ++i;
      continue;
    }
    Word replacement;
    if (x.is_a() && y.is_sigma()) {
      // a_k s = db_k(s) a_{s[k]}
      replacement = double_letter(y, x.index);
      replacement.push_back(Letter::a(transpose(y.index, x.index)));
    } else if (x.is_sigma() && y.is_a()) {
      // s a_m^{-1} = a_{s[m]}^{-1} db_{s[m]}(s)
      const int m = transpose(x.index, y.index);
      replacement.push_back(Letter::a(m, true));
      replacement *= double_letter(x, m);
    } else {
      // a_p a_q^{-1} through the Thompson relations.
      const int p = x.index;
      const int q = y.index;
      if (p > q) {
        replacement = {Letter::a(q, true), Letter::a(p + 1)};
      } else if (p < q) {
        replacement = {Letter::a(q + 1, true), Letter::a(p)};
      }
    }
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.begin() + static_cast<std::ptrdiff_t>(i + 2));
    cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(i), replacement.begin(), replacement.end());
    i = i > 0 ? i - 1 : 0;
  }
  return Word(std::move(cur));
}

}  // namespace parenbraid
