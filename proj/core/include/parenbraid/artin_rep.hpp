#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "parenbraid/ld_structure.hpp"
#include "parenbraid/trees.hpp"
#include "parenbraid/words.hpp"

namespace parenbraid {

// Free generator x_s; s is a nonempty sequence of positive integers.
class FGen {
 public:
  explicit FGen(std::vector<int> s);

  const std::vector<int>& index() const noexcept { return s_; }
  int head() const noexcept { return s_.front(); }
  std::size_t depth() const noexcept { return s_.size(); }

  friend bool operator==(const FGen&, const FGen&) = default;
  friend auto operator<=>(const FGen&, const FGen&) = default;

 private:
  std::vector<int> s_;
};

struct FLetter {
  FGen gen;
  bool inverse = false;

  friend bool operator==(const FLetter&, const FLetter&) = default;
};

// A freely reduced word in the x_s; every constructor output is reduced.
class FWord {
 public:
  FWord() = default;
  explicit FWord(const std::vector<FLetter>& letters);
  static FWord gen(std::vector<int> s, bool inverse = false);

  const std::vector<FLetter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }

  FWord inverse() const;
  FWord& operator*=(const FWord& other);
  friend FWord operator*(FWord lhs, const FWord& rhs) { return lhs *= rhs; }
  friend bool operator==(const FWord&, const FWord&) = default;

 private:
  void append(const FLetter& x);
  std::vector<FLetter> letters_;
};

// Conjugation rack on the free group: x[y] = x y x^{-1}.
struct FreeGroupColours {
  using value_type = FWord;
  static constexpr bool is_rack = true;
  FWord bracket(const FWord& x, const FWord& y) const { return x * y * x.inverse(); }
  FWord inverse_bracket(const FWord& x, const FWord& z) const { return x.inverse() * z * x; }
  bool equal(const FWord& x, const FWord& y) const { return x == y; }
};

// Natural colour of the node at address (s, k): x_{s,k-1}^{-1} ... x_{s,1}^{-1} x_s, with x_() = 1.
FWord natural_colour(const Address& address);
ColouredTree<FWord> natural_colouring(const Tree& t);
// Colour of an inner node or leaf: the product of the leaf colours below it.
FWord node_colour(const ColouredTree<FWord>& t, const Address& address);

ColouredTree<FWord> act_F_coloured(const ColouredTree<FWord>& t, const Word& w);

// sigma_i, a_i, or the extra generator c_i, possibly inverted.
struct ExtendedLetter {
  enum class Kind { sigma, a, c };
  Kind kind = Kind::sigma;
  int index = 1;
  bool inverse = false;

  static ExtendedLetter from(const Letter& x);
};

FWord generator_image(const ExtendedLetter& g, const FGen& x);
FWord generator_image(const Letter& g, const FGen& x);

// Image of u under the automorphism of w, with aut(w_1 w_2) = aut(w_1) o aut(w_2):
// the last letter of w acts first.
FWord aut_apply(const Word& w, const FWord& u);
// The same map computed through natural colourings of trees.
FWord aut_apply_by_colouring(const Word& w, const FWord& u);

bool is_special_fword(const FWord& u);

// Every x_s with 1 <= |s| <= depth and entries in [1, max_entry], in length-lexicographic order.
std::vector<FGen> generators_up_to(int depth, int max_entry);

// Some x_s with |s| <= depth and entries <= max_index(w) + 2 that w moves.
std::optional<FGen> nontriviality_witness(const Word& w, int depth);

}  // namespace parenbraid
