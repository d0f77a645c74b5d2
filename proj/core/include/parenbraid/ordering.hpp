#pragma once

#include <optional>
#include <vector>

#include "parenbraid/dyadic.hpp"
#include "parenbraid/trees.hpp"
#include "parenbraid/words.hpp"

namespace parenbraid {

enum class Outcome { less, equal, greater };

Outcome reverse(Outcome o);

// When present, the certificate is a tidy sigma_i-positive word representing x^{-1} x' (less)
// or x'^{-1} x (greater).
struct Comparison {
  Outcome outcome = Outcome::equal;
  std::optional<Word> certificate;
};

// t precedes t' when Dyad(t) is lexicographically larger than Dyad(t').
Outcome tree_cmp(const Tree& t, const Tree& u);
// The same order computed on dyadic endpoint sequences.
Outcome tree_cmp_dyadic(const Tree& t, const Tree& u);

// Increasing PL homeomorphism of [0, 1] with dyadic breakpoints and power-of-two slopes.
class PLMap {
 public:
  PLMap();  // identity
  PLMap(std::vector<Dyadic> breakpoints, std::vector<Dyadic> images);

  const std::vector<Dyadic>& breakpoints() const noexcept { return xs_; }
  const std::vector<Dyadic>& images() const noexcept { return ys_; }
  // log2 of the slope on each segment.
  std::vector<int> slope_exponents() const;

  Dyadic operator()(const Dyadic& x) const;
  Dyadic preimage(const Dyadic& y) const;
  PLMap inverse() const;
  // (g.then(h))(x) = h(g(x)).
  PLMap then(const PLMap& h) const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  void simplify();

  std::vector<Dyadic> xs_;
  std::vector<Dyadic> ys_;
};

// H(l_1 ... l_n): apply H(l_1) first. Only a-letters.
PLMap homeo_of(const Word& f);

// The order on Thompson's group: dispatches to the special method on positive words.
Outcome cmp_F(const Word& f, const Word& g);
// First slope different from 1 in H(f^{-1} g): below 1 means f < g.
Outcome cmp_F_derivative(const Word& f, const Word& g);
// Lexicographic tree comparison of the right-vine special decompositions (positive a-words).
Outcome cmp_F_special(const Word& f, const Word& g);

// Handle reduction: a handle-free word equivalent to w in the braid group.
Word handle_reduce(const Word& w);
// Braid order: b < b' iff b^{-1} b' has a sigma_i-positive expression.
Comparison cmp_B(const Word& b, const Word& c);

Comparison cmp_plus(const Word& x, const Word& y);
Comparison cmp(const Word& x, const Word& y);

struct ConjugateByA {
  int e = 0;
  int i_prime = 0;
  int k_prime = 0;
};

// db_i^p db_{i+1}^p (sigma_i): strand i+1 doubled p times, then strand i doubled p times.
Word doubled_crossing(int i, int p);
// a_k D a_k^{-1} = a_{k'}^{-e} D' a_{k'}^{e} with D = doubled_crossing(i, p), D' = doubled_crossing(i', p + e).
ConjugateByA conj_by_a(int k, int i, int p);

// Compares the colour sequences obtained from one common source colouring, then the skeletons.
Outcome order_via_colouring(const Word& w, const Word& v);

}  // namespace parenbraid
