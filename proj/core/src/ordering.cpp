#include "parenbraid/ordering.hpp"

#include <algorithm>

#include "parenbraid/errors.hpp"
#include "parenbraid/ld_structure.hpp"
#include "parenbraid/normal_forms.hpp"
#include "parenbraid/reversing.hpp"

namespace parenbraid {

namespace {

Outcome from_ordering(std::strong_ordering o) {
  if (o < 0) return Outcome::less;
  if (o > 0) return Outcome::greater;
  return Outcome::equal;
}

void require_a_word(const Word& w) {
  if (!w.is_a_word()) throw DomainError("expected a word in the letters a_i");
}

void require_sigma_word(const Word& w) {
  if (!w.is_sigma_word()) throw DomainError("expected a word in the letters sigma_i");
}

std::size_t segment_of(const std::vector<Dyadic>& points, const Dyadic& v) {
  if (v < points.front() || v > points.back()) throw DomainError("argument outside [0, 1]");
  const auto it = std::upper_bound(points.begin(), points.end(), v);
  const auto k = static_cast<std::size_t>(it - points.begin());
  return k >= points.size() ? points.size() - 2 : k - 1;
}

Dyadic interpolate(const std::vector<Dyadic>& from, const std::vector<Dyadic>& to, const Dyadic& v) {
  const std::size_t k = segment_of(from, v);
  const int e = log2_ratio(to[k + 1] - to[k], from[k + 1] - from[k]);
  return to[k] + (v - from[k]).times_power_of_two(e);
}

PLMap homeo_of_letter(const Letter& x) {
  const int i = x.index;
  const Dyadic start = Dyadic::one() - Dyadic(1, i - 1);
  std::vector<Dyadic> xs{Dyadic(), start, Dyadic::one() - Dyadic(1, i), Dyadic::one() - Dyadic(1, i + 1),
                         Dyadic::one()};
  std::vector<Dyadic> ys{Dyadic(), start, start + Dyadic(1, i + 1), start + Dyadic(1, i), Dyadic::one()};
  if (i == 1) {
    xs.erase(xs.begin());
    ys.erase(ys.begin());
  }
  PLMap h(std::move(xs), std::move(ys));
  return x.inverse ? h.inverse() : h;
}

std::vector<Tree> vine_factors(const Word& f, std::size_t size) {
  return dec(act_tree(right_vine(static_cast<int>(size)), f));
}

// sigma_i^e ... sigma_i^{-e} with every letter in between of index > i.
struct Handle {
  std::size_t open;
  std::size_t close;
};

// The handle whose closing letter is leftmost; it contains no smaller handle.
std::optional<Handle> first_handle(const Word& w) {
  struct Entry {
    int index;
    std::size_t pos;
    bool inverse;
  };
  std::vector<Entry> stack;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const Letter x = w[j];
    while (!stack.empty() && stack.back().index > x.index) stack.pop_back();
    if (!stack.empty() && stack.back().index == x.index) {
      if (stack.back().inverse != x.inverse) return Handle{stack.back().pos, j};
      stack.back().pos = j;
    } else {
      stack.push_back({x.index, j, x.inverse});
    }
  }
  return std::nullopt;
}

constexpr std::size_t kHandleBudget = 1000000;

}  // namespace

Outcome reverse(Outcome o) {
  if (o == Outcome::less) return Outcome::greater;
  if (o == Outcome::greater) return Outcome::less;
  return Outcome::equal;
}

Outcome tree_cmp(const Tree& t, const Tree& u) {
  if (t.is_leaf() && u.is_leaf()) return Outcome::equal;
  if (t.is_leaf()) return Outcome::less;
  if (u.is_leaf()) return Outcome::greater;
  const Outcome left = tree_cmp(t.left(), u.left());
  return left != Outcome::equal ? left : tree_cmp(t.right(), u.right());
}

Outcome tree_cmp_dyadic(const Tree& t, const Tree& u) {
  const auto a = tree_positions(t).dyads;
  const auto b = tree_positions(u).dyads;
  // A larger dyadic sequence means a smaller tree.
  return from_ordering(std::lexicographical_compare_three_way(b.begin(), b.end(), a.begin(), a.end()));
}

PLMap::PLMap() : xs_{Dyadic(), Dyadic::one()}, ys_{Dyadic(), Dyadic::one()} {}

PLMap::PLMap(std::vector<Dyadic> breakpoints, std::vector<Dyadic> images)
    : xs_(std::move(breakpoints)), ys_(std::move(images)) {
  if (xs_.size() < 2 || xs_.size() != ys_.size()) throw DomainError("PL map needs matching breakpoint lists");
  if (xs_.front() != Dyadic() || ys_.front() != Dyadic() || xs_.back() != Dyadic::one() ||
      ys_.back() != Dyadic::one()) {
    throw DomainError("PL map must fix 0 and 1");
  }
  for (std::size_t k = 0; k + 1 < xs_.size(); ++k) {
    if (!(xs_[k] < xs_[k + 1]) || !(ys_[k] < ys_[k + 1])) throw DomainError("PL map must be increasing");
    static_cast<void>(log2_ratio(ys_[k + 1] - ys_[k], xs_[k + 1] - xs_[k]));
  }
  simplify();
}

void PLMap::simplify() {
  const std::vector<int> e = slope_exponents();
  std::vector<Dyadic> xs{xs_.front()};
  std::vector<Dyadic> ys{ys_.front()};
  for (std::size_t k = 1; k + 1 < xs_.size(); ++k) {
    if (e[k - 1] == e[k]) continue;
    xs.push_back(xs_[k]);
    ys.push_back(ys_[k]);
  }
  xs.push_back(xs_.back());
  ys.push_back(ys_.back());
  xs_ = std::move(xs);
  ys_ = std::move(ys);
}

std::vector<int> PLMap::slope_exponents() const {
  std::vector<int> out;
  for (std::size_t k = 0; k + 1 < xs_.size(); ++k) out.push_back(log2_ratio(ys_[k + 1] - ys_[k], xs_[k + 1] - xs_[k]));
  return out;
}

Dyadic PLMap::operator()(const Dyadic& x) const { return interpolate(xs_, ys_, x); }

Dyadic PLMap::preimage(const Dyadic& y) const { return interpolate(ys_, xs_, y); }

PLMap PLMap::inverse() const { return PLMap(ys_, xs_); }

PLMap PLMap::then(const PLMap& h) const {
  std::vector<Dyadic> xs = xs_;
  for (const Dyadic& b : h.xs_) xs.push_back(preimage(b));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Dyadic> ys;
  ys.reserve(xs.size());
  for (const Dyadic& x : xs) ys.push_back(h((*this)(x)));
  return PLMap(std::move(xs), std::move(ys));
}

PLMap homeo_of(const Word& f) {
  require_a_word(f);
  PLMap h;
  for (const Letter& x : f) h = h.then(homeo_of_letter(x));
  return h;
}

Outcome cmp_F_derivative(const Word& f, const Word& g) {
  require_a_word(f);
  require_a_word(g);
  for (int e : homeo_of(invert(f) * g).slope_exponents()) {
    if (e < 0) return Outcome::less;
    if (e > 0) return Outcome::greater;
  }
  return Outcome::equal;
}

Outcome cmp_F_special(const Word& f, const Word& g) {
  require_a_word(f);
  require_a_word(g);
  if (!f.is_positive() || !g.is_positive()) throw DomainError("the special method needs positive a-words");
  const std::size_t size = std::max(f.size(), g.size()) + static_cast<std::size_t>(std::max(f.max_index(), g.max_index())) + 2;
  const std::vector<Tree> a = vine_factors(f, size);
  const std::vector<Tree> b = vine_factors(g, size);
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    const Tree x = k < a.size() ? a[k] : Tree::leaf();
    const Tree y = k < b.size() ? b[k] : Tree::leaf();
    const Outcome o = tree_cmp(x, y);
    if (o != Outcome::equal) return o;
  }
  return Outcome::equal;
}

Outcome cmp_F(const Word& f, const Word& g) {
  require_a_word(f);
  require_a_word(g);
  if (f.is_positive() && g.is_positive()) return cmp_F_special(f, g);
  return cmp_F_derivative(f, g);
}

Word handle_reduce(const Word& w) {
  require_sigma_word(w);
  Word cur = free_reduce(w);
  for (std::size_t steps = 0;; ++steps) {
    const auto h = first_handle(cur);
    if (!h) return cur;
    if (steps >= kHandleBudget) throw BudgetError("handle reduction exhausted its budget");
    const Letter open = cur[h->open];
    const int i = open.index;
    const bool e_inverse = open.inverse;
    Word next = cur.slice(0, h->open);
    for (std::size_t j = h->open + 1; j < h->close; ++j) {
      const Letter x = cur[j];
      if (x.index == i + 1) {
        next.push_back(Letter::sigma(i + 1, !e_inverse));
        next.push_back(Letter::sigma(i, x.inverse));
        next.push_back(Letter::sigma(i + 1, e_inverse));
      } else {
        next.push_back(x);
      }
    }
    next *= cur.slice(h->close + 1, cur.size() - h->close - 1);
    cur = free_reduce(next);
  }
}

Comparison cmp_B(const Word& b, const Word& c) {
  require_sigma_word(b);
  require_sigma_word(c);
  const Word r = handle_reduce(invert(b) * c);
  if (r.empty()) return {Outcome::equal, std::nullopt};
  int lowest = r.front().index;
  bool negative = r.front().inverse;
  for (const Letter& x : r) {
    if (x.index < lowest) {
      lowest = x.index;
      negative = x.inverse;
    }
  }
  if (negative) return {Outcome::greater, invert(r)};
  return {Outcome::less, r};
}

Comparison cmp_plus(const Word& x, const Word& y) {
  if (!x.is_positive() || !y.is_positive()) throw DomainError("cmp_plus needs positive words");
  const ZSPair a = zs_split(x);
  const ZSPair b = zs_split(y);
  const Comparison braids = cmp_B(a.braid, b.braid);
  if (braids.outcome == Outcome::less) return {Outcome::less, invert(a.thompson) * *braids.certificate * b.thompson};
  if (braids.outcome == Outcome::greater) {
    return {Outcome::greater, invert(b.thompson) * *braids.certificate * a.thompson};
  }
  return {cmp_F(a.thompson, b.thompson), std::nullopt};
}

Comparison cmp(const Word& x, const Word& y) {
  const Fraction f = left_reverse(invert(x) * y);
  return cmp_plus(f.numerator, f.denominator);
}

Word doubled_crossing(int i, int p) {
  Word w{Letter::sigma(i)};
  for (int k = 0; k < p; ++k) w = double_strand(w, i + 1);
  for (int k = 0; k < p; ++k) w = double_strand(w, i);
  return w;
}

ConjugateByA conj_by_a(int k, int i, int p) {
  if (k < 1 || i < 1 || p < 0) throw DomainError("conj_by_a needs k, i >= 1 and p >= 0");
  const Word lhs = Word{Letter::a(k)} * doubled_crossing(i, p) * Word{Letter::a(k, true)};
  const int i_bound = i + 2 * p + 3;
  for (int ip = 1; ip <= i_bound; ++ip) {
    if (word_problem(lhs, doubled_crossing(ip, p))) return {0, ip, k};
  }
  for (int ip = 1; ip <= i_bound; ++ip) {
    const Word core = doubled_crossing(ip, p + 1);
    for (int kp = 1; kp <= k + 2 * p + 3; ++kp) {
      const Word rhs = Word{Letter::a(kp, true)} * core * Word{Letter::a(kp)};
      if (word_problem(lhs, rhs)) return {1, ip, kp};
    }
  }
  throw DomainError("no conjugation form found");
}

Outcome order_via_colouring(const Word& w, const Word& v) {
  const Fraction fw = left_reverse(w);
  const Fraction fv = left_reverse(v);
  // w = m^{-1} (lw . dw) and v = m^{-1} (lv . dv) with m the left lcm of both numerators,
  // so the common source colouring is the vine acted on by m^{-1}.
  const LeftLcm m = left_lcm(fw.numerator, fv.numerator);
  const Word pw = m.multiplier_u * fw.denominator;
  const Word pv = m.multiplier_v * fv.denominator;
  const int size = static_cast<int>(std::max(pw.size(), pv.size())) + std::max(pw.max_index(), pv.max_index()) + 2;
  const auto vine = ColouredTree<Word>::uniform(right_vine(size), Word{});
  const ColouredTree<Word> tw = act_coloured(vine, pw, BraidColours{});
  const ColouredTree<Word> tv = act_coloured(vine, pv, BraidColours{});
  for (std::size_t k = 0; k < tw.colours.size(); ++k) {
    const Outcome o = cmp_B(tw.colours[k], tv.colours[k]).outcome;
    if (o != Outcome::equal) return o;
  }
  return tree_cmp(tw.tree, tv.tree);
}

}  // namespace parenbraid
