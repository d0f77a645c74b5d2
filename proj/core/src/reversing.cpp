#include "parenbraid/reversing.hpp"

#include <algorithm>
#include <cstdlib>

#include "parenbraid/errors.hpp"

namespace parenbraid {

namespace {

void require_positive(const Letter& x) {
  if (x.inverse) throw DomainError("relation lookup needs positive letters");
}

int transpose(int i, int k) {
  if (k == i) return i + 1;
  if (k == i + 1) return i;
  return k;
}

Word splice(const std::vector<Letter>& cur, std::size_t at, const Word& replacement) {
  std::vector<Letter> out(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), cur.begin() + static_cast<std::ptrdiff_t>(at + 2), cur.end());
  return Word(std::move(out));
}

}  // namespace

LeftRelation left_relation(const Letter& x, const Letter& y) {
  require_positive(x);
  require_positive(y);
  if (x == y) return {};
  if (x.is_sigma() && y.is_sigma()) {
    const int p = x.index;
    const int q = y.index;
    if (std::abs(p - q) >= 2) return {Word{y}, Word{x}};
    return {Word{x, y}, Word{y, x}};
  }
  if (x.is_a() && y.is_a()) {
    const int p = x.index;
    const int q = y.index;
    if (p > q) return {Word{Letter::a(q)}, Word{Letter::a(p + 1)}};
    return {Word{Letter::a(q + 1)}, Word{Letter::a(p)}};
  }
  if (x.is_sigma()) {
    // a_m sigma_i = db_m(sigma_i) a_j with m = sigma_i[j].
    const int m = transpose(x.index, y.index);
    return {Word{Letter::a(m)}, double_strand(Word{x}, m)};
  }
  const LeftRelation swapped = left_relation(y, x);
  return {swapped.for_y, swapped.for_x};
}

std::optional<RightRelation> right_relation(const Letter& x, const Letter& y) {
  require_positive(x);
  require_positive(y);
  if (x == y) return RightRelation{};
  if (x.is_sigma() && y.is_sigma()) {
    if (std::abs(x.index - y.index) >= 2) return RightRelation{Word{y}, Word{x}};
    return RightRelation{Word{y, x}, Word{x, y}};
  }
  if (x.is_a() && y.is_a()) {
    const int p = x.index;
    const int q = y.index;
    if (q >= p + 2) return RightRelation{Word{Letter::a(q - 1)}, Word{x}};
    if (p >= q + 2) return RightRelation{Word{y}, Word{Letter::a(p - 1)}};
    return std::nullopt;
  }
  if (x.is_sigma()) {
    const int i = x.index;
    const int j = y.index;
    if (j >= i + 2) return RightRelation{Word{y}, Word{x}};
    if (j == i + 1) return RightRelation{Word{Letter::sigma(i + 1), Letter::a(i)}, Word{x}};
    if (j == i) return std::nullopt;
    if (j == i - 1) return RightRelation{Word{Letter::sigma(i - 1), Letter::a(i)}, Word{Letter::sigma(i - 1)}};
    return RightRelation{Word{y}, Word{Letter::sigma(i - 1)}};
  }
  auto swapped = right_relation(y, x);
  if (!swapped) return std::nullopt;
  return RightRelation{swapped->for_y, swapped->for_x};
}

std::vector<Relation> defining_relations(int max_base, int max_gap) {
  std::vector<Relation> out;
  auto s = [](int i) { return Letter::sigma(i); };
  auto a = [](int i) { return Letter::a(i); };
  for (int i = 1; i <= max_base; ++i) {
    for (int j = i + 2; j <= i + max_gap; ++j) {
      out.push_back({Word{s(i), s(j)}, Word{s(j), s(i)}, "sigma-sigma commutation"});
      out.push_back({Word{s(i), a(j)}, Word{a(j), s(i)}, "sigma-a commutation"});
      out.push_back({Word{a(i), a(j - 1)}, Word{a(j), a(i)}, "a-a shift"});
      out.push_back({Word{a(i), s(j - 1)}, Word{s(j), a(i)}, "a-sigma shift"});
    }
    out.push_back({Word{s(i), s(i + 1), s(i)}, Word{s(i + 1), s(i), s(i + 1)}, "braid"});
    out.push_back({Word{s(i + 1), s(i), a(i + 1)}, Word{a(i), s(i)}, "upper doubling"});
    out.push_back({Word{s(i), s(i + 1), a(i)}, Word{a(i + 1), s(i)}, "lower doubling"});
  }
  return out;
}

Word ReversalTrace::replay() const {
  Word cur = input;
  for (const auto& step : steps) cur = splice(cur.letters(), step.position, step.replacement);
  return cur;
}

Fraction left_reverse(const Word& w, ReversalTrace* trace) {
  if (trace) {
    trace->input = w;
    trace->steps.clear();
  }
  std::vector<Letter> cur(w.begin(), w.end());
  std::size_t i = 0;
  while (i + 1 < cur.size()) {
    if (!(cur[i].positive() && !cur[i + 1].positive())) {
      ++i;
      continue;
    }
    const Letter x = cur[i];
    const Letter y = cur[i + 1].inverted();
    Word replacement;
    if (x != y) {
      const LeftRelation rel = left_relation(x, y);
      replacement = invert(rel.for_x) * rel.for_y;
    }
    if (trace) trace->steps.push_back({i, cur[i], cur[i + 1], replacement});
    cur = splice(cur, i, replacement).letters();
    i = i > 0 ? i - 1 : 0;
  }
  Fraction out;
  std::size_t k = 0;
  std::vector<Letter> negative;
  while (k < cur.size() && !cur[k].positive()) negative.push_back(cur[k++]);
  out.numerator = invert(Word(std::move(negative)));
  out.denominator = Word(std::vector<Letter>(cur.begin() + static_cast<std::ptrdiff_t>(k), cur.end()));
  return out;
}

std::size_t default_budget() {
  if (const char* env = std::getenv("PARENBRAID_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

RightReversal right_reverse(const Word& w, std::size_t budget, ReversalTrace* trace) {
  if (trace) {
    trace->input = w;
    trace->steps.clear();
  }
  RightReversal out;
  std::vector<Letter> cur(w.begin(), w.end());
  std::size_t i = 0;
  while (i + 1 < cur.size()) {
    if (!(!cur[i].positive() && cur[i + 1].positive())) {
      ++i;
      continue;
    }
    const Letter x = cur[i].inverted();
    const Letter y = cur[i + 1];
    Word replacement;
    if (x != y) {
      const auto rel = right_relation(x, y);
      if (!rel) {
        out.kind = RightReversal::Kind::stuck;
        out.stuck_position = i;
        out.stuck_first = cur[i];
        out.stuck_second = cur[i + 1];
        out.current = Word(std::move(cur));
        return out;
      }
      replacement = rel->for_x * invert(rel->for_y);
    }
    if (out.steps >= budget) {
      out.kind = RightReversal::Kind::budget_exceeded;
      out.current = Word(std::move(cur));
      return out;
    }
    ++out.steps;
    if (trace) trace->steps.push_back({i, cur[i], cur[i + 1], replacement});
    cur = splice(cur, i, replacement).letters();
    i = i > 0 ? i - 1 : 0;
  }
  std::size_t k = 0;
  std::vector<Letter> positive;
  while (k < cur.size() && cur[k].positive()) positive.push_back(cur[k++]);
  out.numerator = Word(std::move(positive));
  out.denominator = invert(Word(std::vector<Letter>(cur.begin() + static_cast<std::ptrdiff_t>(k), cur.end())));
  out.current = Word(std::move(cur));
  return out;
}

bool word_problem(const Word& w1, const Word& w2) {
  const Fraction first = left_reverse(w1 * invert(w2));
  const Fraction second = left_reverse(first.denominator * invert(first.numerator));
  return second.numerator.empty() && second.denominator.empty();
}

std::string encode(const Word& w) {
  std::string out;
  for (const auto& x : w) {
    char c = x.is_sigma() ? 's' : 'a';
    if (x.inverse) c = static_cast<char>(c - 'a' + 'A');
    out += c;
    out += std::to_string(x.index);
  }
  return out;
}

bool WordProblemCache::equivalent(const Word& w1, const Word& w2) {
  const std::string key = encode(w1) + "|" + encode(w2);
  {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
  }
  const bool result = word_problem(w1, w2);
  std::unique_lock lock(mutex_);
  table_.emplace(key, result);
  return result;
}

std::size_t WordProblemCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

LeftLcm left_lcm(const Word& u, const Word& v) {
  if (!u.is_positive() || !v.is_positive()) throw DomainError("lcm needs positive words");
  const Fraction f = left_reverse(u * invert(v));
  return {f.numerator, f.denominator};
}

RightLcm right_lcm(const Word& u, const Word& v, std::size_t budget) {
  if (!u.is_positive() || !v.is_positive()) throw DomainError("lcm needs positive words");
  const RightReversal r = right_reverse(invert(u) * v, budget);
  RightLcm out;
  switch (r.kind) {
    case RightReversal::Kind::done:
      out.status = RightLcm::Status::found;
      out.multiplier_u = r.numerator;
      out.multiplier_v = r.denominator;
      break;
    case RightReversal::Kind::stuck:
      out.status = RightLcm::Status::none;
      break;
    case RightReversal::Kind::budget_exceeded:
      out.status = RightLcm::Status::indeterminate;
      break;
  }
  return out;
}

std::optional<Word> divide(Side side, const Word& x, const Word& a, std::size_t budget) {
  if (side == Side::left) {
    const RightReversal r = right_reverse(invert(x) * a, budget);
    if (r.kind == RightReversal::Kind::budget_exceeded) throw BudgetError("divisibility test exhausted its budget");
    if (r.kind == RightReversal::Kind::done && r.denominator.empty()) return r.numerator;
    return std::nullopt;
  }
  const Fraction f = left_reverse(a * invert(x));
  if (f.numerator.empty()) return f.denominator;
  return std::nullopt;
}

Word gcd(Side side, const Word& u, const Word& v, std::size_t budget) {
  if (!u.is_positive() || !v.is_positive()) throw DomainError("gcd needs positive words");
  Word cu = u;
  Word cv = v;
  Word prefix;
  Word suffix;
  for (;;) {
    // Equivalent words can carry indices up to max index + length.
    const int bound = std::max(cu.max_index(), cv.max_index()) + static_cast<int>(std::max(cu.size(), cv.size())) + 1;
    std::optional<Letter> found;
    std::optional<Word> qu;
    std::optional<Word> qv;
    for (Family fam : {Family::sigma, Family::a}) {
      for (int i = 1; i <= bound && !found; ++i) {
        const Letter x{fam, i, false};
        qu = divide(side, Word{x}, cu, budget);
        if (!qu) continue;
        qv = divide(side, Word{x}, cv, budget);
        if (qv) found = x;
      }
      if (found) break;
    }
    if (!found) break;
    cu = *qu;
    cv = *qv;
    if (side == Side::left) {
      prefix.push_back(*found);
    } else {
      suffix = Word{*found} * suffix;
    }
  }
  return side == Side::left ? prefix : suffix;
}

CubeCheck cube_condition(Side side, const Letter& x, const Letter& y, const Letter& z, std::size_t budget) {
  require_positive(x);
  require_positive(y);
  require_positive(z);
  CubeCheck out;
  const Word wx{x};
  const Word wy{y};
  const Word wz{z};
  if (side == Side::right) {
    out.first_input = invert(wx) * wy * invert(wy) * wz;
    const RightReversal first = right_reverse(out.first_input, budget);
    if (first.kind == RightReversal::Kind::budget_exceeded) {
      out.status = CubeCheck::Status::indeterminate;
      return out;
    }
    if (first.kind == RightReversal::Kind::stuck) {
      out.status = CubeCheck::Status::vacuous;
      return out;
    }
    out.first_result = first.numerator * invert(first.denominator);
    out.second_input = invert(first.numerator) * invert(wx) * wz * first.denominator;
    const RightReversal second = right_reverse(out.second_input, budget);
    if (second.kind == RightReversal::Kind::budget_exceeded) {
      out.status = CubeCheck::Status::indeterminate;
      return out;
    }
    out.second_result = second.current;
    const bool empty = second.kind == RightReversal::Kind::done && second.current.empty();
    out.status = empty ? CubeCheck::Status::holds : CubeCheck::Status::fails;
    return out;
  }
  out.first_input = wx * invert(wy) * wy * invert(wz);
  const Fraction first = left_reverse(out.first_input);
  out.first_result = invert(first.numerator) * first.denominator;
  out.second_input = first.numerator * wx * invert(wz) * invert(first.denominator);
  const Fraction second = left_reverse(out.second_input);
  out.second_result = invert(second.numerator) * second.denominator;
  out.status = out.second_result.empty() ? CubeCheck::Status::holds : CubeCheck::Status::fails;
  return out;
}

}  // namespace parenbraid
