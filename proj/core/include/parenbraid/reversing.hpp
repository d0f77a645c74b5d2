#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "parenbraid/words.hpp"

namespace parenbraid {

// for_x * x = for_y * y holds in the monoid; exists for every pair of positive letters.
struct LeftRelation {
  Word for_x;
  Word for_y;
};

// x * for_x = y * for_y holds in the monoid; missing for (a_i, a_{i+-1}) and (sigma_i, a_i).
struct RightRelation {
  Word for_x;
  Word for_y;
};

LeftRelation left_relation(const Letter& x, const Letter& y);
std::optional<RightRelation> right_relation(const Letter& x, const Letter& y);

// One instance of a defining relation, both sides positive.
struct Relation {
  Word lhs;
  Word rhs;
  std::string schema;
};

// All instances of the seven relation schemas with base index i <= max_base and far index j <= i + max_gap.
std::vector<Relation> defining_relations(int max_base, int max_gap);

// A single rewrite x y -> replacement at `position` (left: x positive, y negative; right: the converse).
struct ReversalStep {
  std::size_t position;
  Letter first;
  Letter second;
  Word replacement;
};

struct ReversalTrace {
  Word input;
  std::vector<ReversalStep> steps;

  // Replays the steps on `input`.
  Word replay() const;
};

// w is left-reversible to numerator^{-1} * denominator.
struct Fraction {
  Word numerator;
  Word denominator;
};

Fraction left_reverse(const Word& w, ReversalTrace* trace = nullptr);

struct RightReversal {
  enum class Kind { done, stuck, budget_exceeded };
  Kind kind = Kind::done;
  // done: w is right-reversible to numerator * denominator^{-1}.
  Word numerator;
  Word denominator;
  std::size_t steps = 0;
  // stuck: the offending negative-positive pair and its position in the current word.
  std::size_t stuck_position = 0;
  Letter stuck_first;
  Letter stuck_second;
  Word current;
};

// Step budget from PARENBRAID_BUDGET, else 100000.
std::size_t default_budget();

RightReversal right_reverse(const Word& w, std::size_t budget = default_budget(), ReversalTrace* trace = nullptr);

bool word_problem(const Word& w1, const Word& w2);

// Memo table for word_problem keyed by the encoded pair; safe for concurrent use.
class WordProblemCache {
 public:
  bool equivalent(const Word& w1, const Word& w2);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, bool> table_;
};

std::string encode(const Word& w);

// multiplier_u * u = multiplier_v * v is the left lcm.
struct LeftLcm {
  Word multiplier_u;
  Word multiplier_v;
};

LeftLcm left_lcm(const Word& u, const Word& v);

// u * multiplier_u = v * multiplier_v is the right lcm.
struct RightLcm {
  enum class Status { found, none, indeterminate };
  Status status = Status::none;
  Word multiplier_u;
  Word multiplier_v;
};

RightLcm right_lcm(const Word& u, const Word& v, std::size_t budget = default_budget());

enum class Side { left, right };

// Quotient q with a = x * q (left) or a = q * x (right), if x divides a on that side.
std::optional<Word> divide(Side side, const Word& x, const Word& a, std::size_t budget = default_budget());

Word gcd(Side side, const Word& u, const Word& v, std::size_t budget = default_budget());

struct CubeCheck {
  enum class Status { holds, fails, vacuous, indeterminate };
  Status status = Status::holds;
  Word first_input;
  Word first_result;
  Word second_input;
  Word second_result;

  bool passed() const { return status == Status::holds || status == Status::vacuous; }
};

CubeCheck cube_condition(Side side, const Letter& x, const Letter& y, const Letter& z,
                         std::size_t budget = default_budget());

}  // namespace parenbraid
