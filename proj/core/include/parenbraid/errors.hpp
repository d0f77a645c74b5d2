#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parenbraid {

// Input outside the domain of an operation (wrong letter family, bad position...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text for a word, tree, position or free-group generator.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The action of a word on a tree is undefined at some letter.
class PartialityError : public std::runtime_error {
 public:
  PartialityError(std::size_t letter_index, const std::string& what)
      : std::runtime_error(what), letter_index_(letter_index) {}

  // Zero-based position of the first letter that cannot act.
  std::size_t letter_index() const noexcept { return letter_index_; }

 private:
  std::size_t letter_index_;
};

// An expression failed the vine test for special elements.
class NotSpecialError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A bounded search or rewriting loop ran out of steps.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace parenbraid
