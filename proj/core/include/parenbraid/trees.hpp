#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <vector>

#include "parenbraid/dyadic.hpp"
#include "parenbraid/words.hpp"

namespace parenbraid {

// Nonempty integer sequence, first and last entries >= 1, interior zeros allowed.
class Position {
 public:
  explicit Position(std::vector<int> entries);

  const std::vector<int>& entries() const noexcept { return entries_; }
  int first() const noexcept { return entries_.front(); }

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;

 private:
  std::vector<int> entries_;
};

// Finite binary tree with shared immutable nodes. A default-constructed tree is a leaf.
class Tree {
 public:
  Tree() = default;

  static Tree leaf() { return Tree(); }
  static Tree node(Tree left, Tree right);

  bool is_leaf() const noexcept { return node_ == nullptr; }
  const Tree& left() const;
  const Tree& right() const;
  int leaf_count() const noexcept;
  int right_height() const noexcept;

  friend bool operator==(const Tree& x, const Tree& y);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

// Root is (1); left child of (s,k) is (s,k,1), right child is (s,k+1).
using Address = std::vector<int>;

Dyadic position_to_dyadic(const Position& s);
// Inverse of position_to_dyadic on [0, 1).
Position dyadic_to_position(const Dyadic& d);

struct TreePositions {
  std::vector<Dyadic> dyads;        // increasing, starts at 0 and ends at 1
  std::vector<Position> positions;  // ordered like their dyadic values
};

TreePositions tree_positions(const Tree& t);
Tree tree_from_positions(const std::vector<Position>& positions);

// (t_1, ..., t_n) with t = t_1(t_2(...(t_n .))). Empty for a single leaf.
std::vector<Tree> dec(const Tree& t);
Tree from_dec(const std::vector<Tree>& factors);

// c_n: right vine with n + 1 leaves.
Tree right_vine(int n);

// Every tree with exactly `leaves` leaves, in a fixed recursive order.
std::vector<Tree> enumerate_trees(int leaves);

Tree act_tree(const Tree& t, const Word& w);
bool action_defined(const Tree& t, const Word& w);
Tree minimal_input_tree(const Word& w);

// Image of a position under one letter of the diagram; the caller guarantees definedness.
Position move_position(const Position& p, const Letter& x);

std::vector<Address> leaf_addresses(const Tree& t);
std::vector<Address> node_addresses(const Tree& t);
std::optional<Tree> subtree_at(const Tree& t, const Address& address);
// Leaves below the node at `address`: indices first, first + 1, ..., first + count - 1.
struct LeafRange {
  int first;
  int count;
};
std::optional<LeafRange> leaf_range(const Tree& t, const Address& address);
// Node-set inclusion.
bool tree_contains(const Tree& big, const Tree& small);
// Smallest tree containing t and a node at `address`.
Tree extend_to_address(const Tree& t, const Address& address);
// Replace the leaf with the given left-to-right index by a caret.
Tree split_leaf(const Tree& t, int leaf_index);

}  // namespace parenbraid
