#include "parenbraid/trees.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "parenbraid/errors.hpp"

namespace parenbraid {

struct Tree::Node {
  Tree left;
  Tree right;
  int leaves;
  int right_height;
};

Position::Position(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("position must be nonempty");
  if (entries_.front() < 1) throw DomainError("position must not begin with 0");
  if (entries_.back() < 1) throw DomainError("position must not end with 0");
  for (int e : entries_) {
    if (e < 0) throw DomainError("position entries must be nonnegative");
  }
}

Tree Tree::node(Tree left, Tree right) {
  Tree t;
  const int leaves = left.leaf_count() + right.leaf_count();
  const int height = right.right_height() + 1;
  t.node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right), leaves, height});
  return t;
}

const Tree& Tree::left() const {
  if (!node_) throw DomainError("a leaf has no left subtree");
  return node_->left;
}

const Tree& Tree::right() const {
  if (!node_) throw DomainError("a leaf has no right subtree");
  return node_->right;
}

int Tree::leaf_count() const noexcept { return node_ ? node_->leaves : 1; }

int Tree::right_height() const noexcept { return node_ ? node_->right_height : 0; }

bool operator==(const Tree& x, const Tree& y) {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  if (x.node_->leaves != y.node_->leaves) return false;
  return x.node_->left == y.node_->left && x.node_->right == y.node_->right;
}

Dyadic position_to_dyadic(const Position& s) {
  std::int64_t num = 0;
  int exp = 0;
  auto push_bit = [&](int bit) {
    if (exp >= 62) throw std::overflow_error("position too long for dyadic realization");
    num = num * 2 + bit;
    ++exp;
  };
  const auto& e = s.entries();
  for (int k = 0; k < e.front() - 1; ++k) push_bit(1);
  for (std::size_t j = 1; j < e.size(); ++j) {
    push_bit(0);
    for (int k = 0; k < e[j]; ++k) push_bit(1);
  }
  return Dyadic(num, exp);
}

Position dyadic_to_position(const Dyadic& d) {
  if (d < Dyadic(0, 0) || !(d < Dyadic::one())) throw DomainError("dyadic value outside [0, 1)");
  const int exp = d.exponent();
  const std::int64_t num = d.numerator();
  auto bit = [&](int pos) { return static_cast<int>((num >> (exp - 1 - pos)) & 1); };
  int pos = 0;
  int ones = 0;
  while (pos < exp && bit(pos) == 1) {
    ++ones;
    ++pos;
  }
  std::vector<int> entries{ones + 1};
  while (pos < exp) {
    ++pos;  // the separating 0
    ones = 0;
    while (pos < exp && bit(pos) == 1) {
      ++ones;
      ++pos;
    }
    entries.push_back(ones);
  }
  return Position(std::move(entries));
}

namespace {

void collect_dyads(const Tree& t, const Dyadic& lo, int depth, std::vector<Dyadic>& out) {
  if (t.is_leaf()) {
    out.push_back(lo);
    return;
  }
  collect_dyads(t.left(), lo, depth + 1, out);
  collect_dyads(t.right(), lo + Dyadic(1, depth + 1), depth + 1, out);
}

Tree build_from_dyads(const std::vector<Dyadic>& sorted, std::size_t first, std::size_t last,
                      const Dyadic& lo, int depth) {
  // sorted[first..last] lie in [lo, lo + 2^-depth] and include both endpoints.
  if (last - first == 1) return Tree::leaf();
  const Dyadic mid = lo + Dyadic(1, depth + 1);
  const auto it = std::lower_bound(sorted.begin() + static_cast<std::ptrdiff_t>(first),
                                   sorted.begin() + static_cast<std::ptrdiff_t>(last), mid);
  if (it == sorted.begin() + static_cast<std::ptrdiff_t>(last) || *it != mid) {
    throw DomainError("position set is not realized by any tree");
  }
  const auto m = static_cast<std::size_t>(it - sorted.begin());
  return Tree::node(build_from_dyads(sorted, first, m, lo, depth + 1),
                    build_from_dyads(sorted, m, last, mid, depth + 1));
}

}  // namespace

TreePositions tree_positions(const Tree& t) {
  TreePositions out;
  collect_dyads(t, Dyadic(0, 0), 0, out.dyads);
  out.dyads.push_back(Dyadic::one());
  for (std::size_t k = 0; k + 2 < out.dyads.size(); ++k) out.positions.push_back(dyadic_to_position(out.dyads[k]));
  return out;
}

Tree tree_from_positions(const std::vector<Position>& positions) {
  int n = 0;
  std::vector<Dyadic> dyads;
  for (const auto& p : positions) {
    if (p.entries().size() == 1) n = std::max(n, p.first());
    dyads.push_back(position_to_dyadic(p));
  }
  dyads.push_back(position_to_dyadic(Position({n + 1})));
  dyads.push_back(Dyadic::one());
  std::sort(dyads.begin(), dyads.end());
  if (std::adjacent_find(dyads.begin(), dyads.end()) != dyads.end() || dyads.front() != Dyadic(0, 0)) {
    throw DomainError("position set is not realized by any tree");
  }
  Tree t = build_from_dyads(dyads, 0, dyads.size() - 1, Dyadic(0, 0), 0);
  auto expected = positions;
  std::sort(expected.begin(), expected.end(),
            [](const Position& x, const Position& y) { return position_to_dyadic(x) < position_to_dyadic(y); });
  if (tree_positions(t).positions != expected) throw DomainError("position set is not realized by any tree");
  return t;
}

std::vector<Tree> dec(const Tree& t) {
  std::vector<Tree> out;
  const Tree* cur = &t;
  while (!cur->is_leaf()) {
    out.push_back(cur->left());
    cur = &cur->right();
  }
  return out;
}

Tree from_dec(const std::vector<Tree>& factors) {
  Tree t;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) t = Tree::node(*it, t);
  return t;
}

Tree right_vine(int n) {
  if (n < 0) throw DomainError("vine height must be nonnegative");
  return from_dec(std::vector<Tree>(static_cast<std::size_t>(n)));
}

std::vector<Tree> enumerate_trees(int leaves) {
  if (leaves < 1) throw DomainError("a tree has at least one leaf");
  std::vector<std::vector<Tree>> by_size(static_cast<std::size_t>(leaves) + 1);
  by_size[1] = {Tree::leaf()};
  for (int n = 2; n <= leaves; ++n) {
    for (int l = 1; l < n; ++l) {
      for (const auto& x : by_size[static_cast<std::size_t>(l)]) {
        for (const auto& y : by_size[static_cast<std::size_t>(n - l)]) by_size[static_cast<std::size_t>(n)].push_back(Tree::node(x, y));
      }
    }
  }
  return by_size[static_cast<std::size_t>(leaves)];
}

namespace {

struct Blocked {
  std::size_t letter;
  int leaf_to_split;  // leaf of the input tree, left-to-right index
};

// Runs the action while tracking which input leaf each current leaf came from.
std::optional<Blocked> simulate(const Tree& t, const Word& w, Tree* result) {
  std::vector<Tree> factors = dec(t);
  std::vector<int> labels(static_cast<std::size_t>(t.leaf_count()));
  for (std::size_t k = 0; k < labels.size(); ++k) labels[k] = static_cast<int>(k);

  auto offset_of = [&](std::size_t factor) {
    std::size_t off = 0;
    for (std::size_t k = 0; k < factor; ++k) off += static_cast<std::size_t>(factors[k].leaf_count());
    return off;
  };

  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    const Letter x = w[pos];
    const auto i = static_cast<std::size_t>(x.index);
    const std::size_t n = factors.size();
    if (x.is_sigma()) {
      if (n <= i) return Blocked{pos, labels.back()};
      const std::size_t off = offset_of(i - 1);
      const auto len_first = static_cast<std::size_t>(factors[i - 1].leaf_count());
      const auto len_second = static_cast<std::size_t>(factors[i].leaf_count());
      std::rotate(labels.begin() + static_cast<std::ptrdiff_t>(off),
                  labels.begin() + static_cast<std::ptrdiff_t>(off + len_first),
                  labels.begin() + static_cast<std::ptrdiff_t>(off + len_first + len_second));
      std::swap(factors[i - 1], factors[i]);
    } else if (!x.inverse) {
      if (n <= i) return Blocked{pos, labels.back()};
      factors[i - 1] = Tree::node(factors[i - 1], factors[i]);
      factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      if (n < i) return Blocked{pos, labels.back()};
      if (factors[i - 1].is_leaf()) return Blocked{pos, labels[offset_of(i - 1)]};
      const Tree glued = factors[i - 1];
      factors[i - 1] = glued.left();
      factors.insert(factors.begin() + static_cast<std::ptrdiff_t>(i), glued.right());
    }
  }
  if (result) *result = from_dec(factors);
  return std::nullopt;
}

// Collapse every caret in turn; returns the first variant for which pred holds.
std::optional<Tree> try_collapse(const Tree& t, const std::function<bool(const Tree&)>& pred) {
  std::vector<Tree> candidates;
  std::function<void(const Tree&, const std::function<Tree(Tree)>&)> visit =
      [&](const Tree& cur, const std::function<Tree(Tree)>& rebuild) {
        if (cur.is_leaf()) return;
        if (cur.left().is_leaf() && cur.right().is_leaf()) candidates.push_back(rebuild(Tree::leaf()));
        visit(cur.left(), [&](Tree sub) { return rebuild(Tree::node(std::move(sub), cur.right())); });
        visit(cur.right(), [&](Tree sub) { return rebuild(Tree::node(cur.left(), std::move(sub))); });
      };
  visit(t, [](Tree sub) { return sub; });
  for (const auto& c : candidates) {
    if (pred(c)) return c;
  }
  return std::nullopt;
}

}  // namespace

Tree act_tree(const Tree& t, const Word& w) {
  Tree out;
  if (auto blocked = simulate(t, w, &out)) {
    throw PartialityError(blocked->letter, "action undefined at letter " + std::to_string(blocked->letter + 1) +
                                               " (" + letter_name(w[blocked->letter]) + ")");
  }
  return out;
}

bool action_defined(const Tree& t, const Word& w) { return !simulate(t, w, nullptr).has_value(); }

Tree minimal_input_tree(const Word& w) {
  Tree t;
  const std::size_t limit = (w.size() + 1) * (static_cast<std::size_t>(w.max_index()) + 2) + 2;
  for (std::size_t round = 0;; ++round) {
    auto blocked = simulate(t, w, nullptr);
    if (!blocked) break;
    if (round > limit) throw BudgetError("minimal input tree search did not converge");
    t = split_leaf(t, blocked->leaf_to_split);
  }
  while (auto smaller = try_collapse(t, [&](const Tree& c) { return action_defined(c, w); })) t = *smaller;
  return t;
}

Position move_position(const Position& p, const Letter& x) {
  const auto& e = p.entries();
  const int k = e.front();
  const int i = x.index;
  std::vector<int> rest(e.begin() + 1, e.end());
  std::vector<int> out;
  if (x.is_sigma()) {
    out = e;
    if (k == i) out.front() = i + 1;
    if (k == i + 1) out.front() = i;
    return Position(std::move(out));
  }
  if (k < i) return p;
  if (!x.inverse) {
    if (k == i) {
      out = {i, 0};
      out.insert(out.end(), rest.begin(), rest.end());
    } else if (k == i + 1) {
      const int j = rest.empty() ? 0 : rest.front();
      out = {i, j + 1};
      if (!rest.empty()) out.insert(out.end(), rest.begin() + 1, rest.end());
    } else {
      out = {k - 1};
      out.insert(out.end(), rest.begin(), rest.end());
    }
  } else {
    if (k == i) {
      const int m = rest.empty() ? 0 : rest.front();
      if (m == 0) {
        out = {i};
      } else {
        out = {i + 1, m - 1};
      }
      if (!rest.empty()) out.insert(out.end(), rest.begin() + 1, rest.end());
    } else {
      out = {k + 1};
      out.insert(out.end(), rest.begin(), rest.end());
    }
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return Position(std::move(out));
}

namespace {

void collect_addresses(const Tree& t, Address addr, bool leaves_only, std::vector<Address>& out) {
  if (t.is_leaf() || !leaves_only) out.push_back(addr);
  if (t.is_leaf()) return;
  Address left = addr;
  left.push_back(1);
  collect_addresses(t.left(), std::move(left), leaves_only, out);
  ++addr.back();
  collect_addresses(t.right(), std::move(addr), leaves_only, out);
}

// Moves from the root: false = left child, true = right child.
std::vector<bool> address_path(const Address& address) {
  if (address.empty() || address.front() < 1) throw DomainError("invalid node address");
  std::vector<bool> steps;
  for (int k = 1; k < address.front(); ++k) steps.push_back(true);
  for (std::size_t j = 1; j < address.size(); ++j) {
    if (address[j] < 1) throw DomainError("invalid node address");
    steps.push_back(false);
    for (int k = 1; k < address[j]; ++k) steps.push_back(true);
  }
  return steps;
}

Tree extend_along(const Tree& t, const std::vector<bool>& steps, std::size_t from) {
  if (from == steps.size()) return t;
  const Tree base = t.is_leaf() ? Tree::node(Tree::leaf(), Tree::leaf()) : t;
  if (steps[from]) return Tree::node(base.left(), extend_along(base.right(), steps, from + 1));
  return Tree::node(extend_along(base.left(), steps, from + 1), base.right());
}

}  // namespace

std::vector<Address> leaf_addresses(const Tree& t) {
  std::vector<Address> out;
  collect_addresses(t, {1}, true, out);
  return out;
}

std::vector<Address> node_addresses(const Tree& t) {
  std::vector<Address> out;
  collect_addresses(t, {1}, false, out);
  return out;
}

std::optional<Tree> subtree_at(const Tree& t, const Address& address) {
  const Tree* cur = &t;
  for (bool right : address_path(address)) {
    if (cur->is_leaf()) return std::nullopt;
    cur = right ? &cur->right() : &cur->left();
  }
  return *cur;
}

std::optional<LeafRange> leaf_range(const Tree& t, const Address& address) {
  const Tree* cur = &t;
  int first = 0;
  for (bool right : address_path(address)) {
    if (cur->is_leaf()) return std::nullopt;
    if (right) first += cur->left().leaf_count();
    cur = right ? &cur->right() : &cur->left();
  }
  return LeafRange{first, cur->leaf_count()};
}

bool tree_contains(const Tree& big, const Tree& small) {
  if (small.is_leaf()) return true;
  if (big.is_leaf()) return false;
  return tree_contains(big.left(), small.left()) && tree_contains(big.right(), small.right());
}

Tree extend_to_address(const Tree& t, const Address& address) { return extend_along(t, address_path(address), 0); }

Tree split_leaf(const Tree& t, int leaf_index) {
  if (leaf_index < 0 || leaf_index >= t.leaf_count()) throw DomainError("leaf index out of range");
  if (t.is_leaf()) return Tree::node(Tree::leaf(), Tree::leaf());
  const int left_leaves = t.left().leaf_count();
  if (leaf_index < left_leaves) return Tree::node(split_leaf(t.left(), leaf_index), t.right());
  return Tree::node(t.left(), split_leaf(t.right(), leaf_index - left_leaves));
}

}  // namespace parenbraid
