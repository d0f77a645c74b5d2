#include "parenbraid/artin_rep.hpp"

#include <algorithm>
#include <functional>

#include "parenbraid/errors.hpp"

namespace parenbraid {

namespace {

std::vector<int> join(std::initializer_list<int> head, const std::vector<int>& rest, std::size_t from = 0) {
  std::vector<int> out(head);
  out.insert(out.end(), rest.begin() + static_cast<std::ptrdiff_t>(from), rest.end());
  return out;
}

FWord g(std::vector<int> s) { return FWord::gen(std::move(s)); }
FWord g_inv(std::vector<int> s) { return FWord::gen(std::move(s), true); }

FWord image_sigma(int i, bool inverse, const std::vector<int>& s) {
  const int j = s.front();
  if (j != i && j != i + 1) return g(s);
  if (!inverse) {
    if (j == i) return g({i}) * g(join({i + 1}, s, 1)) * g_inv({i});
    return g(join({i}, s, 1));
  }
  if (j == i) return g(join({i + 1}, s, 1));
  return g_inv({i + 1}) * g(join({i}, s, 1)) * g({i + 1});
}

FWord image_a(int i, bool inverse, const std::vector<int>& s) {
  const int j = s.front();
  if (j < i) return g(s);
  if (!inverse) {
    if (j > i) return g(join({j + 1}, s, 1));
    if (s.size() == 1) return g({i}) * g({i + 1});
    if (s[1] == 1) return g(join({i}, s, 2));
    return g(join({i + 1, s[1] - 1}, s, 2));
  }
  if (j >= i + 2) return g(join({j - 1}, s, 1));
  if (j == i) return g(join({i, 1}, s, 1));
  if (s.size() == 1) return g_inv({i, 1}) * g({i});
  return g(join({i, s[1] + 1}, s, 2));
}

FWord image_c(int i, bool inverse, const std::vector<int>& s) {
  const int j = s.front();
  if (j < i) return g(s);
  if (j == i && s.size() == 1) return g_inv({i});
  if (!inverse) {
    if (j == i) return g({i}) * g(join({i + s[1]}, s, 2)) * g_inv({i});
    return g(join({i, j - i}, s, 1));
  }
  if (j == i) return g(join({i + s[1]}, s, 2));
  return g({i}) * g(join({i, j - i}, s, 1)) * g_inv({i});
}

FWord substitute(const FWord& u, const std::function<FWord(const FGen&)>& image) {
  FWord out;
  for (const FLetter& x : u.letters()) {
    const FWord y = image(x.gen);
    out *= x.inverse ? y.inverse() : y;
  }
  return out;
}

Address generator_address(const FGen& x) {
  Address a = x.index();
  a.push_back(1);
  return a;
}

}  // namespace

FGen::FGen(std::vector<int> s) : s_(std::move(s)) {
  if (s_.empty()) throw DomainError("free generator index must be nonempty");
  for (int e : s_) {
    if (e < 1) throw DomainError("free generator entries must be positive");
  }
}

FWord::FWord(const std::vector<FLetter>& letters) {
  for (const auto& x : letters) append(x);
}

FWord FWord::gen(std::vector<int> s, bool inverse) {
  FWord out;
  out.letters_.push_back({FGen(std::move(s)), inverse});
  return out;
}

void FWord::append(const FLetter& x) {
  if (!letters_.empty() && letters_.back().gen == x.gen && letters_.back().inverse != x.inverse) {
    letters_.pop_back();
  } else {
    letters_.push_back(x);
  }
}

FWord FWord::inverse() const {
  FWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back({it->gen, !it->inverse});
  return out;
}

FWord& FWord::operator*=(const FWord& other) {
  for (const auto& x : other.letters_) append(x);
  return *this;
}

FWord natural_colour(const Address& address) {
  if (address.empty()) throw DomainError("empty address");
  const std::vector<int> s(address.begin(), address.end() - 1);
  const int k = address.back();
  FWord out;
  for (int m = k - 1; m >= 1; --m) {
    std::vector<int> sm = s;
    sm.push_back(m);
    out *= g_inv(std::move(sm));
  }
  if (!s.empty()) out *= g(s);
  return out;
}

ColouredTree<FWord> natural_colouring(const Tree& t) {
  ColouredTree<FWord> out{t, {}};
  for (const Address& a : leaf_addresses(t)) out.colours.push_back(natural_colour(a));
  return out;
}

FWord node_colour(const ColouredTree<FWord>& t, const Address& address) {
  const auto range = leaf_range(t.tree, address);
  if (!range) throw DomainError("no node at the requested address");
  FWord out;
  for (int k = 0; k < range->count; ++k) out *= t.colours[static_cast<std::size_t>(range->first + k)];
  return out;
}

ColouredTree<FWord> act_F_coloured(const ColouredTree<FWord>& t, const Word& w) {
  return act_coloured(t, w, FreeGroupColours{});
}

ExtendedLetter ExtendedLetter::from(const Letter& x) {
  return {x.is_sigma() ? Kind::sigma : Kind::a, x.index, x.inverse};
}

FWord generator_image(const ExtendedLetter& l, const FGen& x) {
  switch (l.kind) {
    case ExtendedLetter::Kind::sigma:
      return image_sigma(l.index, l.inverse, x.index());
    case ExtendedLetter::Kind::a:
      return image_a(l.index, l.inverse, x.index());
    case ExtendedLetter::Kind::c:
      return image_c(l.index, l.inverse, x.index());
  }
  return g(x.index());
}

FWord generator_image(const Letter& l, const FGen& x) { return generator_image(ExtendedLetter::from(l), x); }

FWord aut_apply(const Word& w, const FWord& u) {
  FWord out = u;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const Letter l = *it;
    out = substitute(out, [&](const FGen& x) { return generator_image(l, x); });
  }
  return out;
}

FWord aut_apply_by_colouring(const Word& w, const FWord& u) {
  Tree target = act_tree(minimal_input_tree(w), w);
  for (const FLetter& x : u.letters()) target = extend_to_address(target, generator_address(x.gen));
  const Tree source = act_tree(target, invert(w));
  const ColouredTree<FWord> coloured = act_F_coloured(natural_colouring(source), w);
  return substitute(u, [&](const FGen& x) { return node_colour(coloured, generator_address(x)); });
}

bool is_special_fword(const FWord& u) {
  const auto& l = u.letters();
  std::size_t anchor = l.size();
  for (std::size_t k = l.size(); k-- > 0;) {
    if (l[k].inverse) {
      anchor = k;
      break;
    }
  }
  if (anchor == l.size()) return false;
  const std::vector<int>& s = l[anchor].gen.index();
  for (std::size_t k = anchor + 1; k < l.size(); ++k) {
    const std::vector<int>& t = l[k].gen.index();
    if (t.size() <= s.size() || !std::equal(s.begin(), s.end(), t.begin())) return false;
  }
  return true;
}

std::vector<FGen> generators_up_to(int depth, int max_entry) {
  std::vector<FGen> out;
  std::vector<std::vector<int>> layer{{}};
  for (int d = 1; d <= depth; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& s : layer) {
      for (int e = 1; e <= max_entry; ++e) {
        std::vector<int> t = s;
        t.push_back(e);
        out.emplace_back(t);
        next.push_back(std::move(t));
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::optional<FGen> nontriviality_witness(const Word& w, int depth) {
  for (const FGen& x : generators_up_to(depth, w.max_index() + 2)) {
    const FWord u = FWord::gen(x.index());
    if (!(aut_apply(w, u) == u)) return x;
  }
  return std::nullopt;
}

}  // namespace parenbraid
