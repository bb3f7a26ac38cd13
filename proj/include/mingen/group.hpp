#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mingen/error.hpp"
#include "mingen/validation.hpp"

namespace mingen {

// An element of a FiniteGroup, identified by its index in the group's element
// list. Index 0 is always the identity.
class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t id) : id_(id) {}

  constexpr std::uint32_t id() const noexcept { return id_; }
  constexpr bool is_identity() const noexcept { return id_ == 0; }

  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  std::uint32_t id_ = 0;
};

inline constexpr Element kIdentity{};

class FiniteGroup {
 public:
  // Builds a validated group from element names and a product table. If the
  // identity is not the first element it is moved to index 0; all other
  // elements keep their relative order. Throws ValidationError.
  static FiniteGroup from_table(std::vector<std::string> names, Table table,
                                ValidateOptions opts = {}) {
    if (names.size() != table.size())
      throw UsageError("name count does not match table size");
    auto report = validate(table, opts);
    if (!report.ok) throw ValidationError(std::move(report));

    const auto n = static_cast<std::uint32_t>(table.size());
    const auto e = detail::find_left_identity(table);
    if (e != 0) {
      // perm[new] = old
      std::vector<std::uint32_t> perm{e};
      for (std::uint32_t i = 0; i < n; ++i)
        if (i != e) perm.push_back(i);
      std::vector<std::uint32_t> where(n);
      for (std::uint32_t i = 0; i < n; ++i) where[perm[i]] = i;
      Table t(n, std::vector<std::uint32_t>(n));
      std::vector<std::string> nm(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        nm[i] = std::move(names[perm[i]]);
        for (std::uint32_t j = 0; j < n; ++j) t[i][j] = where[table[perm[i]][perm[j]]];
      }
      table = std::move(t);
      names = std::move(nm);
    }
    return FiniteGroup(std::move(names), std::move(table));
  }

  std::size_t order() const noexcept { return table_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Table& table() const noexcept { return table_; }

  const std::string& name(Element g) const {
    check(g);
    return names_[g.id()];
  }

  Element multiply(Element g, Element h) const {
    check(g);
    check(h);
    return Element(table_[g.id()][h.id()]);
  }

  Element inverse(Element g) const {
    check(g);
    return Element(inverses_[g.id()]);
  }

  bool contains(Element g) const noexcept { return g.id() < order(); }

  std::optional<Element> find(std::string_view name) const {
    for (std::uint32_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return Element(i);
    return std::nullopt;
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(order());
    for (std::uint32_t i = 0; i < order(); ++i) out.emplace_back(i);
    return out;
  }

  // Smallest k >= 1 with g^k = e.
  std::size_t element_order(Element g) const {
    check(g);
    std::size_t k = 1;
    for (auto x = g; !x.is_identity(); x = multiply(x, g)) ++k;
    return k;
  }

  void check(Element g) const {
    if (!contains(g))
      throw UsageError("element index " + std::to_string(g.id()) +
                       " out of range for group of order " + std::to_string(order()));
  }

 private:
  FiniteGroup(std::vector<std::string> names, Table table)
      : names_(std::move(names)), table_(std::move(table)), inverses_(table_.size()) {
    const auto n = static_cast<std::uint32_t>(table_.size());
    for (std::uint32_t g = 0; g < n; ++g)
      for (std::uint32_t h = 0; h < n; ++h)
        if (table_[g][h] == 0) inverses_[g] = h;
  }

  std::vector<std::string> names_;
  Table table_;
  std::vector<std::uint32_t> inverses_;
};

inline Element multiply(const FiniteGroup& G, Element g, Element h) { return G.multiply(g, h); }
inline Element inverse(const FiniteGroup& G, Element g) { return G.inverse(g); }

// Insertion-ordered set of elements without duplicates. May hold the identity.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  GeneratorSet(std::initializer_list<Element> init) {
    for (auto g : init) insert(g);
  }
  explicit GeneratorSet(std::span<const Element> init) {
    for (auto g : init) insert(g);
  }

  bool insert(Element g) {
    if (contains(g)) return false;
    members_.push_back(g);
    return true;
  }

  bool erase(Element g) {
    auto it = std::find(members_.begin(), members_.end(), g);
    if (it == members_.end()) return false;
    members_.erase(it);
    return true;
  }

  bool contains(Element g) const {
    return std::find(members_.begin(), members_.end(), g) != members_.end();
  }

  GeneratorSet without(Element g) const {
    GeneratorSet out = *this;
    out.erase(g);
    return out;
  }

  // Members other than the identity, in insertion order.
  std::vector<Element> non_identity() const {
    std::vector<Element> out;
    for (auto g : members_)
      if (!g.is_identity()) out.push_back(g);
    return out;
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  Element operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Element>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<Element> members_;
};

inline void check_members(const FiniteGroup& G, const GeneratorSet& A) {
  for (auto a : A) G.check(a);
}

class Subgroup {
 public:
  // Sorted ascending; always contains the identity.
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const GeneratorSet& generated_from() const noexcept { return generated_from_; }
  std::size_t order() const noexcept { return elements_.size(); }

  bool contains(Element g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
  }

  // Wraps an explicit element set, which must be closed. Throws UsageError if
  // it is not a subgroup of G.
  static Subgroup from_elements(const FiniteGroup& G, std::vector<Element> elems) {
    for (auto g : elems) G.check(g);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Subgroup H(std::move(elems), {});
    if (!H.is_closed_in(G)) throw UsageError("element set is not a subgroup");
    H.generated_from_ = GeneratorSet(std::span<const Element>(H.elements_));
    return H;
  }

  bool is_closed_in(const FiniteGroup& G) const {
    if (!contains(kIdentity)) return false;
    for (auto g : elements_) {
      if (!contains(G.inverse(g))) return false;
      for (auto h : elements_)
        if (!contains(G.multiply(g, h))) return false;
    }
    return true;
  }

 private:
  friend Subgroup closure(const FiniteGroup&, const GeneratorSet&);
  Subgroup(std::vector<Element> elems, GeneratorSet from)
      : elements_(std::move(elems)), generated_from_(std::move(from)) {}

  std::vector<Element> elements_;
  GeneratorSet generated_from_;
};

// Smallest subgroup containing A, by breadth-first closure under right
// multiplication by A and A^-1.
inline Subgroup closure(const FiniteGroup& G, const GeneratorSet& A) {
  check_members(G, A);
  std::vector<Element> steps;
  for (auto a : A.non_identity()) {
    steps.push_back(a);
    steps.push_back(G.inverse(a));
  }
  std::vector<char> seen(G.order(), 0);
  std::vector<Element> found{kIdentity};
  seen[0] = 1;
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto s : steps) {
      auto y = G.multiply(found[i], s);
      if (!seen[y.id()]) {
        seen[y.id()] = 1;
        found.push_back(y);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return Subgroup(std::move(found), A);
}

inline bool generates(const FiniteGroup& G, const GeneratorSet& A) {
  return closure(G, A).order() == G.order();
}

using Partition = std::vector<std::vector<Element>>;

// Left cosets gH, ordered by minimal element, each sorted ascending.
inline Partition left_cosets(const FiniteGroup& G, const Subgroup& H) {
  if (!H.is_closed_in(G)) throw UsageError("left_cosets: subgroup is not closed");
  std::vector<char> used(G.order(), 0);
  Partition blocks;
  for (auto g : G.elements()) {
    if (used[g.id()]) continue;
    std::vector<Element> block;
    block.reserve(H.order());
    for (auto h : H.elements()) {
      auto x = G.multiply(g, h);
      used[x.id()] = 1;
      block.push_back(x);
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

inline std::size_t index(const FiniteGroup& G, const Subgroup& H) {
  return G.order() / H.order();
}

}  // namespace mingen
