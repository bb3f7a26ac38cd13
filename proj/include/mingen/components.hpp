#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mingen/cayley.hpp"
#include "mingen/error.hpp"
#include "mingen/group.hpp"

namespace mingen {

// Partition of the vertices of a Cayley graph into connected components.
// Blocks are sorted ascending and ordered by their minimal element, which is
// also the block's representative.
struct ComponentDecomposition {
  std::vector<std::vector<Element>> blocks;
  std::vector<Element> rep;
  std::vector<std::size_t> assignment;  // element id -> block id

  std::size_t count() const noexcept { return blocks.size(); }
  std::size_t block_of(Element g) const { return assignment.at(g.id()); }
  bool same_block(Element u, Element v) const { return block_of(u) == block_of(v); }
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace detail

inline ComponentDecomposition decompose(const CayleyGraph& g) {
  const auto n = g.vertex_count();
  detail::DisjointSets sets(n);
  for (const auto& [u, v] : g.edges()) sets.unite(u.id(), v.id());

  ComponentDecomposition d;
  d.assignment.assign(n, n);
  std::vector<std::size_t> block_of_root(n, n);
  // Scanning vertices in increasing order numbers blocks by minimal element and
  // leaves each block sorted.
  for (std::size_t v = 0; v < n; ++v) {
    auto root = sets.find(v);
    if (block_of_root[root] == n) {
      block_of_root[root] = d.blocks.size();
      d.blocks.emplace_back();
      d.rep.emplace_back(static_cast<std::uint32_t>(v));
    }
    auto b = block_of_root[root];
    d.blocks[b].emplace_back(static_cast<std::uint32_t>(v));
    d.assignment[v] = b;
  }
  return d;
}

inline ComponentDecomposition decompose(const FiniteGroup& G, const GeneratorSet& A) {
  return decompose(build_graph(G, A));
}

inline std::size_t component_count(const FiniteGroup& G, const GeneratorSet& A) {
  return decompose(G, A).count();
}

inline bool is_connected(const FiniteGroup& G, const GeneratorSet& A) {
  return component_count(G, A) == 1;
}

inline const std::vector<Element>& identity_component(const ComponentDecomposition& d) {
  return d.blocks.at(d.block_of(kIdentity));
}

struct CosetCheck {
  bool holds = true;
  std::optional<std::size_t> failing_block;
  std::string detail;
};

// Checks that block i equals rep[i] * <A> for every block, and that the blocks
// are exactly the left cosets of <A>.
inline CosetCheck verify_coset_structure(const FiniteGroup& G, const GeneratorSet& A,
                                         const ComponentDecomposition& d) {
  const auto H = closure(G, A);
  const auto cosets = left_cosets(G, H);
  if (cosets.size() != d.count())
    return {false, std::nullopt,
            std::to_string(d.count()) + " blocks but " + std::to_string(cosets.size()) +
                " cosets"};
  for (std::size_t i = 0; i < d.count(); ++i) {
    std::vector<Element> coset;
    for (auto h : H.elements()) coset.push_back(G.multiply(d.rep[i], h));
    std::sort(coset.begin(), coset.end());
    if (coset != d.blocks[i]) return {false, i, "block differs from rep * <A>"};
    // Both lists are ordered by minimal element, so they must agree pairwise.
    if (cosets[i] != d.blocks[i]) return {false, i, "block does not match coset order"};
  }
  return {};
}

struct IsomorphismWitness {
  std::size_t from_block = 0;
  std::size_t to_block = 0;
  Element translator;
};

// Left translation by t = rep[j] * rep[i]^-1 carries block i onto block j and
// preserves adjacency. Verified before returning; failure is a defect.
inline IsomorphismWitness translation_isomorphism(const CayleyGraph& g,
                                                  const ComponentDecomposition& d,
                                                  std::size_t i, std::size_t j) {
  if (i >= d.count() || j >= d.count()) throw UsageError("block id out of range");
  const auto& G = g.group();
  const auto t = G.multiply(d.rep[j], G.inverse(d.rep[i]));
  const auto t_inv = G.inverse(t);

  auto image_is = [&](Element by, std::size_t from, std::size_t to) {
    const auto& src = d.blocks[from];
    if (src.size() != d.blocks[to].size()) return false;
    std::vector<Element> img;
    img.reserve(src.size());
    for (auto x : src) img.push_back(G.multiply(by, x));
    std::sort(img.begin(), img.end());
    return img == d.blocks[to];
  };
  auto edges_carried = [&](Element by, std::size_t from) {
    for (auto u : d.blocks[from])
      for (auto v : g.neighbours(u))
        if (!g.has_edge(G.multiply(by, u), G.multiply(by, v))) return false;
    return true;
  };

  if (!image_is(t, i, j) || !image_is(t_inv, j, i))
    throw DefectError("translation does not map block " + std::to_string(i) + " onto block " +
                      std::to_string(j));
  if (!edges_carried(t, i) || !edges_carried(t_inv, j))
    throw DefectError("translation between blocks " + std::to_string(i) + " and " +
                      std::to_string(j) + " does not preserve edges");
  return {i, j, t};
}

struct Letter {
  Element generator;
  int exponent;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using PathWord = std::vector<Letter>;

inline Element evaluate(const FiniteGroup& G, const PathWord& word) {
  Element x = kIdentity;
  for (const auto& [a, e] : word) x = G.multiply(x, e > 0 ? a : G.inverse(a));
  return x;
}

// Shortest word w over A' ∪ A'^-1 with u*w = v, or nullopt when u and v lie in
// different components. Ties are broken by generator order, +1 before -1.
inline std::optional<PathWord> path_witness(const CayleyGraph& g, Element u, Element v) {
  const auto& G = g.group();
  G.check(u);
  G.check(v);
  const auto gens = g.gens().non_identity();
  const auto n = G.order();
  std::vector<std::size_t> prev(n, n);
  std::vector<Letter> via(n);
  std::vector<Element> queue{u};
  prev[u.id()] = u.id();
  for (std::size_t q = 0; q < queue.size() && prev[v.id()] == n; ++q) {
    auto x = queue[q];
    for (auto a : gens) {
      for (int e : {+1, -1}) {
        auto y = G.multiply(x, e > 0 ? a : G.inverse(a));
        if (prev[y.id()] != n) continue;
        prev[y.id()] = x.id();
        via[y.id()] = {a, e};
        queue.push_back(y);
      }
    }
  }
  if (prev[v.id()] == n) return std::nullopt;
  PathWord word;
  for (auto x = v.id(); x != u.id(); x = static_cast<std::uint32_t>(prev[x]))
    word.push_back(via[x]);
  std::reverse(word.begin(), word.end());
  return word;
}

struct SubgroupGraphStats {
  std::size_t components = 0;
  bool each_complete = false;
  std::size_t edge_total = 0;
};

// Cayley graph over a subgroup's own elements: every component is K_|H| and
// the edge count is |G|(|H|-1)/2. Throws DefectError if either fails.
inline SubgroupGraphStats subgroup_graph_stats(const FiniteGroup& G, const Subgroup& H) {
  if (!H.is_closed_in(G)) throw UsageError("subgroup_graph_stats: not a subgroup");
  const auto graph = build_graph(G, GeneratorSet(std::span<const Element>(H.elements())));
  const auto d = decompose(graph);
  SubgroupGraphStats s;
  s.components = d.count();
  s.edge_total = graph.edges().size();
  s.each_complete = std::all_of(d.blocks.begin(), d.blocks.end(), [&](const auto& block) {
    if (block.size() != H.order()) return false;
    for (auto u : block)
      if (graph.degree(u) != block.size() - 1) return false;
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t b = a + 1; b < block.size(); ++b)
        if (!graph.has_edge(block[a], block[b])) return false;
    return true;
  });
  if (!s.each_complete) throw DefectError("a component of Cay(G,H) is not complete");
  if (s.components != index(G, H))
    throw DefectError("component count differs from the index of H");
  if (s.edge_total * 2 != G.order() * (H.order() - 1))
    throw DefectError("edge total differs from |G|(|H|-1)/2");
  return s;
}

}  // namespace mingen
