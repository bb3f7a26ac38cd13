#pragma once

// Shared fixtures and test-only oracles. The oracles here work straight off the
// multiplication table and do not call closure(), decompose() or CayleyGraph.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mingen/mingen.hpp"

#ifndef MINGEN_FIXTURE_DIR
#error "MINGEN_FIXTURE_DIR must be defined"
#endif

namespace mingen::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(MINGEN_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline const FiniteGroup& table1() {
  static const FiniteGroup G = parse_cayley_table(read_fixture("table1.txt"));
  return G;
}

inline Element el(const FiniteGroup& G, const std::string& name) {
  auto g = G.find(name);
  if (!g) throw std::runtime_error("no element named " + name);
  return *g;
}

inline GeneratorSet set_of(const FiniteGroup& G, std::initializer_list<const char*> names) {
  GeneratorSet A;
  for (auto n : names) A.insert(el(G, n));
  return A;
}

inline std::set<std::string> names_of(const FiniteGroup& G, const auto& elems) {
  std::set<std::string> out;
  for (auto g : elems) out.insert(G.name(g));
  return out;
}

// Subset of G's elements selected by the bits of mask (bit i = element i).
inline GeneratorSet subset_from_mask(std::uint64_t mask, std::size_t n) {
  GeneratorSet A;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1) A.insert(Element(static_cast<std::uint32_t>(i)));
  return A;
}

// <A> as the fixed point of {e} ∪ A under all pairwise products.
inline std::set<std::uint32_t> naive_closure(const Table& t, const GeneratorSet& A) {
  std::set<std::uint32_t> s{0};
  for (auto a : A) s.insert(a.id());
  for (;;) {
    auto next = s;
    for (auto x : s)
      for (auto y : s) next.insert(t[x][y]);
    if (next == s) return s;
    s = std::move(next);
  }
}

// Component id per vertex by depth-first search over arcs g -> g*a and their
// reversals, read directly from the table.
inline std::vector<int> naive_components(const Table& t, const GeneratorSet& A) {
  const auto n = t.size();
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t g = 0; g < n; ++g)
    for (auto a : A)
      if (a.id() != 0) {
        adj[g].push_back(t[g][a.id()]);
        adj[t[g][a.id()]].push_back(g);
      }
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::uint32_t> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto y : adj[x])
        if (comp[y] < 0) {
          comp[y] = next;
          stack.push_back(y);
        }
    }
    ++next;
  }
  return comp;
}

inline int naive_component_count(const Table& t, const GeneratorSet& A) {
  auto c = naive_components(t, A);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

struct NamedGroup {
  std::string label;
  FiniteGroup group;
};

// Groups of order <= 8 swept exhaustively over all subsets.
inline std::vector<NamedGroup> small_corpus() {
  std::vector<NamedGroup> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back({"cyclic:" + std::to_string(n), cyclic(n)});
  out.push_back({"klein4", klein4()});
  out.push_back({"dihedral:3", dihedral(3)});
  out.push_back({"dihedral:4", dihedral(4)});
  out.push_back({"symmetric:3", symmetric(3)});
  return out;
}

// Groups of order <= 24 used for the grow-then-prune sweep.
inline std::vector<NamedGroup> medium_corpus() {
  auto out = small_corpus();
  for (std::size_t n = 9; n <= 24; ++n) out.push_back({"cyclic:" + std::to_string(n), cyclic(n)});
  for (std::size_t n = 5; n <= 12; ++n)
    out.push_back({"dihedral:" + std::to_string(n), dihedral(n)});
  out.push_back({"symmetric:4", symmetric(4)});
  out.push_back({"table1", table1()});
  out.push_back({"C2xC2xC2", direct_product(cyclic(2), klein4())});
  out.push_back({"C2xC4", direct_product(cyclic(2), cyclic(4))});
  out.push_back({"C2xC6", direct_product(cyclic(2), cyclic(6))});
  out.push_back({"C3xC3", direct_product(cyclic(3), cyclic(3))});
  out.push_back({"C4xC4", direct_product(cyclic(4), cyclic(4))});
  out.push_back({"C2xC8", direct_product(cyclic(2), cyclic(8))});
  out.push_back({"C2xS3", direct_product(cyclic(2), symmetric(3))});
  out.push_back({"C3xS3", direct_product(cyclic(3), symmetric(3))});
  out.push_back({"C4xS3", direct_product(cyclic(4), symmetric(3))});
  out.push_back({"C2xA4", direct_product(cyclic(2), table1())});
  return out;
}

inline GeneratorSet random_subset(const FiniteGroup& G, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.05, 0.5)(rng));
  GeneratorSet A;
  for (auto g : G.elements())
    if (coin(rng)) A.insert(g);
  return A;
}

}  // namespace mingen::test
