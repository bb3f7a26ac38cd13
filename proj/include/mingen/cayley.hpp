#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mingen/error.hpp"
#include "mingen/group.hpp"

namespace mingen {

struct Arc {
  Element source;
  Element target;
  Element label;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Directed Cayley graph: an arc g -> g*a coloured a for every vertex g and every
// non-identity a in the generator set. The graph refers to its group, which must
// outlive it.
class CayleyDigraph {
 public:
  CayleyDigraph(const FiniteGroup& G, GeneratorSet gens) : group_(&G), gens_(std::move(gens)) {
    check_members(G, gens_);
    labels_ = gens_.non_identity();
    arcs_.reserve(G.order() * labels_.size());
    for (auto g : G.elements())
      for (auto a : labels_) arcs_.push_back({g, G.multiply(g, a), a});
  }

  const FiniteGroup& group() const noexcept { return *group_; }
  const GeneratorSet& gens() const noexcept { return gens_; }
  // Generators that induce arcs, in insertion order.
  const std::vector<Element>& labels() const noexcept { return labels_; }
  // Sorted by source, then by label position.
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

 private:
  const FiniteGroup* group_;
  GeneratorSet gens_;
  std::vector<Element> labels_;
  std::vector<Arc> arcs_;
};

using Edge = std::pair<Element, Element>;  // first < second

// Underlying simple graph of the Cayley digraph.
class CayleyGraph {
 public:
  CayleyGraph(const FiniteGroup& G, GeneratorSet gens)
      : group_(&G), gens_(std::move(gens)), adj_(G.order()) {
    check_members(G, gens_);
    for (auto g : G.elements()) {
      for (auto a : gens_.non_identity()) {
        auto h = G.multiply(g, a);
        adj_[g.id()].push_back(h);
        adj_[h.id()].push_back(g);
      }
    }
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      auto& nb = adj_[v];
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      for (auto w : nb)
        if (static_cast<std::size_t>(w.id()) > v) edges_.emplace_back(Element(static_cast<std::uint32_t>(v)), w);
    }
  }

  const FiniteGroup& group() const noexcept { return *group_; }
  const GeneratorSet& gens() const noexcept { return gens_; }
  std::size_t vertex_count() const noexcept { return adj_.size(); }
  // Lexicographically sorted, each with first < second.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Element>& neighbours(Element v) const { return adj_.at(v.id()); }
  std::size_t degree(Element v) const { return neighbours(v).size(); }

  bool has_edge(Element u, Element v) const {
    const auto& nb = neighbours(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

 private:
  const FiniteGroup* group_;
  GeneratorSet gens_;
  std::vector<std::vector<Element>> adj_;
  std::vector<Edge> edges_;
};

inline CayleyDigraph build_digraph(const FiniteGroup& G, const GeneratorSet& A) {
  return CayleyDigraph(G, A);
}

inline CayleyGraph build_graph(const FiniteGroup& G, const GeneratorSet& A) {
  return CayleyGraph(G, A);
}

// 2|A'| - |A' ∩ A'^-1| with A' = A \ {e}.
inline std::size_t expected_degree(const FiniteGroup& G, const GeneratorSet& A) {
  auto nonid = A.non_identity();
  std::size_t self_paired = 0;
  for (auto a : nonid)
    if (A.contains(G.inverse(a))) ++self_paired;
  return 2 * nonid.size() - self_paired;
}

struct DigraphDegree {
  bool regular = true;
  std::size_t in_degree = 0;
  std::size_t out_degree = 0;
};

struct GraphDegree {
  bool regular = true;
  std::size_t degree = 0;
};

inline DigraphDegree degree_stats(const CayleyDigraph& dg) {
  const auto n = dg.group().order();
  std::vector<std::size_t> in(n, 0), out(n, 0);
  for (const auto& arc : dg.arcs()) {
    ++out[arc.source.id()];
    ++in[arc.target.id()];
  }
  const auto want = dg.labels().size();
  for (std::size_t v = 0; v < n; ++v)
    if (in[v] != want || out[v] != want)
      throw DefectError("Cayley digraph is not regular at vertex " + std::to_string(v));
  return {true, want, want};
}

inline GraphDegree degree_stats(const CayleyGraph& g) {
  const auto want = expected_degree(g.group(), g.gens());
  for (auto v : g.group().elements())
    if (g.degree(v) != want)
      throw DefectError("Cayley graph degree " + std::to_string(g.degree(v)) + " at vertex " +
                        std::to_string(v.id()) + ", expected " + std::to_string(want));
  return {true, want};
}

// ---------------------------------------------------------------------------
// DOT output
// ---------------------------------------------------------------------------

// Colours for generator positions 0..11.
inline constexpr std::array<std::string_view, 12> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#000080", "#808000"};

struct DotOptions {
  std::vector<std::string> colors;  // overrides kPalette when non-empty
  std::string name = "cayley";
  bool label_edges = true;
};

namespace detail {

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline void dot_nodes(std::string& out, const FiniteGroup& G) {
  for (auto g : G.elements())
    out += "  " + std::to_string(g.id()) + " [label=" + dot_quote(G.name(g)) + "];\n";
}

}  // namespace detail

inline std::string to_dot(const CayleyDigraph& dg, const DotOptions& opts = {}) {
  const auto& labels = dg.labels();
  const std::size_t ncolors = opts.colors.empty() ? kPalette.size() : opts.colors.size();
  if (labels.size() > ncolors)
    throw UsageError(std::to_string(labels.size()) + " generators but only " +
                     std::to_string(ncolors) + " colours; supply more colours");
  auto color = [&](Element a) -> std::string {
    auto pos = static_cast<std::size_t>(std::find(labels.begin(), labels.end(), a) - labels.begin());
    return opts.colors.empty() ? std::string(kPalette[pos]) : opts.colors[pos];
  };
  const auto& G = dg.group();
  std::string out = "digraph " + detail::dot_quote(opts.name) + " {\n";
  detail::dot_nodes(out, G);
  for (const auto& arc : dg.arcs()) {
    out += "  " + std::to_string(arc.source.id()) + " -> " + std::to_string(arc.target.id()) +
           " [color=" + detail::dot_quote(color(arc.label));
    if (opts.label_edges) out += ", label=" + detail::dot_quote(G.name(arc.label));
    out += "];\n";
  }
  out += "}\n";
  return out;
}

inline std::string to_dot(const CayleyGraph& g, const DotOptions& opts = {}) {
  std::string out = "graph " + detail::dot_quote(opts.name) + " {\n";
  detail::dot_nodes(out, g.group());
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(u.id()) + " -- " + std::to_string(v.id()) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace mingen
