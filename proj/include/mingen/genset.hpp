#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mingen/components.hpp"
#include "mingen/error.hpp"
#include "mingen/group.hpp"

namespace mingen {

enum class ConnectorMode { chain, star };

// Extends A by one connector per extra component so the Cayley graph becomes
// connected. chain adds v_i^-1 v_(i+1); star adds v_1^-1 v_i. The v_i are the
// block representatives of d, which must be the decomposition of Cay(G, A).
inline GeneratorSet connectors(const FiniteGroup& G, const GeneratorSet& A,
                               const ComponentDecomposition& d, ConnectorMode mode) {
  check_members(G, A);
  if (d.assignment.size() != G.order() || d.count() == 0)
    throw UsageError("decomposition does not belong to this group");
  GeneratorSet out = A;
  for (std::size_t i = 1; i < d.count(); ++i) {
    const auto from = mode == ConnectorMode::star ? d.rep[0] : d.rep[i - 1];
    out.insert(G.multiply(G.inverse(from), d.rep[i]));
  }
  return out;
}

struct RankBound {
  std::size_t value = 0;
  bool identity_dropped = false;  // A contained e, bound computed for A \ {e}
};

// |A| + k - 1 for A without the identity, k the component count of Cay(G, A).
inline RankBound rank_upper_bound(const FiniteGroup& G, const GeneratorSet& A) {
  check_members(G, A);
  const auto k = component_count(G, A);
  const auto nonid = A.non_identity().size();
  return {nonid + k - 1, nonid != A.size()};
}

// How the grow phase picks a vertex outside the start element's component.
struct SelectionPolicy {
  enum class Kind { first_in_order, scripted };

  Kind kind = Kind::first_in_order;
  std::vector<Element> script;

  static SelectionPolicy first_in_order() { return {}; }
  static SelectionPolicy scripted(std::vector<Element> picks) {
    return {Kind::scripted, std::move(picks)};
  }
};

struct GrowStep {
  Element element;                // generator added (the start element for the first step)
  std::optional<Element> picked;  // vertex v2 it connects to; empty for the first step
  std::size_t components = 0;     // component count after adding it

  friend bool operator==(const GrowStep&, const GrowStep&) = default;
};

struct PruneStep {
  Element element;  // generator tested for removal
  bool connected = false;
  bool removed = false;

  friend bool operator==(const PruneStep&, const PruneStep&) = default;
};

using TraceStep = std::variant<GrowStep, PruneStep>;
using GrowPruneTrace = std::vector<TraceStep>;

struct MinGenResult {
  GeneratorSet generators;
  GrowPruneTrace trace;
  std::size_t grow_size = 0;   // generator count at the end of the grow phase
  std::size_t rank_bound = 0;  // component count of Cay(G, {start}) bounds the rank
};

struct PruneOutcome {
  GeneratorSet kept;
  std::vector<PruneStep> steps;
};

// Tests a_(k-1), ..., a_1 in that order and drops each one whose removal keeps
// Cay(G, A) connected. a_k is never tested: removing it restores the set that
// was disconnected before a_k was added.
inline PruneOutcome prune(const FiniteGroup& G, const std::vector<Element>& added) {
  std::vector<char> active(added.size(), 1);
  auto current = [&](std::optional<std::size_t> skip) {
    GeneratorSet s;
    for (std::size_t j = 0; j < added.size(); ++j)
      if (active[j] && j != skip) s.insert(added[j]);
    return s;
  };
  PruneOutcome out;
  for (std::size_t i = added.size(); i-- > 1;) {
    const auto pos = i - 1;
    const bool connected = is_connected(G, current(pos));
    if (connected) active[pos] = 0;
    out.steps.push_back({added[pos], connected, connected});
  }
  out.kept = current(std::nullopt);
  return out;
}

// Grow-then-prune search for a minimal generating set starting from `start`.
// The start element stays the reference vertex v1 throughout the grow phase.
inline MinGenResult minimal_generating_set(const FiniteGroup& G, Element start,
                                           const SelectionPolicy& policy = {}) {
  G.check(start);
  MinGenResult result;
  if (G.order() == 1) return result;
  if (start.is_identity()) throw UsageError("start element must not be the identity");

  std::vector<Element> added{start};
  auto d = decompose(G, GeneratorSet{start});
  result.trace.push_back(GrowStep{start, std::nullopt, d.count()});
  result.rank_bound = d.count();

  std::size_t next_pick = 0;
  while (d.count() > 1) {
    const auto home = d.block_of(start);
    Element v2;
    if (policy.kind == SelectionPolicy::Kind::first_in_order) {
      for (auto g : G.elements()) {
        if (d.block_of(g) != home) {
          v2 = g;
          break;
        }
      }
    } else {
      if (next_pick == policy.script.size())
        throw UsageError("selection script exhausted after " + std::to_string(next_pick) +
                         " picks while the graph is still disconnected");
      v2 = policy.script[next_pick++];
      G.check(v2);
      if (d.block_of(v2) == home)
        throw UsageError("scripted pick '" + G.name(v2) +
                         "' lies in the component of the start element");
    }
    const auto a = G.multiply(G.inverse(start), v2);
    added.push_back(a);
    const auto before = d.count();
    GeneratorSet grown;
    for (auto x : added) grown.insert(x);
    d = decompose(G, grown);
    if (d.count() >= before) throw DefectError("grow step did not reduce the component count");
    result.trace.push_back(GrowStep{a, v2, d.count()});
  }
  if (policy.kind == SelectionPolicy::Kind::scripted && next_pick != policy.script.size())
    throw UsageError("selection script has " + std::to_string(policy.script.size() - next_pick) +
                     " unused picks");
  result.grow_size = added.size();

  auto pruned = prune(G, added);
  for (const auto& s : pruned.steps) result.trace.push_back(s);
  result.generators = std::move(pruned.kept);

  if (!generates(G, result.generators))
    throw DefectError("grow-then-prune result does not generate the group");
  for (auto m : result.generators)
    if (generates(G, result.generators.without(m)))
      throw DefectError("grow-then-prune result is not minimal");
  return result;
}

struct MinimalityEntry {
  Element removed;
  std::size_t closure_order = 0;  // |<M \ {m}>|
  std::size_t index = 0;          // [G : <M \ {m}>]
};

struct MinimalityReport {
  std::vector<MinimalityEntry> entries;
  bool minimal = true;
};

// For each m in a generating set M, the subgroup left after removing m.
inline MinimalityReport explain_minimality(const FiniteGroup& G, const GeneratorSet& M) {
  check_members(G, M);
  if (!generates(G, M)) throw UsageError("set does not generate the group");
  MinimalityReport report;
  for (auto m : M) {
    const auto H = closure(G, M.without(m));
    report.entries.push_back({m, H.order(), index(G, H)});
    if (H.order() == G.order()) report.minimal = false;
  }
  return report;
}

}  // namespace mingen
