#pragma once

// Command-line front end. Kept in a header so tests can drive run() in-process.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mingen/mingen.hpp"

namespace mingen::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kUsage = 2, kResource = 3, kDefect = 4 };

struct RunConfig {
  std::string table_path;
  std::string perm_path;
  std::string builtin;
  std::string gens;
  std::string start;
  std::string policy;
  std::string script;
  std::string mode = "star";
  std::string trace_json;
  std::string trace_in;
  std::string dot_path;
  bool undirected = false;
  std::size_t cap = 8;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
  if (!out) throw UsageError("error writing '" + path + "'");
}

inline FiniteGroup load_group(const RunConfig& cfg) {
  const int sources = !cfg.table_path.empty() + !cfg.perm_path.empty() + !cfg.builtin.empty();
  if (sources != 1) throw UsageError("give exactly one of --table, --perm, --builtin");
  if (!cfg.table_path.empty()) return parse_cayley_table(read_file(cfg.table_path));
  if (!cfg.perm_path.empty()) return parse_permutation_generators(read_file(cfg.perm_path));
  return build_standard(cfg.builtin);
}

// Splits on commas outside parentheses, so "(1,2),(2,3)" names two elements.
inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline Element resolve(const FiniteGroup& G, const std::string& name) {
  auto g = G.find(name);
  if (!g) throw DomainError("unknown element '" + name + "'");
  return *g;
}

inline GeneratorSet resolve_set(const FiniteGroup& G, const std::string& list) {
  GeneratorSet A;
  for (const auto& name : split_list(list)) A.insert(resolve(G, name));
  return A;
}

inline std::string join_names(const FiniteGroup& G, const auto& elems, const char* sep = ", ") {
  std::string out;
  for (auto g : elems) {
    if (!out.empty()) out += sep;
    out += G.name(g);
  }
  return out;
}

inline std::string braces(const FiniteGroup& G, const auto& elems) {
  return "{" + join_names(G, elems) + "}";
}

// --- subcommands -----------------------------------------------------------

inline int cmd_check(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.table_path.empty()) {
    try {
      auto G = parse_cayley_table(read_file(cfg.table_path));
      out << "valid group of order " << G.order() << "\n";
    } catch (const ValidationError& e) {
      out << "invalid table\n";
      for (const auto& v : e.report().violations) {
        out << "  " << to_string(v.law) << ":";
        for (auto w : v.witness) out << " " << w;
        out << "\n";
      }
      return kDomain;
    }
    return kOk;
  }
  auto G = load_group(cfg);
  out << "valid group of order " << G.order() << "\n";
  return kOk;
}

inline int cmd_info(const RunConfig& cfg, std::ostream& out) {
  auto G = load_group(cfg);
  out << "order: " << G.order() << "\n";
  out << "identity: " << G.name(kIdentity) << "\n";
  std::map<std::size_t, std::size_t> by_order;
  out << "elements:\n";
  for (auto g : G.elements()) {
    auto k = G.element_order(g);
    ++by_order[k];
    out << "  " << G.name(g) << "  order " << k << "  inverse " << G.name(G.inverse(g)) << "\n";
  }
  out << "element orders:";
  for (auto [k, c] : by_order) out << " " << k << "x" << c;
  out << "\n";
  return kOk;
}

inline int cmd_cayley(const RunConfig& cfg, std::ostream& out) {
  auto G = load_group(cfg);
  auto A = resolve_set(G, cfg.gens);
  auto dg = build_digraph(G, A);
  auto g = build_graph(G, A);
  auto dd = degree_stats(dg);
  auto gd = degree_stats(g);
  out << "generators: " << braces(G, A) << "\n";
  out << "arcs: " << dg.arcs().size() << "\n";
  out << "in-degree: " << dd.in_degree << "\n";
  out << "out-degree: " << dd.out_degree << "\n";
  out << "edges: " << g.edges().size() << "\n";
  out << "degree: " << gd.degree << "\n";
  out << "components: " << decompose(g).count() << "\n";
  if (!cfg.dot_path.empty()) write_file(cfg.dot_path, cfg.undirected ? to_dot(g) : to_dot(dg));
  return kOk;
}

inline int cmd_components(const RunConfig& cfg, std::ostream& out) {
  auto G = load_group(cfg);
  auto A = resolve_set(G, cfg.gens);
  auto g = build_graph(G, A);
  auto d = decompose(g);
  auto H = closure(G, A);
  out << "generators: " << braces(G, A) << "\n";
  out << "components: " << d.count() << "\n";
  out << "index of <A>: " << index(G, H) << "\n";
  for (std::size_t i = 0; i < d.count(); ++i)
    out << "  coset " << i + 1 << ": " << G.name(d.rep[i]) << "<A> = " << braces(G, d.blocks[i])
        << "\n";
  auto check = verify_coset_structure(G, A, d);
  out << "cosets match components: " << (check.holds ? "yes" : "no") << "\n";
  for (std::size_t j = 1; j < d.count(); ++j) translation_isomorphism(g, d, 0, j);
  out << "components isomorphic by translation: yes\n";
  return check.holds ? kOk : kDefect;
}

inline int cmd_closure(const RunConfig& cfg, std::ostream& out) {
  auto G = load_group(cfg);
  auto A = resolve_set(G, cfg.gens);
  auto H = closure(G, A);
  out << "<A> = " << braces(G, H.elements()) << "\n";
  out << "order: " << H.order() << "\n";
  out << "index: " << index(G, H) << "\n";
  out << "generates: " << (H.order() == G.order() ? "yes" : "no") << "\n";
  return kOk;
}

inline int cmd_connectors(const RunConfig& cfg, std::ostream& out) {
  auto G = load_group(cfg);
  auto A = resolve_set(G, cfg.gens);
  ConnectorMode mode;
  if (cfg.mode == "star") mode = ConnectorMode::star;
  else if (cfg.mode == "chain") mode = ConnectorMode::chain;
  else throw UsageError("--mode must be chain or star");
  auto d = decompose(G, A);
  auto S = connectors(G, A, d, mode);
  auto bound = rank_upper_bound(G, A);
  out << "components: " << d.count() << "\n";
  out << "representatives: " << join_names(G, d.rep) << "\n";
  out << cfg.mode << ": " << braces(G, S) << "\n";
  out << "size: " << S.size() << "\n";
  out << "connected: " << (is_connected(G, S) ? "yes" : "no") << "\n";
  out << "rank bound: " << bound.value << (bound.identity_dropped ? " (identity ignored)" : "")
      << "\n";
  return kOk;
}

inline void print_trace(const FiniteGroup& G, const GrowPruneTrace& trace, std::ostream& out) {
  out << "trace:\n";
  std::size_t i = 0;
  for (const auto& step : trace) {
    out << "  " << ++i << ". ";
    if (const auto* g = std::get_if<GrowStep>(&step)) {
      out << "grow  " << G.name(g->element);
      if (g->picked) out << " (v2 = " << G.name(*g->picked) << ")";
      out << "  components " << g->components << "\n";
    } else {
      const auto& p = std::get<PruneStep>(step);
      out << "prune " << G.name(p.element) << "  " << (p.connected ? "connected" : "disconnected")
          << ", " << (p.removed ? "removed" : "kept") << "\n";
    }
  }
}

inline int cmd_mingen(const RunConfig& cfg, std::ostream& out) {
  auto G = load_group(cfg);
  if (cfg.start.empty()) throw UsageError("--start is required");
  auto start = resolve(G, cfg.start);

  auto policy_name = cfg.policy.empty() ? (cfg.script.empty() ? "first" : "script") : cfg.policy;
  SelectionPolicy policy;
  if (policy_name == "script") {
    std::vector<Element> picks;
    for (const auto& name : split_list(cfg.script)) picks.push_back(resolve(G, name));
    policy = SelectionPolicy::scripted(std::move(picks));
  } else if (policy_name != "first") {
    throw UsageError("--policy must be first or script");
  } else if (!cfg.script.empty()) {
    throw UsageError("--script requires --policy script");
  }

  auto result = minimal_generating_set(G, start, policy);
  out << "start: " << G.name(start) << "\n";
  out << "policy: " << policy_name << "\n";
  print_trace(G, result.trace, out);
  out << "generators: " << join_names(G, result.generators) << "\n";
  out << "size: " << result.generators.size() << "\n";
  out << "rank bound from start: " << result.rank_bound << "\n";
  if (!result.generators.empty()) {
    auto report = explain_minimality(G, result.generators);
    out << "minimality:\n";
    for (const auto& e : report.entries)
      out << "  without " << G.name(e.removed) << ": subgroup of order " << e.closure_order
          << ", index " << e.index << "\n";
  }
  if (!cfg.trace_json.empty()) write_file(cfg.trace_json, trace_to_json_lines(G, result.trace));
  if (!cfg.dot_path.empty()) write_file(cfg.dot_path, to_dot(build_digraph(G, result.generators)));
  return kOk;
}

inline int cmd_verify_trace(const RunConfig& cfg, std::ostream& out) {
  auto G = load_group(cfg);
  if (cfg.trace_in.empty()) throw UsageError("--trace is required");
  auto recorded = trace_from_json_lines(G, read_file(cfg.trace_in));
  auto replay = replay_trace(G, recorded);
  out << "replayed steps: " << replay.rerun.trace.size() << "\n";
  out << "generators: " << join_names(G, replay.rerun.generators) << "\n";
  if (!replay.matches) {
    out << "trace mismatch: " << replay.message << "\n";
    return kDomain;
  }
  out << "trace verified\n";
  return kOk;
}

inline int cmd_rank(const RunConfig& cfg, std::ostream& out) {
  auto G = load_group(cfg);
  auto cert = min_generating_set_bruteforce(G, {.size_cap = cfg.cap});
  out << "rank: " << cert.rank << "\n";
  out << "witness: " << braces(G, cert.witness) << "\n";
  return kOk;
}

// --- entry point -----------------------------------------------------------

inline void add_source(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--table", cfg.table_path, "Cayley-table file");
  sub->add_option("--perm", cfg.perm_path, "permutation generator file");
  sub->add_option("--builtin", cfg.builtin,
                  "cyclic:N, dihedral:N, symmetric:N, klein4, product:F1,F2");
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley graphs and minimal generating sets of finite groups", "mingen"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* check = app.add_subcommand("check", "validate the group axioms");
  auto* info = app.add_subcommand("info", "order and element orders");
  auto* cayley = app.add_subcommand("cayley", "build Cay(G,A) and report degrees");
  auto* comps = app.add_subcommand("components", "components of Cay(G,A) and their cosets");
  auto* clos = app.add_subcommand("closure", "subgroup generated by A and its index");
  auto* conn = app.add_subcommand("connectors", "extend A to a generating set (S1/S2)");
  auto* mg = app.add_subcommand("mingen", "grow-then-prune minimal generating set");
  auto* verify = mg->add_subcommand("verify-trace", "replay a JSON-lines trace");
  auto* rank = app.add_subcommand("rank", "brute-force rank of G");

  for (auto* sub : {check, info, cayley, comps, clos, conn, mg, rank}) add_source(sub, cfg);
  add_source(verify, cfg);
  for (auto* sub : {cayley, comps, clos, conn})
    sub->add_option("--gens", cfg.gens, "comma-separated element names");
  cayley->add_option("--dot", cfg.dot_path, "write DOT to this file");
  cayley->add_flag("--undirected", cfg.undirected, "write the undirected graph instead");
  conn->add_option("--mode", cfg.mode, "chain or star")->check(CLI::IsMember({"chain", "star"}));
  mg->add_option("--start", cfg.start, "first generator a1");
  mg->add_option("--policy", cfg.policy, "first or script");
  mg->add_option("--script", cfg.script, "comma-separated picks for v2");
  mg->add_option("--trace-json", cfg.trace_json, "write the trace as JSON lines");
  mg->add_option("--dot", cfg.dot_path, "write the colour digraph of the result");
  mg->require_subcommand(0, 1);
  verify->add_option("--trace", cfg.trace_in, "trace file from --trace-json")->required();
  rank->add_option("--cap", cfg.cap, "largest subset size to try");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*check) return cmd_check(cfg, out);
    if (*info) return cmd_info(cfg, out);
    if (*cayley) return cmd_cayley(cfg, out);
    if (*comps) return cmd_components(cfg, out);
    if (*clos) return cmd_closure(cfg, out);
    if (*conn) return cmd_connectors(cfg, out);
    if (*verify) return cmd_verify_trace(cfg, out);
    if (*mg) return cmd_mingen(cfg, out);
    if (*rank) return cmd_rank(cfg, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DefectError& e) {
    err << "internal error: " << e.what() << "\n";
    return kDefect;
  }
  return kUsage;
}

}  // namespace mingen::cli
