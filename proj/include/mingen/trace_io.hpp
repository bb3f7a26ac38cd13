#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mingen/error.hpp"
#include "mingen/genset.hpp"
#include "mingen/group.hpp"

namespace mingen {

// JSON lines, one object per trace step:
//   {"kind":"grow","element":"b","components":6}
//   {"kind":"prune","element":"a","connected":true,"removed":true}
inline std::string trace_to_json_lines(const FiniteGroup& G, const GrowPruneTrace& trace) {
  std::string out;
  for (const auto& step : trace) {
    nlohmann::ordered_json j;
    if (const auto* g = std::get_if<GrowStep>(&step)) {
      j["kind"] = "grow";
      j["element"] = G.name(g->element);
      j["components"] = g->components;
    } else {
      const auto& p = std::get<PruneStep>(step);
      j["kind"] = "prune";
      j["element"] = G.name(p.element);
      j["connected"] = p.connected;
      j["removed"] = p.removed;
    }
    out += j.dump();
    out += '\n';
  }
  return out;
}

// Reads a trace back. Grow steps after the first get picked = start * element.
inline GrowPruneTrace trace_from_json_lines(const FiniteGroup& G, std::string_view text) {
  GrowPruneTrace trace;
  std::size_t line_no = 0, start = 0;
  std::optional<Element> first;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, e.what());
    }
    auto name_of = [&](const char* key) {
      if (!j.contains(key) || !j[key].is_string())
        throw ParseError(line_no, std::string("missing string field '") + key + "'");
      auto name = j[key].get<std::string>();
      auto el = G.find(name);
      if (!el) throw ParseError(line_no, "unknown element '" + name + "'");
      return *el;
    };
    auto flag = [&](const char* key) {
      if (!j.contains(key) || !j[key].is_boolean())
        throw ParseError(line_no, std::string("missing boolean field '") + key + "'");
      return j[key].get<bool>();
    };
    const auto kind = j.value("kind", std::string{});
    if (kind == "grow") {
      if (!j.contains("components") || !j["components"].is_number_unsigned())
        throw ParseError(line_no, "missing field 'components'");
      GrowStep s{name_of("element"), std::nullopt, j["components"].get<std::size_t>()};
      if (first) s.picked = G.multiply(*first, s.element);
      else first = s.element;
      trace.push_back(s);
    } else if (kind == "prune") {
      trace.push_back(PruneStep{name_of("element"), flag("connected"), flag("removed")});
    } else {
      throw ParseError(line_no, "kind must be \"grow\" or \"prune\"");
    }
  }
  return trace;
}

struct TraceReplay {
  bool matches = false;
  MinGenResult rerun;
  std::string message;
};

// Re-runs the search with the trace's start element and picks, and compares
// the fresh trace with the recorded one step by step.
inline TraceReplay replay_trace(const FiniteGroup& G, const GrowPruneTrace& recorded) {
  if (recorded.empty() || !std::holds_alternative<GrowStep>(recorded.front()))
    throw UsageError("trace must start with a grow step");
  const auto start = std::get<GrowStep>(recorded.front()).element;
  std::vector<Element> picks;
  for (std::size_t i = 1; i < recorded.size(); ++i)
    if (const auto* g = std::get_if<GrowStep>(&recorded[i]); g && g->picked)
      picks.push_back(*g->picked);

  TraceReplay replay;
  replay.rerun = minimal_generating_set(G, start, SelectionPolicy::scripted(picks));
  const auto& fresh = replay.rerun.trace;
  if (fresh.size() != recorded.size()) {
    replay.message = "trace length " + std::to_string(recorded.size()) + ", replay produced " +
                     std::to_string(fresh.size());
    return replay;
  }
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    if (fresh[i] != recorded[i]) {
      replay.message = "step " + std::to_string(i + 1) + " differs";
      return replay;
    }
  }
  replay.matches = true;
  return replay;
}

}  // namespace mingen
