#pragma once

#include <json.hpp>

#include "clasplab/fillability.hpp"
#include "clasplab/generators.hpp"

namespace clasplab {

using json = nlohmann::ordered_json;

inline json to_json(const NormalRuling& r) { return json(r.switches); }

inline json to_json(const std::vector<NormalRuling>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(to_json(r));
  return out;
}

inline json to_json(const ClaspReport& rep) {
  json pairs = json::array();
  for (const auto& p : rep.pairs)
    pairs.push_back({{"eyes", {p.eye_a, p.eye_b}}, {"clasps", p.clasps}});
  return {{"pairs", std::move(pairs)}, {"total", rep.total}, {"parity", parity_name(rep.parity)}};
}

inline json to_json(const ValidationReport& rep, const std::vector<std::size_t>& lines = {}) {
  json v = json::array();
  for (const auto& x : rep.violations) {
    json item = {{"event", x.event}};
    if (x.event >= 1 && x.event <= lines.size()) item["line"] = lines[x.event - 1];
    item["rule"] = x.rule;
    item["message"] = x.message;
    v.push_back(std::move(item));
  }
  return {{"ok", rep.ok()}, {"violations", std::move(v)}};
}

inline json to_json(const FrontDiagram& d) {
  json events = json::array();
  for (const Event& e : d.events()) events.push_back({event_keyword(e.kind), e.position});
  int comps = 0;
  if (is_valid(d)) comps = trace_components(d).component_count();
  return {{"events", std::move(events)},
          {"crossings", d.crossing_count()},
          {"components", comps},
          {"text", serialize_diagram(d)}};
}

inline json to_json(const ObstructionVerdict& v) {
  json ev = json::array();
  for (const auto& e : v.evidence)
    ev.push_back({{"ruling", to_json(e.ruling)}, {"clasps", e.clasps}, {"parity", parity_name(e.parity)}});
  return {{"verdict", verdict_name(v.verdict)},
          {"evidence", std::move(ev)},
          {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
          {"note", v.note}};
}

inline json to_json(const MoveScript& s) {
  json out = json::array();
  for (const auto& m : s.moves) out.push_back(serialize_move(m));
  return out;
}

inline json to_json(const FillingCertificate& c) {
  return {{"script", to_json(c.script)},
          {"diagram", to_json(c.diagram)},
          {"ruling", to_json(c.ruling)},
          {"clasps", to_json(c.clasps)}};
}

inline json to_json(const SearchResult& r) {
  return {{"status", search_status_name(r.status)},
          {"script", r.script ? to_json(*r.script) : json(nullptr)},
          {"stats",
           {{"expanded", r.stats.expanded},
            {"generated", r.stats.generated},
            {"depth_reached", r.stats.depth_reached},
            {"budget_hit", r.stats.budget_hit}}},
          {"note", r.note}};
}

inline json to_json(const Error& e) {
  json out = {{"error", error_name(e.code())}, {"message", e.what()}};
  if (e.location()) out["location"] = *e.location();
  return out;
}

}  // namespace clasplab
