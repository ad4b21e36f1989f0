#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "clasplab/diagram.hpp"

namespace clasplab {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Calls fn(line_number, content) for every non-blank line with comments cut.
template <class Fn>
void for_each_content_line(std::string_view text, Fn&& fn) {
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) fn(line, raw);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

}  // namespace detail

struct ParsedDiagram {
  FrontDiagram diagram;
  std::vector<std::size_t> lines;  // source line of each event
};

inline ParsedDiagram parse_diagram_with_lines(std::string_view text, bool strict = false) {
  std::vector<Event> events;
  std::vector<std::size_t> lines;
  detail::for_each_content_line(text, [&](std::size_t line, std::string_view content) {
    auto tok = detail::split_ws(content);
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + why, line);
    };
    if (tok.size() != 2) fail("expected '<lc|rc|x> <position>'");
    Event e;
    if (tok[0] == "lc") e.kind = EventKind::kLeftCusp;
    else if (tok[0] == "rc") e.kind = EventKind::kRightCusp;
    else if (tok[0] == "x") e.kind = EventKind::kCrossing;
    else fail("unknown event '" + std::string(tok[0]) + "'");
    if (!detail::parse_int(tok[1], e.position)) fail("bad position '" + std::string(tok[1]) + "'");
    if (e.position < 1) fail("positions are 1-based");
    events.push_back(e);
    lines.push_back(line);
  });
  ParsedDiagram out{FrontDiagram(std::move(events)), std::move(lines)};
  if (strict) {
    auto report = validate(out.diagram);
    if (!report.ok()) {
      const auto& v = report.violations.front();
      std::size_t line = v.event >= 1 && v.event <= out.lines.size() ? out.lines[v.event - 1] : 0;
      throw Error(ErrorCode::kInvalidDiagram,
                  "line " + std::to_string(line) + " (event " + std::to_string(v.event) +
                      "): " + v.message,
                  line);
    }
  }
  return out;
}

inline FrontDiagram parse_diagram(std::string_view text, bool strict = false) {
  return parse_diagram_with_lines(text, strict).diagram;
}

inline const char* event_keyword(EventKind kind) {
  switch (kind) {
    case EventKind::kLeftCusp: return "lc";
    case EventKind::kRightCusp: return "rc";
    case EventKind::kCrossing: return "x";
  }
  return "?";
}

inline std::string serialize_diagram(const FrontDiagram& d) {
  std::string out;
  for (const Event& e : d.events()) {
    out += event_keyword(e.kind);
    out += ' ';
    out += std::to_string(e.position);
    out += '\n';
  }
  return out;
}

}  // namespace clasplab
