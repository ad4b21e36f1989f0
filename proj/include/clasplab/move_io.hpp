#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "clasplab/diagram_io.hpp"
#include "clasplab/moves.hpp"

namespace clasplab {

inline const char* move_keyword(MoveKind k) {
  switch (k) {
    case MoveKind::kHandle0: return "h0";
    case MoveKind::kHandle1: return "h1";
    case MoveKind::kR1: return "r1";
    case MoveKind::kR1Inverse: return "r1i";
    case MoveKind::kR2: return "r2";
    case MoveKind::kR2Inverse: return "r2i";
    case MoveKind::kR3: return "r3";
    case MoveKind::kTranspose: return "tr";
  }
  return "?";
}

inline const char* variant_keyword(Variant v) {
  switch (v) {
    case Variant::kUp: return "up";
    case Variant::kDown: return "down";
    case Variant::kNone: return "";
  }
  return "";
}

// Grammar: <op> [@anchor] [position] [up|down]
inline Move parse_move(std::string_view line, std::size_t line_no = 0) {
  auto fail = [&](const std::string& why) -> Move {
    throw Error(ErrorCode::kParseError,
                (line_no ? "line " + std::to_string(line_no) + ": " : std::string()) + why,
                line_no ? std::optional<std::size_t>(line_no) : std::nullopt);
  };
  auto tok = detail::split_ws(detail::trim(line));
  if (tok.empty()) return fail("empty move");
  Move m;
  bool known = false;
  for (MoveKind k : {MoveKind::kHandle0, MoveKind::kHandle1, MoveKind::kR1, MoveKind::kR1Inverse,
                     MoveKind::kR2, MoveKind::kR2Inverse, MoveKind::kR3, MoveKind::kTranspose}) {
    if (tok[0] == move_keyword(k)) {
      m.kind = k;
      known = true;
    }
  }
  if (!known) return fail("unknown move '" + std::string(tok[0]) + "'");
  std::size_t i = 1;
  if (i < tok.size() && tok[i].starts_with('@')) {
    int a = 0;
    if (!detail::parse_int(tok[i].substr(1), a) || a < 1)
      return fail("bad anchor '" + std::string(tok[i]) + "'");
    m.anchor = static_cast<std::size_t>(a);
    ++i;
  }
  if (i < tok.size() && tok[i] != "up" && tok[i] != "down") {
    if (!detail::parse_int(tok[i], m.position) || m.position < 1)
      return fail("bad position '" + std::string(tok[i]) + "'");
    ++i;
  }
  if (i < tok.size()) {
    if (tok[i] == "up") m.variant = Variant::kUp;
    else if (tok[i] == "down") m.variant = Variant::kDown;
    else return fail("bad variant '" + std::string(tok[i]) + "'");
    ++i;
  }
  if (i != tok.size()) return fail("trailing tokens");
  return m;
}

inline std::string serialize_move(const Move& m) {
  std::string out = move_keyword(m.kind);
  if (m.anchor) out += " @" + std::to_string(m.anchor);
  if (m.position) out += " " + std::to_string(m.position);
  if (m.variant != Variant::kNone) out += std::string(" ") + variant_keyword(m.variant);
  return out;
}

struct MoveScript {
  std::vector<Move> moves;
  bool operator==(const MoveScript&) const = default;
};

inline MoveScript parse_script(std::string_view text) {
  MoveScript s;
  detail::for_each_content_line(text, [&](std::size_t line, std::string_view content) {
    s.moves.push_back(parse_move(content, line));
  });
  return s;
}

inline std::string serialize_script(const MoveScript& s) {
  std::string out;
  for (const Move& m : s.moves) out += serialize_move(m) + "\n";
  return out;
}

}  // namespace clasplab
