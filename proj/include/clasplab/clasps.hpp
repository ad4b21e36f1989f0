#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "clasplab/rulings.hpp"

namespace clasplab {

// Strand of an eye: side 0 is the lower strand at birth, 1 the upper.
// Eyes never cross themselves, so the side is a stable name.
struct EyeStrand {
  int eye = -1;
  int side = 0;
  bool operator==(const EyeStrand&) const = default;
};

// Non-switch crossing between two different eyes.  `below` is the strand at
// position p just before the crossing, `above` the one at p+1.
struct InterEyeCrossing {
  int ordinal = 0;
  std::size_t event = 0;  // 0-based
  int position = 0;
  EyeStrand below;
  EyeStrand above;
};

struct SwitchTouch {
  int ordinal = 0;
  std::size_t event = 0;
  int position = 0;
  int lower_eye = -1;
  int upper_eye = -1;
};

struct Resolution {
  FrontDiagram diagram;
  NormalRuling ruling;
  int eye_count = 0;
  // Slice i sits before event i; slices has size()+1 entries.
  std::vector<std::vector<EyeStrand>> slices;
  std::vector<InterEyeCrossing> crossings;
  std::vector<SwitchTouch> switches;
  std::vector<std::size_t> birth_event;
  std::vector<std::size_t> death_event;
};

inline Resolution resolve(const FrontDiagram& d, const NormalRuling& r) {
  auto check = check_normal_ruling(d, r);
  if (!check.ok)
    throw Error(ErrorCode::kInvalidRuling, "not a normal ruling: " + check.reason, check.event);
  Resolution res;
  res.diagram = d;
  res.ruling = r;
  std::vector<EyeStrand> cur;
  res.slices.push_back(cur);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Event& e = d[i];
    const int p = e.position - 1;
    switch (e.kind) {
      case EventKind::kLeftCusp: {
        const int id = res.eye_count++;
        cur.insert(cur.begin() + p, {EyeStrand{id, 0}, EyeStrand{id, 1}});
        res.birth_event.push_back(i);
        res.death_event.push_back(d.size());
        break;
      }
      case EventKind::kRightCusp:
        res.death_event[cur[p].eye] = i;
        cur.erase(cur.begin() + p, cur.begin() + p + 2);
        break;
      case EventKind::kCrossing: {
        const int ord = d.crossing_ordinal(i);
        if (r.contains(ord)) {
          res.switches.push_back({ord, i, e.position, cur[p].eye, cur[p + 1].eye});
        } else {
          res.crossings.push_back({ord, i, e.position, cur[p], cur[p + 1]});
          std::swap(cur[p], cur[p + 1]);
        }
        break;
      }
    }
    res.slices.push_back(cur);
  }
  return res;
}

enum class PairConfig { kAbsent, kDisjoint, kNested, kInterleaved };

inline const char* config_name(PairConfig c) {
  switch (c) {
    case PairConfig::kAbsent: return "absent";
    case PairConfig::kDisjoint: return "disjoint";
    case PairConfig::kNested: return "nested";
    case PairConfig::kInterleaved: return "interleaved";
  }
  return "?";
}

namespace detail {

// Bottom-to-top eye letters of the two eyes, e.g. ABAB.
inline PairConfig classify_pattern(const std::array<int, 4>& pat) {
  if (pat[0] == pat[1]) return PairConfig::kDisjoint;
  if (pat[0] == pat[3]) return PairConfig::kNested;
  return PairConfig::kInterleaved;
}

inline void check_eyes(const Resolution& res, int a, int b) {
  if (a < 0 || b < 0 || a >= res.eye_count || b >= res.eye_count || a == b)
    throw Error(ErrorCode::kUnknownEye, "no eye pair (" + std::to_string(a) + ", " +
                                            std::to_string(b) + ") in this resolution");
}

}  // namespace detail

struct PairScan {
  int clasps = 0;
  int interactions = 0;  // crossings or switch touches between the two eyes
  std::vector<std::pair<std::size_t, std::size_t>> clasp_events;  // entry, exit (0-based)
};

// Follows the 4-strand pattern of eyes a and b from the later birth onward,
// updating only at crossings between them.  A maximal interleaved stretch is
// a clasp unless its two bounding crossings share exactly one strand: then
// one strand just passed through both strands of the other eye.
inline PairScan scan_pair(const Resolution& res, int a, int b) {
  detail::check_eyes(res, a, b);
  if (a > b) std::swap(a, b);
  PairScan out;
  const std::size_t from = res.birth_event[b];
  const std::size_t to = std::min(res.death_event[a], res.death_event[b]);
  if (res.death_event[a] < from) return out;

  std::array<EyeStrand, 4> strands{};
  {
    int k = 0;
    for (const EyeStrand& s : res.slices[from + 1])
      if (s.eye == a || s.eye == b) strands[k++] = s;
  }
  auto letters = [&] {
    return std::array<int, 4>{strands[0].eye, strands[1].eye, strands[2].eye, strands[3].eye};
  };
  PairConfig cfg = detail::classify_pattern(letters());
  if (cfg == PairConfig::kInterleaved)
    throw Error(ErrorCode::kUnclassifiedInterval, "eye born interleaved", from + 1);

  std::pair<EyeStrand, EyeStrand> entry;  // (strand of a, strand of b)
  std::size_t entry_event = 0;
  auto touches = [&](std::size_t ev) { return ev > from && ev < to; };
  for (const SwitchTouch& sw : res.switches) {
    if (!touches(sw.event)) continue;
    if ((sw.lower_eye == a && sw.upper_eye == b) || (sw.lower_eye == b && sw.upper_eye == a)) {
      ++out.interactions;
      // normality keeps switches out of interleaved stretches; check anyway
      PairConfig at = PairConfig::kAbsent;
      {
        std::array<int, 4> pat{};
        int k = 0;
        for (const EyeStrand& s : res.slices[sw.event])
          if (s.eye == a || s.eye == b) pat[k++] = s.eye;
        at = detail::classify_pattern(pat);
      }
      if (at == PairConfig::kInterleaved)
        throw Error(ErrorCode::kUnclassifiedInterval,
                    "switch touch inside an interleaved interval", sw.event + 1);
    }
  }
  for (const InterEyeCrossing& x : res.crossings) {
    if (!touches(x.event)) continue;
    const bool ours = (x.below.eye == a && x.above.eye == b) || (x.below.eye == b && x.above.eye == a);
    if (!ours) continue;
    ++out.interactions;
    int k = 0;
    while (k < 3 && !(strands[k] == x.below && strands[k + 1] == x.above)) ++k;
    if (k == 3) throw Error(ErrorCode::kUnclassifiedInterval, "pair pattern out of sync", x.event + 1);
    std::swap(strands[k], strands[k + 1]);
    const PairConfig next = detail::classify_pattern(letters());
    const auto ab = x.below.eye == a ? std::pair{x.below, x.above} : std::pair{x.above, x.below};
    if (next == PairConfig::kInterleaved) {
      entry = ab;
      entry_event = x.event;
    } else if (cfg == PairConfig::kInterleaved) {
      const int shared = (entry.first == ab.first) + (entry.second == ab.second);
      if (shared != 1) {
        ++out.clasps;
        out.clasp_events.emplace_back(entry_event, x.event);
      }
    }
    cfg = next;
  }
  if (cfg == PairConfig::kInterleaved)
    throw Error(ErrorCode::kUnclassifiedInterval, "eye dies interleaved", to + 1);
  return out;
}

inline int count_clasps_pair(const Resolution& res, int a, int b) {
  return scan_pair(res, a, b).clasps;
}

enum class Parity { kEven, kOdd };

inline const char* parity_name(Parity p) { return p == Parity::kEven ? "even" : "odd"; }

struct PairClasps {
  int eye_a = 0;
  int eye_b = 0;
  int clasps = 0;
  bool operator==(const PairClasps&) const = default;
};

struct ClaspReport {
  std::vector<PairClasps> pairs;  // pairs that cross or touch at least once
  int total = 0;
  Parity parity = Parity::kEven;
  bool operator==(const ClaspReport&) const = default;
};

inline Parity parity(const ClaspReport& report) {
  return report.total % 2 == 0 ? Parity::kEven : Parity::kOdd;
}

inline ClaspReport clasp_report(const Resolution& res) {
  ClaspReport rep;
  for (int a = 0; a < res.eye_count; ++a) {
    for (int b = a + 1; b < res.eye_count; ++b) {
      auto scan = scan_pair(res, a, b);
      if (scan.interactions == 0) continue;
      rep.pairs.push_back({a, b, scan.clasps});
      rep.total += scan.clasps;
    }
  }
  rep.parity = parity(rep);
  return rep;
}

inline ClaspReport clasp_report(const FrontDiagram& d, const NormalRuling& r) {
  return clasp_report(resolve(d, r));
}

}  // namespace clasplab
