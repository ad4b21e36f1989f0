#pragma once

// Brute-force oracles and the shared test corpus.  The oracles work on full
// per-slice arrays and never call the library's scanners.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "clasplab/clasplab.hpp"

namespace oracle {

using namespace clasplab;

// Resolution by hand: every strand keeps its slot through a switch.
struct Slices {
  std::vector<std::vector<int>> strand;  // per slice, strand id per position
  std::vector<int> eye;                  // strand id -> eye root
  std::vector<int> side;                 // 0 lower, 1 upper at birth
  bool ok = true;
};

inline Slices resolve_slices(const FrontDiagram& d, const std::set<int>& sw) {
  Slices out;
  std::vector<int> parent;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::vector<int> cur;
  out.strand.push_back(cur);
  std::vector<std::pair<int, int>> switch_pairs;
  std::vector<std::pair<int, int>> plain_pairs;
  std::vector<std::size_t> switch_slices;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Event& e = d[i];
    const int p = e.position - 1;
    if (e.kind == EventKind::kLeftCusp) {
      int id = static_cast<int>(parent.size());
      parent.push_back(id);
      parent.push_back(id + 1);
      out.side.push_back(0);
      out.side.push_back(1);
      parent[id + 1] = id;
      cur.insert(cur.begin() + p, {id, id + 1});
    } else if (e.kind == EventKind::kRightCusp) {
      int a = find(cur[p]), b = find(cur[p + 1]);
      if (a != b) parent[a] = b;
      cur.erase(cur.begin() + p, cur.begin() + p + 2);
    } else if (sw.count(d.crossing_ordinal(i))) {
      switch_pairs.emplace_back(cur[p], cur[p + 1]);
      switch_slices.push_back(i);
    } else {
      plain_pairs.emplace_back(cur[p], cur[p + 1]);
      std::swap(cur[p], cur[p + 1]);
    }
    out.strand.push_back(cur);
  }
  out.eye.resize(parent.size());
  std::map<int, int> births;
  for (std::size_t s = 0; s < parent.size(); ++s) {
    out.eye[s] = find(static_cast<int>(s));
    if (s % 2 == 0) ++births[out.eye[s]];
  }
  // (1) one left cusp per eye, and eyes never cross themselves
  for (auto [root, n] : births)
    if (n != 1) out.ok = false;
  for (auto [a, b] : plain_pairs)
    if (out.eye[a] == out.eye[b]) out.ok = false;
  // (2) switches join different eyes; (3) those eyes are disjoint or nested
  for (std::size_t k = 0; k < switch_pairs.size() && out.ok; ++k) {
    auto [a, b] = switch_pairs[k];
    const int ea = out.eye[a], eb = out.eye[b];
    if (ea == eb) {
      out.ok = false;
      break;
    }
    const auto& sl = out.strand[switch_slices[k]];
    int lo_a = 1 << 30, hi_a = -1, lo_b = 1 << 30, hi_b = -1;
    for (int q = 0; q < static_cast<int>(sl.size()); ++q) {
      if (out.eye[sl[q]] == ea) lo_a = std::min(lo_a, q), hi_a = std::max(hi_a, q);
      if (out.eye[sl[q]] == eb) lo_b = std::min(lo_b, q), hi_b = std::max(hi_b, q);
    }
    const bool disjoint = hi_a < lo_b || hi_b < lo_a;
    const bool nested = (lo_a < lo_b && hi_b < hi_a) || (lo_b < lo_a && hi_a < hi_b);
    if (!disjoint && !nested) out.ok = false;
  }
  return out;
}

inline bool is_ruling(const FrontDiagram& d, const std::vector<int>& sw) {
  return resolve_slices(d, std::set<int>(sw.begin(), sw.end())).ok;
}

inline std::vector<NormalRuling> brute_force_rulings(const FrontDiagram& d) {
  const int c = d.crossing_count();
  std::vector<NormalRuling> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    std::vector<int> sw;
    for (int k = 0; k < c; ++k)
      if (mask >> k & 1) sw.push_back(k + 1);
    if (is_ruling(d, sw)) out.emplace_back(sw);
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

// Clasps per eye pair, from the configuration of every single slice.
// Eye pairs are keyed by the eyes' birth order, like the library.
inline std::map<std::pair<int, int>, int> brute_force_clasps(const FrontDiagram& d,
                                                             const NormalRuling& r) {
  auto sl = resolve_slices(d, std::set<int>(r.switches.begin(), r.switches.end()));
  std::map<int, int> order;  // eye root -> birth index
  for (std::size_t s = 0; s < sl.eye.size(); s += 2) order.emplace(sl.eye[s], static_cast<int>(s / 2));
  const int eyes = static_cast<int>(order.size());
  std::vector<int> eye_of(sl.eye.size());
  for (std::size_t s = 0; s < sl.eye.size(); ++s) eye_of[s] = order[sl.eye[s]];

  auto config = [&](std::size_t i, int a, int b) -> int {  // 0 absent, 1 ok, 2 interleaved
    std::vector<int> pat;
    for (int s : sl.strand[i])
      if (eye_of[s] == a || eye_of[s] == b) pat.push_back(eye_of[s]);
    if (pat.size() < 4) return 0;
    return (pat[0] != pat[1] && pat[0] != pat[3]) ? 2 : 1;
  };
  std::map<std::pair<int, int>, int> out;
  for (int a = 0; a < eyes; ++a) {
    for (int b = a + 1; b < eyes; ++b) {
      int clasps = 0;
      std::size_t i = 0;
      while (i < sl.strand.size()) {
        if (config(i, a, b) != 2) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j + 1 < sl.strand.size() && config(j + 1, a, b) == 2) ++j;
        // events i-1 and j bound the run
        auto strands_of = [&](std::size_t ev) {
          const int p = d[ev].position - 1;
          const auto& before = sl.strand[ev];
          int x = before[p], y = before[p + 1];
          if (eye_of[x] != a) std::swap(x, y);
          return std::pair{x, y};
        };
        auto in = strands_of(i - 1);
        auto out_ = strands_of(j);
        const int shared = (in.first == out_.first) + (in.second == out_.second);
        if (shared != 1) ++clasps;
        i = j + 1;
      }
      out[{a, b}] = clasps;
    }
  }
  return out;
}

}  // namespace oracle

namespace corpus {

using namespace clasplab;

struct Named {
  std::string name;
  FrontDiagram diagram;
};

// Random closed generic front with about `events` events.
inline FrontDiagram random_front(std::mt19937_64& rng, int events, int max_strands = 8) {
  std::vector<Event> ev;
  int s = 0;
  auto roll = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  while (true) {
    const int remaining = events - static_cast<int>(ev.size());
    if (remaining <= 0 && s == 0) break;
    std::vector<EventKind> opts;
    if (s + 2 <= max_strands && remaining > s / 2) opts.push_back(EventKind::kLeftCusp);
    if (s >= 2) {
      opts.push_back(EventKind::kRightCusp);
      opts.push_back(EventKind::kCrossing);
      opts.push_back(EventKind::kCrossing);
    }
    if (remaining <= s / 2) opts = {s >= 2 ? EventKind::kRightCusp : EventKind::kLeftCusp};
    const EventKind k = opts[roll(static_cast<int>(opts.size()))];
    if (k == EventKind::kLeftCusp) ev.push_back(left_cusp(1 + roll(s + 1))), s += 2;
    else if (k == EventKind::kRightCusp) ev.push_back(right_cusp(1 + roll(s - 1))), s -= 2;
    else ev.push_back(crossing(1 + roll(s - 1)));
  }
  return FrontDiagram(std::move(ev));
}

// Plat closure of a random braid word, then a few random isotopy moves so
// cusps and crossings get mixed up.  These carry many rulings.
inline FrontDiagram random_plat(std::mt19937_64& rng, int max_letters = 12, int max_moves = 8) {
  const int s = 2 + static_cast<int>(rng() % 3);
  const int len = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_letters - 2));
  std::vector<int> w;
  for (int j = 0; j < len; ++j) w.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(s - 1)));
  FrontDiagram d = generate_negative_braid_closure(s, w);
  const int steps = static_cast<int>(rng() % static_cast<std::uint64_t>(max_moves + 1));
  for (int j = 0; j < steps; ++j) {
    std::vector<Move> ms;
    for (const auto& m : enumerate_applicable_moves(d))
      if (is_isotopy(m.kind) && m.kind != MoveKind::kR1) ms.push_back(m);
    if (ms.empty()) break;
    d = apply_move(d, ms[rng() % ms.size()]).diagram;
  }
  return d;
}

inline int script_length(std::uint64_t seed) { return 5 + static_cast<int>(seed % 21); }

inline FrontDiagram random_fillable(std::uint64_t seed) {
  return run_script(random_script(script_length(seed), seed)).diagram;
}

inline std::vector<Named> fixtures() {
  const std::vector<int> w111{1, 1, 1};
  const std::vector<int> w1212{1, 2, 1, 2};
  return {
      {"empty", FrontDiagram{}},
      {"unknot", generate_unknot()},
      {"trefoil", generate_trefoil()},
      {"unlink2", FrontDiagram{left_cusp(1), right_cusp(1), left_cusp(1), right_cusp(1)}},
      {"stacked2", FrontDiagram{left_cusp(1), left_cusp(3), right_cusp(3), right_cusp(1)}},
      {"braid2_111", generate_negative_braid_closure(2, w111)},
      {"braid3_1212", generate_negative_braid_closure(3, w1212)},
      {"clasp_pair", FrontDiagram{left_cusp(1), left_cusp(2), crossing(1), crossing(3), crossing(1),
                                  right_cusp(2), right_cusp(1)}},
      {"torus4_0", generate_torus4(0)},
  };
}

// unknot, trefoil, torus4(0) and 100 random fillable diagrams
inline std::vector<Named> invariance_corpus() {
  std::vector<Named> out{{"unknot", generate_unknot()},
                         {"trefoil", generate_trefoil()},
                         {"torus4_0", generate_torus4(0)}};
  for (std::uint64_t seed = 1; seed <= 100; ++seed)
    out.push_back({"fillable_" + std::to_string(seed), random_fillable(seed)});
  return out;
}

}  // namespace corpus
