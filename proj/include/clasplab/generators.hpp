#pragma once

#include <span>
#include <string>
#include <vector>

#include "clasplab/diagram.hpp"

namespace clasplab {

inline FrontDiagram generate_unknot() { return {left_cusp(1), right_cusp(1)}; }

inline FrontDiagram generate_trefoil() {
  return {left_cusp(1), left_cusp(3), crossing(2), crossing(2),
          crossing(2),  right_cusp(3), right_cusp(1)};
}

// Plat closure: s nested left cusps pair strand i with 2s+1-i, the letters
// become crossings, s nested right cusps close the same pairing.  Between
// co-oriented strands a front crossing is positive, so for the (4, k) words
// this yields the positive torus knot, not the mirror.
inline FrontDiagram generate_negative_braid_closure(int strands, std::span<const int> word) {
  if (strands < 2) throw Error(ErrorCode::kInvalidBraidLetter, "need at least 2 strands");
  if (word.empty()) throw Error(ErrorCode::kInvalidBraidLetter, "empty braid word");
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 1 || word[i] > strands - 1)
      throw Error(ErrorCode::kInvalidBraidLetter,
                  "letter " + std::to_string(word[i]) + " outside 1.." + std::to_string(strands - 1),
                  i + 1);
  }
  // Letters act on the lower s strands, the descending halves of the plat.
  std::vector<Event> ev;
  for (int i = 0; i < strands; ++i) ev.push_back(left_cusp(i + 1));
  for (int j : word) ev.push_back(crossing(j));
  for (int i = strands; i >= 1; --i) ev.push_back(right_cusp(i));
  return FrontDiagram(std::move(ev));
}

namespace detail {

// Four vertically stacked copies of the standard eye, opened as a band of
// four strands at slots 1..4 that run to the right.  The copies' cusps are
// staggered, which puts a full negative twist of the band into the front.
inline std::vector<Event> satellite_open() {
  return {left_cusp(1), left_cusp(3), crossing(2), left_cusp(5), crossing(4),
          crossing(3),  left_cusp(7), crossing(6), crossing(5),  crossing(4)};
}

inline std::vector<Event> satellite_close() {
  std::vector<Event> out;
  auto open = satellite_open();
  for (auto it = open.rbegin(); it != open.rend(); ++it)
    out.push_back(it->kind == EventKind::kLeftCusp ? right_cusp(it->position) : *it);
  return out;
}

}  // namespace detail

// Legendrian (4, -(2n+5)) torus knot: the 4-copy satellite of the max-tb
// unknot with 2n+1 extra zigzag units [lc 1, x 2, x 3, x 4, rc 5] on the
// band.  Each unit adds a 1/4 negative twist.  3(2n+5) crossings.
inline FrontDiagram generate_torus4(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidDiagram, "torus4 needs n >= 0");
  std::vector<Event> ev = detail::satellite_open();
  for (int k = 0; k < 2 * n + 1; ++k) {
    ev.push_back(left_cusp(1));
    ev.push_back(crossing(2));
    ev.push_back(crossing(3));
    ev.push_back(crossing(4));
    ev.push_back(right_cusp(5));
  }
  auto tail = detail::satellite_close();
  ev.insert(ev.end(), tail.begin(), tail.end());
  return FrontDiagram(std::move(ev));
}

// Disjoint union: b drawn to the right of a.
inline FrontDiagram disjoint_union(const FrontDiagram& a, const FrontDiagram& b) {
  std::vector<Event> ev(a.events().begin(), a.events().end());
  ev.insert(ev.end(), b.events().begin(), b.events().end());
  return FrontDiagram(std::move(ev));
}

}  // namespace clasplab
