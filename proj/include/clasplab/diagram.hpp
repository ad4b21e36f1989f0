#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clasplab/error.hpp"

namespace clasplab {

enum class EventKind : std::uint8_t { kLeftCusp, kRightCusp, kCrossing };

// Positions are 1-based, counted from the bottom strand.
struct Event {
  EventKind kind = EventKind::kCrossing;
  int position = 1;

  bool operator==(const Event&) const = default;
};

inline Event left_cusp(int p) { return {EventKind::kLeftCusp, p}; }
inline Event right_cusp(int p) { return {EventKind::kRightCusp, p}; }
inline Event crossing(int p) { return {EventKind::kCrossing, p}; }

inline int strand_delta(EventKind kind) {
  switch (kind) {
    case EventKind::kLeftCusp: return 2;
    case EventKind::kRightCusp: return -2;
    case EventKind::kCrossing: return 0;
  }
  return 0;
}

class FrontDiagram {
 public:
  FrontDiagram() = default;
  explicit FrontDiagram(std::vector<Event> events) : events_(std::move(events)) {
    index_crossings();
  }
  FrontDiagram(std::initializer_list<Event> events) : events_(events) {
    index_crossings();
  }

  std::span<const Event> events() const { return events_; }
  const std::vector<Event>& event_list() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  const Event& operator[](std::size_t i) const { return events_[i]; }

  int crossing_count() const { return static_cast<int>(crossing_events_.size()); }

  // 0-based event index of crossing `ordinal` (1-based).
  std::size_t crossing_event(int ordinal) const { return crossing_events_.at(ordinal - 1); }

  // 1-based ordinal of the crossing at event i, or 0 for cusps.
  int crossing_ordinal(std::size_t i) const { return ordinals_.at(i); }

  // Number of crossings strictly before event i (i may equal size()).
  int crossings_before(std::size_t i) const {
    return i >= events_.size() ? crossing_count()
                               : static_cast<int>(prefix_.at(i));
  }

  // Strand count of slice i: slice i sits just before event i, slice size()
  // after the last event.  Meaningful for valid words only.
  std::vector<int> strand_profile() const {
    std::vector<int> out(events_.size() + 1, 0);
    for (std::size_t i = 0; i < events_.size(); ++i)
      out[i + 1] = out[i] + strand_delta(events_[i].kind);
    return out;
  }

  bool operator==(const FrontDiagram& other) const { return events_ == other.events_; }

 private:
  void index_crossings() {
    ordinals_.assign(events_.size(), 0);
    prefix_.assign(events_.size(), 0);
    crossing_events_.clear();
    for (std::size_t i = 0; i < events_.size(); ++i) {
      prefix_[i] = crossing_events_.size();
      if (events_[i].kind == EventKind::kCrossing) {
        crossing_events_.push_back(i);
        ordinals_[i] = static_cast<int>(crossing_events_.size());
      }
    }
  }

  std::vector<Event> events_;
  std::vector<std::size_t> crossing_events_;
  std::vector<int> ordinals_;
  std::vector<std::size_t> prefix_;
};

struct Violation {
  std::size_t event = 0;  // 1-based; 0 only for structural problems of the empty tail
  std::string rule;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Stops at the first offending event: after a bad event the strand count
// no longer means anything.
inline ValidationReport validate(const FrontDiagram& d) {
  ValidationReport report;
  int s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Event& e = d[i];
    const std::size_t at = i + 1;
    auto fail = [&](std::string rule, std::string msg) {
      report.violations.push_back({at, std::move(rule), std::move(msg)});
    };
    if (e.position < 1) {
      fail("position-range", "positions are 1-based");
      return report;
    }
    switch (e.kind) {
      case EventKind::kLeftCusp:
        if (e.position > s + 1) {
          fail("position-range", "left cusp at " + std::to_string(e.position) + " with " +
                                     std::to_string(s) + " strands alive needs p <= " +
                                     std::to_string(s + 1));
          return report;
        }
        s += 2;
        break;
      case EventKind::kRightCusp:
        if (e.position + 1 > s) {
          fail("position-range", "right cusp at " + std::to_string(e.position) + " with " +
                                     std::to_string(s) + " strands alive needs p+1 <= " +
                                     std::to_string(s));
          return report;
        }
        s -= 2;
        break;
      case EventKind::kCrossing:
        if (e.position + 1 > s) {
          fail("position-range", "crossing at " + std::to_string(e.position) + " with " +
                                     std::to_string(s) + " strands alive needs p+1 <= " +
                                     std::to_string(s));
          return report;
        }
        break;
    }
  }
  if (s != 0) {
    report.violations.push_back(
        {d.size(), "closed", std::to_string(s) + " strands still alive after the last event"});
  }
  return report;
}

inline bool is_valid(const FrontDiagram& d) { return validate(d).ok(); }

inline void require_valid(const FrontDiagram& d) {
  auto report = validate(d);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(ErrorCode::kInvalidDiagram, "event " + std::to_string(v.event) + ": " + v.message,
                v.event);
  }
}

struct CuspTally {
  int left_cusps = 0;
  int right_cusps = 0;
  bool operator==(const CuspTally&) const = default;
};

// A strand is one arc from the cusp that creates it to the cusp that ends
// it.  Left cusp number k (0-based) creates strands 2k (lower) and 2k+1.
struct StrandTrace {
  std::vector<std::vector<int>> slices;  // slices[i][pos-1] = strand id
  std::vector<int> component_of_strand;
  std::vector<CuspTally> components;

  int component_count() const { return static_cast<int>(components.size()); }
};

inline StrandTrace trace_components(const FrontDiagram& d) {
  require_valid(d);
  StrandTrace t;
  std::vector<int> parent;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> cur;
  t.slices.reserve(d.size() + 1);
  t.slices.push_back(cur);
  std::vector<std::pair<int, int>> right_joins;
  for (const Event& e : d.events()) {
    const int p = e.position - 1;
    switch (e.kind) {
      case EventKind::kLeftCusp: {
        int lo = static_cast<int>(parent.size());
        parent.push_back(lo);
        parent.push_back(lo);
        cur.insert(cur.begin() + p, {lo, lo + 1});
        break;
      }
      case EventKind::kRightCusp:
        right_joins.emplace_back(cur[p], cur[p + 1]);
        parent[find(cur[p])] = find(cur[p + 1]);
        cur.erase(cur.begin() + p, cur.begin() + p + 2);
        break;
      case EventKind::kCrossing:
        std::swap(cur[p], cur[p + 1]);
        break;
    }
    t.slices.push_back(cur);
  }
  // Components numbered by first appearance, i.e. by their lowest strand id.
  std::vector<int> label(parent.size(), -1);
  t.component_of_strand.assign(parent.size(), -1);
  for (std::size_t s = 0; s < parent.size(); ++s) {
    int root = find(static_cast<int>(s));
    if (label[root] < 0) {
      label[root] = static_cast<int>(t.components.size());
      t.components.emplace_back();
    }
    t.component_of_strand[s] = label[root];
  }
  for (std::size_t s = 0; s < parent.size(); s += 2)
    ++t.components[t.component_of_strand[s]].left_cusps;
  for (auto [a, b] : right_joins) {
    (void)b;
    ++t.components[t.component_of_strand[a]].right_cusps;
  }
  return t;
}

}  // namespace clasplab
