#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clasplab/diagram.hpp"

namespace clasplab {

struct NormalRuling {
  std::vector<int> switches;  // sorted crossing ordinals

  NormalRuling() = default;
  explicit NormalRuling(std::vector<int> s) : switches(std::move(s)) {
    std::sort(switches.begin(), switches.end());
    switches.erase(std::unique(switches.begin(), switches.end()), switches.end());
  }
  NormalRuling(std::initializer_list<int> s) : NormalRuling(std::vector<int>(s)) {}

  bool contains(int ordinal) const {
    return std::binary_search(switches.begin(), switches.end(), ordinal);
  }
  std::size_t size() const { return switches.size(); }
  bool operator==(const NormalRuling&) const = default;
};

// Fewer switches first, then lexicographic.
inline bool shortlex_less(const NormalRuling& a, const NormalRuling& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.switches < b.switches;
}

// Eye occupancy of one vertical slice.  Eyes are numbered by birth order.
class PairingState {
 public:
  int size() const { return static_cast<int>(eye_.size()); }
  int eyes_born() const { return born_; }
  int eye_at(int p) const { return eye_.at(p - 1); }
  bool upper_at(int p) const { return upper_.at(p - 1) != 0; }
  const std::vector<int>& eyes() const { return eye_; }

  int mate(int p) const {
    const int e = eye_at(p);
    for (int q = 1; q <= size(); ++q)
      if (q != p && eye_[q - 1] == e) return q;
    return 0;
  }

  void birth(int p) {
    eye_.insert(eye_.begin() + (p - 1), {born_, born_});
    upper_.insert(upper_.begin() + (p - 1), {0, 1});
    ++born_;
  }
  bool can_die(int p) const { return p + 1 <= size() && eye_at(p) == eye_at(p + 1); }
  void death(int p) {
    eye_.erase(eye_.begin() + (p - 1), eye_.begin() + (p + 1));
    upper_.erase(upper_.begin() + (p - 1), upper_.begin() + (p + 1));
  }
  void exchange(int p) {
    std::swap(eye_[p - 1], eye_[p]);
    std::swap(upper_[p - 1], upper_[p]);
  }

 private:
  std::vector<int> eye_;
  std::vector<std::uint8_t> upper_;
  int born_ = 0;
};

// Normality at a switch between p and p+1.  Only the disjoint and the two
// nested mate layouts are allowed; the interleaved ones are not.
inline bool switch_allowed(const PairingState& st, int p) {
  if (st.eye_at(p) == st.eye_at(p + 1))
    throw Error(ErrorCode::kSameEye, "switch at " + std::to_string(p) + " joins one eye");
  const int a = st.mate(p);
  const int b = st.mate(p + 1);
  const bool disjoint = a < p && b > p + 1;
  const bool nested_above = a > p + 1 && b > p + 1 && b < a;
  const bool nested_below = a < p && b < p && b < a;
  return disjoint || nested_above || nested_below;
}

struct RulingCheck {
  bool ok = true;
  std::string reason;
  std::size_t event = 0;  // 1-based event where the scan failed
  int crossing = 0;       // ordinal, when the failure sits on a crossing

  explicit operator bool() const { return ok; }
};

// One step of the scan.  Returns an empty string on success.
inline std::string scan_step(PairingState& st, const Event& e, bool is_switch) {
  const int p = e.position;
  switch (e.kind) {
    case EventKind::kLeftCusp:
      st.birth(p);
      return {};
    case EventKind::kRightCusp:
      if (!st.can_die(p)) return "right cusp joins strands of different eyes";
      st.death(p);
      return {};
    case EventKind::kCrossing:
      if (st.eye_at(p) == st.eye_at(p + 1))
        return is_switch ? "switch between the two strands of one eye"
                         : "eye crosses itself";
      if (is_switch) {
        if (!switch_allowed(st, p)) return "normality violated (interleaved eyes at a switch)";
      } else {
        st.exchange(p);
      }
      return {};
  }
  return "bad event";
}

inline RulingCheck check_normal_ruling(const FrontDiagram& d, const NormalRuling& r) {
  require_valid(d);
  for (int c : r.switches)
    if (c < 1 || c > d.crossing_count())
      return {false, "no crossing " + std::to_string(c), 0, c};
  PairingState st;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const int ord = d.crossing_ordinal(i);
    auto why = scan_step(st, d[i], ord > 0 && r.contains(ord));
    if (!why.empty()) return {false, why, i + 1, ord};
  }
  return {};
}

inline bool is_normal_ruling(const FrontDiagram& d, const NormalRuling& r) {
  return check_normal_ruling(d, r).ok;
}

struct EnumerationStats {
  std::uint64_t nodes = 0;
};

inline std::vector<NormalRuling> enumerate_rulings(const FrontDiagram& d,
                                                   std::optional<std::uint64_t> budget = {},
                                                   EnumerationStats* stats = nullptr) {
  require_valid(d);
  std::vector<NormalRuling> out;
  std::vector<int> chosen;
  std::uint64_t nodes = 0;

  // Cusps and forced crossings run inline; only crossings branch.
  auto rec = [&](auto&& self, std::size_t i, PairingState st) -> void {
    for (; i < d.size(); ++i) {
      const Event& e = d[i];
      if (e.kind != EventKind::kCrossing) {
        if (!scan_step(st, e, false).empty()) return;
        continue;
      }
      if (++nodes, budget && nodes > *budget)
        throw Error(ErrorCode::kBudgetExceeded, "ruling enumeration exceeded node budget");
      const int p = e.position;
      if (st.eye_at(p) == st.eye_at(p + 1)) return;
      if (switch_allowed(st, p)) {
        chosen.push_back(d.crossing_ordinal(i));
        self(self, i + 1, st);
        chosen.pop_back();
      }
      st.exchange(p);
    }
    out.emplace_back(chosen);
  };
  rec(rec, 0, PairingState{});
  if (stats) stats->nodes = nodes;
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

}  // namespace clasplab
