#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clasplab/rulings.hpp"

namespace clasplab {

// Enumeration order of enumerate_applicable_moves follows this order.
enum class MoveKind { kHandle0, kHandle1, kR1, kR1Inverse, kR2, kR2Inverse, kR3, kTranspose };

enum class Variant { kNone, kUp, kDown };

inline bool is_isotopy(MoveKind k) { return k != MoveKind::kHandle0 && k != MoveKind::kHandle1; }

// anchor is a 1-based event index (0 = first applicable); position 0 means
// "any".  Insertion moves (h0, r1) insert before event `anchor`, which may be
// size()+1.  Everything else anchors at the first event of its pattern.
struct Move {
  MoveKind kind = MoveKind::kHandle0;
  std::size_t anchor = 0;
  int position = 0;
  Variant variant = Variant::kNone;

  bool operator==(const Move&) const = default;
};

// How switch labels move across a rewrite.  Crossings before the window keep
// their ordinals; those after it shift by (target_width - source_width).
class RulingTransport {
 public:
  enum class Rule {
    kPlain,     // window crossings never switches on either side
    kR1Add,     // the new kink crossing is always a switch
    kR1Remove,
    kR3,
    kTranspose,  // two crossings trading places
  };

  RulingTransport() = default;
  RulingTransport(FrontDiagram source, FrontDiagram target, Move move, Rule rule, int window,
                  int source_width, int target_width)
      : source_(std::move(source)),
        target_(std::move(target)),
        move_(move),
        rule_(rule),
        window_(window),
        source_width_(source_width),
        target_width_(target_width) {}

  const FrontDiagram& source() const { return source_; }
  const FrontDiagram& target() const { return target_; }
  const Move& move() const { return move_; }
  Rule rule() const { return rule_; }
  int window() const { return window_; }
  bool bijective() const { return is_isotopy(move_.kind); }

  // OutOfDomain if r is not a normal ruling of the source (or sits on a
  // crossing the rewrite deletes); TransportFailure if the image is not
  // normal on the target.
  NormalRuling apply(const NormalRuling& r) const {
    auto src = check_normal_ruling(source_, r);
    if (!src.ok)
      throw Error(ErrorCode::kOutOfDomain, "ruling is not normal on the source: " + src.reason);
    std::vector<int> out;
    std::array<bool, 3> local{};
    for (int c : r.switches) {
      if (c < window_) out.push_back(c);
      else if (c >= window_ + source_width_) out.push_back(c + target_width_ - source_width_);
      else local[c - window_] = true;
    }
    auto add_local = [&](int k) { out.push_back(window_ + k); };
    switch (rule_) {
      case Rule::kPlain:
        if (local[0] || local[1])
          throw Error(ErrorCode::kOutOfDomain, "ruling switches a crossing the move deletes");
        break;
      case Rule::kR1Add:
        add_local(0);
        break;
      case Rule::kR1Remove:
        if (!local[0])
          throw Error(ErrorCode::kOutOfDomain, "kink crossing is not a switch");
        break;
      case Rule::kTranspose:
        map_transpose(r, local, add_local);
        break;
      case Rule::kR3:
        return map_r3(out, local);
    }
    return finish(std::move(out));
  }

 private:
  NormalRuling finish(std::vector<int> out) const {
    NormalRuling img(std::move(out));
    auto chk = check_normal_ruling(target_, img);
    if (!chk.ok)
      throw Error(ErrorCode::kTransportFailure,
                  "transported ruling is not normal on the target: " + chk.reason, chk.event);
    return img;
  }

  // Same crossing, new ordinal, unless the two crossings' four strands lie
  // on exactly two eyes: then the switch labels stay in place.
  template <class Add>
  void map_transpose(const NormalRuling& r, const std::array<bool, 3>& local, Add&& add) const {
    const std::size_t first = source_.crossing_event(window_);
    PairingState st;
    for (std::size_t i = 0; i < first; ++i) {
      const int ord = source_.crossing_ordinal(i);
      scan_step(st, source_[i], ord > 0 && r.contains(ord));
    }
    const int p1 = source_[first].position;
    const int p2 = source_[first + 1].position;
    std::array<int, 4> eyes{st.eye_at(p1), st.eye_at(p1 + 1), 0, 0};
    if (!local[0]) st.exchange(p1);
    eyes[2] = st.eye_at(p2);
    eyes[3] = st.eye_at(p2 + 1);
    std::sort(eyes.begin(), eyes.end());
    const bool two_eyes = std::unique(eyes.begin(), eyes.end()) - eyes.begin() == 2;
    for (int k = 0; k < 2; ++k)
      if (local[k]) add(two_eyes ? k : 1 - k);
  }

  // Labels follow the strand pair (1<->3, 2<->2).  Two-switch sets go to
  // the pair containing both outer crossings; {1,3} goes to whichever of
  // {1,2}, {2,3} stays normal.  Exactly one must.
  NormalRuling map_r3(std::vector<int> out, const std::array<bool, 3>& local) const {
    const int n = local[0] + local[1] + local[2];
    auto with = [&](std::initializer_list<int> ks) {
      auto v = out;
      for (int k : ks) v.push_back(window_ + k);
      return v;
    };
    if (n == 0) return finish(out);
    if (n == 3) return finish(with({0, 1, 2}));
    if (n == 1) {
      if (local[0]) return finish(with({2}));
      if (local[1]) return finish(with({1}));
      return finish(with({0}));
    }
    if (!local[1]) {
      NormalRuling a(with({0, 1})), b(with({1, 2}));
      const bool ok_a = is_normal_ruling(target_, a);
      const bool ok_b = is_normal_ruling(target_, b);
      if (ok_a == ok_b)
        throw Error(ErrorCode::kTransportFailure,
                    ok_a ? "R3 two-switch case is ambiguous" : "R3 two-switch case has no image");
      return ok_a ? a : b;
    }
    return finish(with({0, 2}));
  }

  FrontDiagram source_;
  FrontDiagram target_;
  Move move_;
  Rule rule_ = Rule::kPlain;
  int window_ = 1;
  int source_width_ = 0;
  int target_width_ = 0;
};

inline NormalRuling transport_ruling(const RulingTransport& t, const NormalRuling& r) {
  return t.apply(r);
}

struct MoveResult {
  FrontDiagram diagram;
  RulingTransport transport;
  Move move;  // fully resolved: anchor, position and variant filled in
};

namespace detail {

struct Rewrite {
  std::size_t begin = 0;  // 0-based event index of the replaced range
  std::size_t length = 0;
  std::vector<Event> replacement;
  Move move;
  RulingTransport::Rule rule = RulingTransport::Rule::kPlain;
  int source_width = 0;
  int target_width = 0;
};

inline bool matches(const Event& e, EventKind k, int p) { return e.kind == k && e.position == p; }
inline bool position_ok(int wanted, int actual) { return wanted == 0 || wanted == actual; }
inline bool variant_ok(Variant wanted, Variant actual) {
  return wanted == Variant::kNone || wanted == actual;
}

// Swapping two adjacent events.  Footprints live in doubled coordinates:
// strand p is 2p, the gap just below it is 2p-1.
struct Footprint {
  bool gap;
  int lo;
  int hi;
};

inline Footprint fp_after(const Event& e) {
  if (e.kind == EventKind::kRightCusp) return {true, 2 * e.position - 1, 2 * e.position - 1};
  return {false, 2 * e.position, 2 * e.position + 2};
}
inline Footprint fp_before(const Event& e) {
  if (e.kind == EventKind::kLeftCusp) return {true, 2 * e.position - 1, 2 * e.position - 1};
  return {false, 2 * e.position, 2 * e.position + 2};
}
inline bool disjoint(const Footprint& a, const Footprint& b) {
  if (a.gap && b.gap) return a.lo != b.lo;  // a cusp dying and one born in the same gap do not commute
  if (a.gap) return !(b.lo < a.lo && a.lo < b.hi);
  if (b.gap) return !(a.lo < b.lo && b.lo < a.hi);
  return a.hi < b.lo || b.hi < a.lo;
}

inline std::optional<std::array<Event, 2>> transpose_pair(const Event& e1, const Event& e2) {
  if (!disjoint(fp_after(e1), fp_before(e2))) return std::nullopt;
  const int p1 = e1.position;
  const int p2 = e2.position;
  // e2 pulled back through e1
  int q2 = p2;
  if (e1.kind == EventKind::kLeftCusp && p2 >= p1 + 1) q2 = p2 - 2;
  if (e1.kind == EventKind::kRightCusp) {
    if (e2.kind == EventKind::kLeftCusp ? p2 > p1 : p2 >= p1) q2 = p2 + 2;
  }
  // e1 pushed forward through the moved e2
  int q1 = p1;
  if (e2.kind == EventKind::kLeftCusp) {
    if (e1.kind == EventKind::kLeftCusp) q1 = p2 >= p1 + 2 ? p1 : p1 + 2;
    else if (p1 >= q2) q1 = p1 + 2;
  } else if (e2.kind == EventKind::kRightCusp) {
    if (p1 >= q2 + 2) q1 = p1 - 2;
  }
  return std::array<Event, 2>{Event{e2.kind, q2}, Event{e1.kind, q1}};
}

inline std::optional<Rewrite> try_rewrite(const FrontDiagram& d, const std::vector<int>& prof,
                                          const Move& m, std::size_t anchor) {
  using K = EventKind;
  const std::size_t n = d.size();
  if (anchor < 1) return std::nullopt;
  const std::size_t i = anchor - 1;
  Rewrite rw;
  rw.begin = i;
  rw.move = m;
  rw.move.anchor = anchor;
  auto ev = [&](std::size_t k) -> const Event& { return d[k]; };
  switch (m.kind) {
    case MoveKind::kHandle0: {
      if (i > n) return std::nullopt;
      const int p = m.position == 0 ? 1 : m.position;
      if (p > prof[i] + 1) return std::nullopt;
      rw.replacement = {left_cusp(p), right_cusp(p)};
      rw.move.position = p;
      rw.move.variant = Variant::kNone;
      return rw;
    }
    case MoveKind::kHandle1: {
      if (i + 1 >= n) return std::nullopt;
      const int p = ev(i).position;
      if (ev(i).kind != K::kRightCusp || !matches(ev(i + 1), K::kLeftCusp, p)) return std::nullopt;
      if (!position_ok(m.position, p)) return std::nullopt;
      rw.length = 2;
      rw.move.position = p;
      rw.move.variant = Variant::kNone;
      return rw;
    }
    case MoveKind::kR1: {
      if (i > n) return std::nullopt;
      const int p = m.position == 0 ? 1 : m.position;
      if (p > prof[i]) return std::nullopt;
      const Variant v = m.variant == Variant::kNone ? Variant::kUp : m.variant;
      if (v == Variant::kUp) rw.replacement = {left_cusp(p + 1), crossing(p), right_cusp(p + 1)};
      else rw.replacement = {left_cusp(p), crossing(p + 1), right_cusp(p)};
      rw.move.position = p;
      rw.move.variant = v;
      rw.rule = RulingTransport::Rule::kR1Add;
      rw.target_width = 1;
      return rw;
    }
    case MoveKind::kR1Inverse: {
      if (i + 2 >= n) return std::nullopt;
      const Event &a = ev(i), &b = ev(i + 1), &c = ev(i + 2);
      if (a.kind != K::kLeftCusp || !matches(c, K::kRightCusp, a.position) || b.kind != K::kCrossing)
        return std::nullopt;
      Variant v;
      int p;
      if (b.position == a.position - 1) v = Variant::kUp, p = b.position;
      else if (b.position == a.position + 1) v = Variant::kDown, p = a.position;
      else return std::nullopt;
      if (!position_ok(m.position, p) || !variant_ok(m.variant, v)) return std::nullopt;
      rw.length = 3;
      rw.move.position = p;
      rw.move.variant = v;
      rw.rule = RulingTransport::Rule::kR1Remove;
      rw.source_width = 1;
      return rw;
    }
    case MoveKind::kR2: {
      if (i >= n || ev(i).kind == K::kCrossing) return std::nullopt;
      const int p = ev(i).position;
      const int s = prof[i];
      if (!position_ok(m.position, p)) return std::nullopt;
      for (Variant v : {Variant::kUp, Variant::kDown}) {
        if (!variant_ok(m.variant, v)) continue;
        const bool up = v == Variant::kUp;
        if (ev(i).kind == K::kLeftCusp) {
          if (up && p <= s) rw.replacement = {left_cusp(p + 1), crossing(p), crossing(p + 1)};
          else if (!up && p >= 2) rw.replacement = {left_cusp(p - 1), crossing(p), crossing(p - 1)};
          else continue;
        } else {
          if (up && p + 2 <= s) rw.replacement = {crossing(p + 1), crossing(p), right_cusp(p + 1)};
          else if (!up && p >= 2) rw.replacement = {crossing(p - 1), crossing(p), right_cusp(p - 1)};
          else continue;
        }
        rw.length = 1;
        rw.move.position = p;
        rw.move.variant = v;
        rw.target_width = 2;
        return rw;
      }
      return std::nullopt;
    }
    case MoveKind::kR2Inverse: {
      if (i + 2 >= n) return std::nullopt;
      const Event &a = ev(i), &b = ev(i + 1), &c = ev(i + 2);
      Event cusp;
      Variant v;
      if (a.kind == K::kLeftCusp && b.kind == K::kCrossing && c.kind == K::kCrossing) {
        const int m0 = a.position;
        if (b.position == m0 - 1 && c.position == m0) cusp = left_cusp(m0 - 1), v = Variant::kUp;
        else if (b.position == m0 + 1 && c.position == m0) cusp = left_cusp(m0 + 1), v = Variant::kDown;
        else return std::nullopt;
      } else if (a.kind == K::kCrossing && b.kind == K::kCrossing && c.kind == K::kRightCusp) {
        const int m0 = c.position;
        if (a.position == m0 && b.position == m0 - 1) cusp = right_cusp(m0 - 1), v = Variant::kUp;
        else if (a.position == m0 && b.position == m0 + 1) cusp = right_cusp(m0 + 1), v = Variant::kDown;
        else return std::nullopt;
      } else {
        return std::nullopt;
      }
      if (cusp.position < 1) return std::nullopt;
      if (!position_ok(m.position, cusp.position) || !variant_ok(m.variant, v)) return std::nullopt;
      rw.length = 3;
      rw.replacement = {cusp};
      rw.move.position = cusp.position;
      rw.move.variant = v;
      rw.source_width = 2;
      return rw;
    }
    case MoveKind::kR3: {
      if (i + 2 >= n) return std::nullopt;
      const Event &a = ev(i), &b = ev(i + 1), &c = ev(i + 2);
      if (a.kind != K::kCrossing || b.kind != K::kCrossing || c.kind != K::kCrossing ||
          a.position != c.position || (b.position != a.position + 1 && b.position != a.position - 1))
        return std::nullopt;
      const int lo = std::min(a.position, b.position);
      if (!position_ok(m.position, lo)) return std::nullopt;
      rw.length = 3;
      rw.replacement = {crossing(b.position), crossing(a.position), crossing(b.position)};
      rw.move.position = lo;
      rw.move.variant = Variant::kNone;
      rw.rule = RulingTransport::Rule::kR3;
      rw.source_width = rw.target_width = 3;
      return rw;
    }
    case MoveKind::kTranspose: {
      if (i + 1 >= n) return std::nullopt;
      auto swapped = transpose_pair(ev(i), ev(i + 1));
      if (!swapped) return std::nullopt;
      rw.length = 2;
      rw.replacement = {(*swapped)[0], (*swapped)[1]};
      rw.move.position = 0;
      rw.move.variant = Variant::kNone;
      // with at most one crossing no ordinal changes
      if (ev(i).kind == K::kCrossing && ev(i + 1).kind == K::kCrossing) {
        rw.rule = RulingTransport::Rule::kTranspose;
        rw.source_width = rw.target_width = 2;
      }
      return rw;
    }
  }
  return std::nullopt;
}

inline std::size_t anchor_limit(const FrontDiagram& d, MoveKind k) {
  return k == MoveKind::kHandle0 || k == MoveKind::kR1 ? d.size() + 1 : d.size();
}

inline MoveResult finish_rewrite(const FrontDiagram& d, const Rewrite& rw) {
  std::vector<Event> out(d.events().begin(), d.events().begin() + rw.begin);
  out.insert(out.end(), rw.replacement.begin(), rw.replacement.end());
  out.insert(out.end(), d.events().begin() + rw.begin + rw.length, d.events().end());
  FrontDiagram target(std::move(out));
  auto report = validate(target);
  if (!report.ok())
    throw Error(ErrorCode::kNotApplicable, "rewrite produced an invalid diagram: " +
                                               report.violations.front().message);
  const int window = d.crossings_before(rw.begin) + 1;
  RulingTransport t(d, target, rw.move, rw.rule, window, rw.source_width, rw.target_width);
  return {std::move(target), std::move(t), rw.move};
}

}  // namespace detail

inline MoveResult apply_move(const FrontDiagram& d, const Move& m) {
  require_valid(d);
  const auto prof = d.strand_profile();
  if (m.anchor != 0) {
    auto rw = detail::try_rewrite(d, prof, m, m.anchor);
    if (!rw)
      throw Error(ErrorCode::kNotApplicable,
                  "move does not match at event " + std::to_string(m.anchor), m.anchor);
    return detail::finish_rewrite(d, *rw);
  }
  const std::size_t limit = detail::anchor_limit(d, m.kind);
  for (std::size_t k = 1; k <= limit; ++k)
    if (auto rw = detail::try_rewrite(d, prof, m, k)) return detail::finish_rewrite(d, *rw);
  throw Error(ErrorCode::kNotApplicable, "move applies nowhere in this diagram");
}

inline std::vector<Move> enumerate_applicable_moves(const FrontDiagram& d) {
  require_valid(d);
  const auto prof = d.strand_profile();
  std::vector<Move> out;
  constexpr MoveKind kinds[] = {MoveKind::kHandle0, MoveKind::kHandle1,   MoveKind::kR1,
                                MoveKind::kR1Inverse, MoveKind::kR2,     MoveKind::kR2Inverse,
                                MoveKind::kR3,      MoveKind::kTranspose};
  for (MoveKind kind : kinds) {
    const std::size_t limit = detail::anchor_limit(d, kind);
    for (std::size_t k = 1; k <= limit; ++k) {
      const std::size_t i = k - 1;
      if (kind == MoveKind::kHandle0) {
        for (int p = 1; p <= prof[i] + 1; ++p) out.push_back({kind, k, p, Variant::kNone});
      } else if (kind == MoveKind::kR1) {
        for (int p = 1; p <= prof[i]; ++p)
          for (Variant v : {Variant::kUp, Variant::kDown}) out.push_back({kind, k, p, v});
      } else if (kind == MoveKind::kR2) {
        for (Variant v : {Variant::kUp, Variant::kDown})
          if (auto rw = detail::try_rewrite(d, prof, {kind, k, 0, v}, k)) out.push_back(rw->move);
      } else if (auto rw = detail::try_rewrite(d, prof, {kind, k, 0, Variant::kNone}, k)) {
        out.push_back(rw->move);
      }
    }
  }
  return out;
}

}  // namespace clasplab
