#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "clasplab/clasps.hpp"
#include "clasplab/move_io.hpp"
#include "clasplab/moves.hpp"

namespace clasplab {

struct FillingCertificate {
  MoveScript script;  // resolved moves
  FrontDiagram diagram;
  NormalRuling ruling;
  ClaspReport clasps;
};

struct ScriptState {
  FrontDiagram diagram;
  NormalRuling ruling;
  MoveScript resolved;
};

// Folds the moves over (start, ruling), threading the ruling through every
// transport.  Errors carry the 1-based index of the failing move.
inline ScriptState execute_moves(const MoveScript& script, ScriptState state = {}) {
  for (std::size_t i = 0; i < script.moves.size(); ++i) {
    const std::size_t at = i + 1;
    try {
      auto res = apply_move(state.diagram, script.moves[i]);
      state.ruling = res.transport.apply(state.ruling);
      state.diagram = std::move(res.diagram);
      state.resolved.moves.push_back(res.move);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kNotApplicable)
        throw Error(ErrorCode::kScriptError,
                    "move " + std::to_string(at) + " (" + serialize_move(script.moves[i]) +
                        "): " + e.what(),
                    at);
      throw Error(e.code(), "move " + std::to_string(at) + ": " + e.what(), at);
    }
  }
  return state;
}

inline FillingCertificate run_script(const MoveScript& script) {
  if (!script.moves.empty() && script.moves.front().kind != MoveKind::kHandle0)
    throw Error(ErrorCode::kScriptError, "a filling script starts with h0", 1);
  auto st = execute_moves(script);
  FillingCertificate cert{std::move(st.resolved), std::move(st.diagram), std::move(st.ruling), {}};
  cert.clasps = clasp_report(cert.diagram, cert.ruling);
  if (cert.clasps.parity != Parity::kEven)
    throw Error(ErrorCode::kEvennessViolation,
                "associated ruling has " + std::to_string(cert.clasps.total) + " clasps");
  return cert;
}

enum class Verdict { kObstructed, kNotObstructed };

inline const char* verdict_name(Verdict v) {
  return v == Verdict::kObstructed ? "obstructed" : "not_obstructed";
}

struct RulingEvidence {
  NormalRuling ruling;
  int clasps = 0;
  Parity parity = Parity::kEven;
};

struct ObstructionVerdict {
  Verdict verdict = Verdict::kNotObstructed;
  std::vector<RulingEvidence> evidence;  // every ruling, enumeration order
  std::optional<NormalRuling> witness;   // first even ruling
  std::string note;
};

inline std::vector<RulingEvidence> ruling_parities(const FrontDiagram& d,
                                                   std::optional<std::uint64_t> budget = {}) {
  std::vector<RulingEvidence> out;
  for (auto& r : enumerate_rulings(d, budget)) {
    auto rep = clasp_report(d, r);
    out.push_back({std::move(r), rep.total, rep.parity});
  }
  return out;
}

inline ObstructionVerdict obstruction_verdict(const FrontDiagram& d,
                                              std::optional<std::uint64_t> budget = {}) {
  ObstructionVerdict v;
  v.evidence = ruling_parities(d, budget);
  for (const auto& e : v.evidence) {
    if (e.parity == Parity::kEven) {
      v.witness = e.ruling;
      break;
    }
  }
  if (v.evidence.empty()) {
    v.note = "no rulings: this criterion says nothing";
  } else if (!v.witness) {
    v.verdict = Verdict::kObstructed;
    v.note = "every normal ruling is odd";
  } else {
    v.note = "even ruling found";
  }
  return v;
}

enum class CobordismParity { kCompatible, kIncompatible, kNotApplicable };

inline const char* cobordism_parity_name(CobordismParity c) {
  switch (c) {
    case CobordismParity::kCompatible: return "compatible";
    case CobordismParity::kIncompatible: return "incompatible";
    case CobordismParity::kNotApplicable: return "not_applicable";
  }
  return "?";
}

// Only meaningful when each side has a single ruling.
inline CobordismParity cobordism_parity_check(const FrontDiagram& lower, const FrontDiagram& upper,
                                              std::optional<std::uint64_t> budget = {}) {
  auto lo = ruling_parities(lower, budget);
  auto hi = ruling_parities(upper, budget);
  if (lo.size() != 1 || hi.size() != 1) return CobordismParity::kNotApplicable;
  return lo[0].parity == hi[0].parity ? CobordismParity::kCompatible
                                      : CobordismParity::kIncompatible;
}

// Forward moves only.  Picks a kind uniformly among the kinds that have
// candidates, then a candidate uniformly; rng() % n keeps this identical
// across standard libraries.
inline MoveScript random_script(int length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ScriptState st;
  MoveScript out;
  for (int step = 0; step < length; ++step) {
    std::map<MoveKind, std::vector<Move>> by_kind;
    for (const Move& m : enumerate_applicable_moves(st.diagram)) {
      if (m.kind == MoveKind::kR1Inverse || m.kind == MoveKind::kR2Inverse) continue;
      by_kind[m.kind].push_back(m);
    }
    bool done = false;
    while (!done && !by_kind.empty()) {
      auto it = std::next(by_kind.begin(), static_cast<long>(rng() % by_kind.size()));
      auto& pool = it->second;
      const std::size_t pick = rng() % pool.size();
      const Move m = pool[pick];
      try {
        auto res = apply_move(st.diagram, m);
        st.ruling = res.transport.apply(st.ruling);
        st.diagram = std::move(res.diagram);
        out.moves.push_back(res.move);
        done = true;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kTransportFailure) throw;
        pool.erase(pool.begin() + static_cast<long>(pick));
        if (pool.empty()) by_kind.erase(it);
      }
    }
    if (!done) break;
  }
  return out;
}

enum class SearchStatus { kFound, kExhausted, kPruned };

inline const char* search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kExhausted: return "exhausted";
    case SearchStatus::kPruned: return "pruned";
  }
  return "?";
}

struct SearchStats {
  std::uint64_t expanded = 0;
  std::uint64_t generated = 0;
  int depth_reached = 0;
  bool budget_hit = false;
};

struct SearchResult {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<MoveScript> script;
  SearchStats stats;
  std::string note;
};

namespace detail {

struct BackStep {
  FrontDiagram earlier;
  Move forward;  // takes `earlier` to the diagram it was generated from
};

inline FrontDiagram splice(const FrontDiagram& d, std::size_t begin, std::size_t length,
                           std::initializer_list<Event> repl) {
  std::vector<Event> ev(d.events().begin(), d.events().begin() + begin);
  ev.insert(ev.end(), repl.begin(), repl.end());
  ev.insert(ev.end(), d.events().begin() + begin + length, d.events().end());
  return FrontDiagram(std::move(ev));
}

// Predecessors under forward moves, simplifying kinds first.
inline std::vector<BackStep> backward_steps(const FrontDiagram& d) {
  std::vector<BackStep> out;
  const auto prof = d.strand_profile();
  const std::size_t n = d.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (d[i].kind == EventKind::kLeftCusp && d[i + 1] == right_cusp(d[i].position))
      out.push_back({splice(d, i, 2, {}), {MoveKind::kHandle0, i + 1, d[i].position, Variant::kNone}});
  }
  for (MoveKind inv : {MoveKind::kR1Inverse, MoveKind::kR2Inverse}) {
    for (std::size_t k = 1; k <= n; ++k) {
      auto rw = try_rewrite(d, prof, {inv, k, 0, Variant::kNone}, k);
      if (!rw) continue;
      auto res = finish_rewrite(d, *rw);
      const MoveKind fwd = inv == MoveKind::kR1Inverse ? MoveKind::kR1 : MoveKind::kR2;
      out.push_back({std::move(res.diagram), {fwd, k, rw->move.position, rw->move.variant}});
    }
  }
  for (MoveKind self : {MoveKind::kR3, MoveKind::kTranspose}) {
    for (std::size_t k = 1; k <= n; ++k) {
      auto rw = try_rewrite(d, prof, {self, k, 0, Variant::kNone}, k);
      if (!rw) continue;
      auto res = finish_rewrite(d, *rw);
      auto back = try_rewrite(res.diagram, res.diagram.strand_profile(), {self, k, 0, Variant::kNone}, k);
      if (!back) continue;
      out.push_back({std::move(res.diagram), back->move});
    }
  }
  for (std::size_t i = 0; i <= n; ++i) {
    for (int p = 1; p + 1 <= prof[i]; ++p)
      out.push_back({splice(d, i, 0, {right_cusp(p), left_cusp(p)}),
                     {MoveKind::kHandle1, i + 1, p, Variant::kNone}});
  }
  return out;
}

}  // namespace detail

// Breadth-first from the input toward the empty diagram over predecessors,
// so the first hit is a shortest script, and among those the first in the
// fixed expansion order.
inline SearchResult search_filling(const FrontDiagram& d, int depth_bound,
                                   std::uint64_t node_budget) {
  require_valid(d);
  SearchResult result;
  try {
    if (obstruction_verdict(d, node_budget).verdict == Verdict::kObstructed) {
      result.status = SearchStatus::kPruned;
      result.note = "every normal ruling is odd, so no decomposable filling exists";
      return result;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    result.note = "ruling enumeration over budget, searched without pruning";
  }

  struct Node {
    FrontDiagram diagram;
    int depth;
    std::size_t parent;  // index into nodes, SIZE_MAX for the root
    Move forward;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  std::deque<std::size_t> queue;
  nodes.push_back({d, 0, SIZE_MAX, {}});
  seen.emplace(serialize_diagram(d), 0);
  queue.push_back(0);

  auto build_script = [&](std::size_t idx) {
    MoveScript s;
    for (; nodes[idx].parent != SIZE_MAX; idx = nodes[idx].parent) s.moves.push_back(nodes[idx].forward);
    return s;
  };

  std::optional<std::size_t> goal;
  if (d.empty()) goal = 0;
  while (!goal && !queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    if (nodes[cur].depth >= depth_bound) continue;
    if (result.stats.expanded >= node_budget) {
      result.stats.budget_hit = true;
      break;
    }
    ++result.stats.expanded;
    for (auto& step : detail::backward_steps(nodes[cur].diagram)) {
      ++result.stats.generated;
      auto key = serialize_diagram(step.earlier);
      if (seen.contains(key)) continue;
      const int depth = nodes[cur].depth + 1;
      result.stats.depth_reached = std::max(result.stats.depth_reached, depth);
      const bool empty = step.earlier.empty();
      nodes.push_back({std::move(step.earlier), depth, cur, step.forward});
      seen.emplace(std::move(key), nodes.size() - 1);
      if (empty) {
        goal = nodes.size() - 1;
        break;
      }
      queue.push_back(nodes.size() - 1);
    }
  }
  if (!goal) {
    result.status = SearchStatus::kExhausted;
    if (result.note.empty())
      result.note = result.stats.budget_hit ? "node budget exhausted" : "depth bound exhausted";
    return result;
  }
  auto script = build_script(*goal);
  auto cert = run_script(script);
  if (!(cert.diagram == d))
    throw Error(ErrorCode::kScriptError, "search produced a script that does not rebuild the input");
  result.status = SearchStatus::kFound;
  result.script = std::move(cert.script);
  return result;
}

}  // namespace clasplab
