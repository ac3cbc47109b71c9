#pragma once

// Crossing (conflict) counts between triangulations, edge classification,
// conflict-based lower bounds and the greedy conflict-reduction walk.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "assoc/core.hpp"
#include "assoc/flip_graph.hpp"

namespace assoc {

struct conflict_report {
  int total = 0;
  // For each chord of S, how many chords of T it crosses.
  std::vector<std::pair<chord, int>> per_chord;
};

inline int conflict_count(const triangulation& s, const triangulation& t) {
  require_same_size(s, t);
  int total = 0;
  for (const auto& a : s.chords())
    for (const auto& b : t.chords()) total += chords_cross(a, b, s.size());
  return total;
}

inline conflict_report conflicts(const triangulation& s, const triangulation& t) {
  require_same_size(s, t);
  conflict_report r;
  for (const auto& a : s.chords()) {
    int k = 0;
    for (const auto& b : t.chords()) k += chords_cross(a, b, s.size());
    r.per_chord.emplace_back(a, k);
    r.total += k;
  }
  return r;
}

// Conflicts with t of each neighbour of s, keyed by the flipped chord.
inline std::vector<std::pair<chord, int>> neighbor_conflict_profile(const triangulation& s, const triangulation& t) {
  require_same_size(s, t);
  std::vector<std::pair<chord, int>> out;
  for (const auto& [c, nb] : neighbors(s)) out.emplace_back(c, conflict_count(nb, t));
  return out;
}

struct edge_classification {
  std::vector<chord> common;
  std::vector<chord> one_off;  // flips straight onto a chord of T
  std::vector<chord> other;
};

inline edge_classification classify_edges(const triangulation& s, const triangulation& t) {
  require_same_size(s, t);
  edge_classification out;
  for (const auto& c : s.chords()) {
    if (t.contains(c)) {
      out.common.push_back(c);
      continue;
    }
    auto [_, move] = flip(s, c);
    (t.contains(move.inserted) ? out.one_off : out.other).push_back(c);
  }
  return out;
}

// Each flip creates at most one new common chord, so a subproblem of size m
// needs at least m-1 flips, and at least m when it has no one-off chord.
inline int distance_lower_bound(const triangulation& s, const triangulation& t) {
  require_same_size(s, t);
  int total = 0;
  for (const auto& sub : decompose_on_common_edges({s, t})) {
    const int m = sub.size();
    if (m < 2) continue;
    const auto cls = classify_edges(sub.source(), sub.target());
    int bound = (m - 1) - static_cast<int>(cls.common.size());
    if (cls.common.empty() && cls.one_off.empty()) bound = std::max(bound, m);
    total += bound;
  }
  return total;
}

// How the greedy walk picks among neighbours with equally few conflicts.
enum class tie_rule {
  preorder_first,  // flip the chord whose dual node's '1' comes first in the word
  least_word,      // neighbour with the least tree word, '0' < '1'
  first_found,     // first in chord-sorted order
};

struct greedy_outcome {
  flip_path path;
  int length = 0;
  int overestimate = 0;
};

// Repeatedly moves to a neighbour with the fewest conflicts with t.  Some
// neighbour always has strictly fewer conflicts, so the walk is bounded by
// conflicts(s, t) steps.
inline flip_path greedy_walk(const triangulation& s, const triangulation& t, tie_rule rule = tie_rule::preorder_first) {
  require_same_size(s, t);
  const int n = s.size();
  flip_path path;
  path.states.push_back(s);
  const int budget = conflict_count(s, t);
  while (!(path.back() == t)) {
    if (path.length() >= budget)
      throw error(errc::step_budget_exceeded, "greedy walk did not reach the target within " + std::to_string(budget) + " steps");
    int best = INT_MAX;
    std::uint64_t best_word = 0;
    flip_move best_move;
    auto consider = [&](chord removed, chord inserted, std::uint64_t w) {
      const int c = conflict_count(from_packed(w, n), t);
      if (c < best || (c == best && rule == tie_rule::least_word && w < best_word)) {
        best = c;
        best_word = w;
        best_move = {removed, inserted};
      }
    };
    if (rule == tie_rule::preorder_first)
      detail::for_each_neighbor_preorder(path.back().key(), n, consider);
    else
      detail::for_each_neighbor(path.back().key(), n, consider);
    path.states.push_back(from_packed(best_word, n));
    path.moves.push_back(best_move);
  }
  return path;
}

inline greedy_outcome greedy_path(const triangulation& s, const triangulation& t, tie_rule rule = tie_rule::preorder_first) {
  greedy_outcome out;
  out.path = greedy_walk(s, t, rule);
  out.length = out.path.length();
  out.overestimate = out.length - distance(s, t);
  return out;
}

inline std::vector<int> conflict_profile_along(const flip_path& path, const triangulation& t) {
  std::vector<int> out;
  out.reserve(path.states.size());
  for (const auto& st : path.states) out.push_back(conflict_count(st, t));
  return out;
}

struct first_step_behavior {
  int min_rise = 0;
  bool all_first_moves_increase = false;
};

// Change in conflicts with t over the geodesic first moves of s.
inline first_step_behavior first_step_conflict_behavior(const triangulation& s, const triangulation& t) {
  const auto moves = geodesic_first_moves(s, t);
  const int base = conflict_count(s, t);
  first_step_behavior out{INT_MAX, true};
  for (const auto& c : moves) {
    const int rise = conflict_count(flip(s, c).first, t) - base;
    out.min_rise = std::min(out.min_rise, rise);
    out.all_first_moves_increase = out.all_first_moves_increase && rise > 0;
  }
  return out;
}

namespace detail {

// Searches the geodesic DAG from s towards t, abandoning a branch as soon as
// a step raises the conflict count.  States already shown to be dead ends are
// remembered.
inline bool monotone_geodesic_search(const triangulation& s, const triangulation& t) {
  const int n = s.size();
  distance_to_target dist(t);
  std::unordered_map<std::uint64_t, bool> solved;
  auto search = [&](auto&& self, std::uint64_t w, int d, int conf) -> bool {
    if (d == 0) return true;
    if (auto it = solved.find(w); it != solved.end()) return it->second;
    bool found = false;
    for_each_neighbor(w, n, [&](chord, chord, std::uint64_t nw) {
      if (found) return;
      const int c = conflict_count(from_packed(nw, n), t);
      if (c > conf || dist(nw) != d - 1) return;
      found = self(self, nw, d - 1, c);
    });
    solved.emplace(w, found);
    return found;
  };
  return search(search, s.key(), dist(s.key()), conflict_count(s, t));
}

// Minimum over geodesics of the largest single-step conflict rise.
inline int geodesic_peak_rise_single(const triangulation& s, const triangulation& t) {
  const int n = s.size();
  distance_to_target dist(t);
  std::unordered_map<std::uint64_t, int> memo;
  auto peak = [&](auto&& self, std::uint64_t w, int d, int conf) -> int {
    if (d == 0) return INT_MIN;
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    int best = INT_MAX;
    for_each_neighbor(w, n, [&](chord, chord, std::uint64_t nw) {
      if (dist(nw) != d - 1) return;
      const int c = conflict_count(from_packed(nw, n), t);
      best = std::min(best, std::max(c - conf, self(self, nw, d - 1, c)));
    });
    memo.emplace(w, best);
    return best;
  };
  return peak(peak, s.key(), dist(s.key()), conflict_count(s, t));
}

}  // namespace detail

// A geodesic of the whole problem interleaves geodesics of the common-edge
// subproblems, and conflicts add up across subproblems, so a conflict
// non-increasing geodesic exists iff one exists in every subproblem.
inline bool exists_conflict_monotone_geodesic(const triangulation& s, const triangulation& t) {
  require_same_size(s, t);
  for (const auto& sub : decompose_on_common_edges({s, t}))
    if (sub.size() >= 2 && !detail::monotone_geodesic_search(sub.source(), sub.target())) return false;
  return true;
}

// Smallest value r such that some geodesic never raises conflicts by more
// than r in one step.  Every geodesic has a step rising by at least the
// result.  Returns INT_MIN when s == t.
inline int geodesic_peak_rise(const triangulation& s, const triangulation& t) {
  require_same_size(s, t);
  int out = INT_MIN;
  for (const auto& sub : decompose_on_common_edges({s, t}))
    if (sub.size() >= 2) out = std::max(out, detail::geodesic_peak_rise_single(sub.source(), sub.target()));
  return out;
}

}  // namespace assoc
