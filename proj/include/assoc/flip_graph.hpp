#pragma once

// Edge flips, exact flip distance and geodesic enumeration.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "assoc/core.hpp"

namespace assoc {

struct flip_move {
  chord removed;
  chord inserted;

  friend bool operator==(const flip_move&, const flip_move&) = default;
};

struct flip_path {
  std::vector<triangulation> states;
  std::vector<flip_move> moves;

  int length() const noexcept { return static_cast<int>(moves.size()); }
  const triangulation& back() const { return states.back(); }
};

namespace detail {

inline chord label_chord(int x, int y, int n) {
  const int u = to_label(x, n);
  const int v = to_label(y, n);
  return u < v ? chord{u, v} : chord{v, u};
}

// Calls f(removed, inserted, packed neighbour word) for every chord, in
// label-sorted chord order.
template <typename F>
void for_each_neighbor(std::uint64_t word, int n, F&& f) {
  const adjacency adj = decode(word, n);
  std::pair<chord, std::pair<int, int>> chords[max_size];
  int count = 0;
  for_each_chord(adj, [&](int x, int y) { chords[count++] = {label_chord(x, y, n), {x, y}}; });
  std::sort(chords, chords + count, [](const auto& l, const auto& r) { return l.first < r.first; });
  for (int i = 0; i < count; ++i) {
    adjacency next = adj;
    auto [x, y] = chords[i].second;
    auto [c1, c2] = flip_in_place(next, x, y);
    f(chords[i].first, label_chord(c1, c2, n), encode(next));
  }
}

// Same as for_each_neighbor, but in preorder of the flipped chord's dual node.
template <typename F>
void for_each_neighbor_preorder(std::uint64_t word, int n, F&& f) {
  const adjacency adj = decode(word, n);
  std::pair<int, int> chords[max_size];
  const int count = preorder_chords(word, n, chords);
  for (int i = 0; i < count; ++i) {
    adjacency next = adj;
    auto [x, y] = chords[i];
    auto [c1, c2] = flip_in_place(next, x, y);
    f(label_chord(x, y, n), label_chord(c1, c2, n), encode(next));
  }
}

}  // namespace detail

inline std::pair<triangulation, flip_move> flip(const triangulation& t, chord e) {
  if (!t.contains(e)) throw error(errc::chord_not_present, "chord " + to_string(e) + " is not in the triangulation");
  const int n = t.size();
  auto adj = t.adjacency();
  auto [c1, c2] = detail::flip_in_place(adj, detail::to_q(e.a, n), detail::to_q(e.b, n));
  return {from_packed(detail::encode(adj), n), flip_move{e, detail::label_chord(c1, c2, n)}};
}

inline std::vector<std::pair<chord, triangulation>> neighbors(const triangulation& t) {
  std::vector<std::pair<chord, triangulation>> out;
  out.reserve(t.chords().size());
  detail::for_each_neighbor(t.key(), t.size(), [&](chord removed, chord, std::uint64_t w) {
    out.emplace_back(removed, from_packed(w, t.size()));
  });
  return out;
}

// Largest size accepted by whole-graph enumeration; ASSOC_MAX_N overrides.
inline int default_max_size() {
  if (const char* env = std::getenv("ASSOC_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min<long>(v, max_size));
  }
  return 12;
}

// Visits every packed word of size n in lexicographic order.
template <typename F>
void for_each_word(int n, F&& f, int max_n = default_max_size()) {
  if (n < 1) throw error(errc::invalid_argument, "size must be at least 1");
  if (n > max_n)
    throw error(errc::resource_guard, "enumeration of size " + std::to_string(n) + " exceeds the limit " +
                                          std::to_string(max_n) + " (set ASSOC_MAX_N to raise it)");
  const int len = detail::word_length(n);
  // ones/zeros placed so far; the word must stay a ballot sequence.
  auto rec = [&](auto&& self, std::uint64_t prefix, int pos, int ones, int zeros) -> void {
    if (pos == len) {
      f(prefix);
      return;
    }
    if (zeros < ones + (pos == len - 1 ? 1 : 0) && zeros <= n)
      self(self, prefix << 1, pos + 1, ones, zeros + 1);
    if (ones < n) self(self, (prefix << 1) | 1u, pos + 1, ones + 1, zeros);
  };
  rec(rec, 0, 0, 0, 0);
}

template <typename F>
void for_each_triangulation(int n, F&& f, int max_n = default_max_size()) {
  for_each_word(n, [&](std::uint64_t w) { f(from_packed(w, n)); }, max_n);
}

inline std::vector<triangulation> enumerate_triangulations(int n, int max_n = default_max_size()) {
  std::vector<triangulation> out;
  for_each_triangulation(n, [&](triangulation t) { out.push_back(std::move(t)); }, max_n);
  return out;
}

// Plain bidirectional breadth-first search over packed words, without any
// common-edge decomposition.  Always expands the smaller frontier, the
// source side on ties.
inline int bidirectional_distance(std::uint64_t source, std::uint64_t target, int n) {
  if (source == target) return 0;
  std::unordered_map<std::uint64_t, int> seen[2];
  std::vector<std::uint64_t> frontier[2] = {{source}, {target}};
  int depth[2] = {0, 0};
  seen[0].emplace(source, 0);
  seen[1].emplace(target, 0);
  std::vector<std::uint64_t> next;
  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    auto& mine = seen[side];
    const auto& other = seen[1 - side];
    int best = -1;
    next.clear();
    for (std::uint64_t w : frontier[side]) {
      detail::for_each_neighbor(w, n, [&](chord, chord, std::uint64_t nw) {
        if (auto it = other.find(nw); it != other.end()) {
          const int total = depth[side] + 1 + it->second;
          if (best < 0 || total < best) best = total;
        }
        if (mine.emplace(nw, depth[side] + 1).second) next.push_back(nw);
      });
    }
    if (best >= 0) return best;
    ++depth[side];
    frontier[side].swap(next);
  }
  throw error(errc::invalid_argument, "flip graph search exhausted without meeting");
}

inline int bfs_distance(const triangulation& s, const triangulation& t) {
  require_same_size(s, t);
  return bidirectional_distance(s.key(), t.key(), s.size());
}

namespace detail {

// Sub-polygons cut out by the chords common to both triangulations, each
// given as its sorted vertex labels.
inline std::vector<std::vector<int>> common_edge_regions(const triangulation& s, const triangulation& t) {
  const int n = s.size();
  std::vector<chord> common;
  std::set_intersection(s.chords().begin(), s.chords().end(), t.chords().begin(), t.chords().end(),
                        std::back_inserter(common));
  std::vector<std::vector<int>> pending(1);
  for (int v = 0; v <= n + 1; ++v) pending[0].push_back(v);
  std::vector<std::vector<int>> done;
  while (!pending.empty()) {
    auto region = std::move(pending.back());
    pending.pop_back();
    const int m = static_cast<int>(region.size());
    bool split = false;
    for (const auto& c : common) {
      auto ia = std::lower_bound(region.begin(), region.end(), c.a);
      auto ib = std::lower_bound(region.begin(), region.end(), c.b);
      if (ia == region.end() || *ia != c.a || ib == region.end() || *ib != c.b) continue;
      const int pa = static_cast<int>(ia - region.begin());
      const int pb = static_cast<int>(ib - region.begin());
      if (pb - pa == 1 || (pa == 0 && pb == m - 1)) continue;  // a side of this region
      std::vector<int> inner(ia, ib + 1);
      std::vector<int> outer(region.begin(), ia + 1);
      outer.insert(outer.end(), ib, region.end());
      pending.push_back(std::move(inner));
      pending.push_back(std::move(outer));
      split = true;
      break;
    }
    if (!split) done.push_back(std::move(region));
  }
  std::sort(done.begin(), done.end());
  return done;
}

// Restriction of t to a region, relabelled so the region's vertices in
// sorted order become 0..m-1 (the last one being the new root vertex).
inline triangulation restrict_to_region(const triangulation& t, const std::vector<int>& region) {
  const int m = static_cast<int>(region.size());
  auto index = [&](int v) -> int {
    auto it = std::lower_bound(region.begin(), region.end(), v);
    return it != region.end() && *it == v ? static_cast<int>(it - region.begin()) : -1;
  };
  std::vector<chord> sub;
  for (const auto& c : t.chords()) {
    const int ia = index(c.a);
    const int ib = index(c.b);
    if (ia < 0 || ib < 0 || cyclically_adjacent(ia, ib, m - 2)) continue;
    sub.push_back({ia, ib});
  }
  return triangulation::from_chords(m - 2, std::move(sub));
}

}  // namespace detail

// Splits a pair along every common chord.  The subproblems are independent:
// a geodesic never flips a common chord.
inline std::vector<pair_problem> decompose_on_common_edges(const pair_problem& p) {
  std::vector<pair_problem> out;
  for (const auto& region : detail::common_edge_regions(p.source(), p.target()))
    out.emplace_back(detail::restrict_to_region(p.source(), region), detail::restrict_to_region(p.target(), region));
  return out;
}

inline int distance(const triangulation& s, const triangulation& t) {
  require_same_size(s, t);
  if (s == t) return 0;
  int total = 0;
  for (const auto& sub : decompose_on_common_edges({s, t}))
    if (sub.size() >= 2) total += bidirectional_distance(sub.source().key(), sub.target().key(), sub.size());
  return total;
}

inline int distance(const pair_problem& p) { return distance(p.source(), p.target()); }

namespace detail {

// Memoized distance to a fixed target, keyed by packed word.
class distance_to_target {
 public:
  explicit distance_to_target(const triangulation& target) : target_(target) {}

  int operator()(std::uint64_t word) {
    if (auto it = memo_.find(word); it != memo_.end()) return it->second;
    const int d = distance(from_packed(word, target_.size()), target_);
    memo_.emplace(word, d);
    return d;
  }

  const triangulation& target() const noexcept { return target_; }

 private:
  triangulation target_;
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace detail

// Chords of s whose flip strictly decreases the distance to t.
inline std::vector<chord> geodesic_first_moves(const triangulation& s, const triangulation& t) {
  require_same_size(s, t);
  if (s == t) throw error(errc::invalid_argument, "source equals target; there is no first move");
  detail::distance_to_target dist(t);
  const int d = dist(s.key());
  std::vector<chord> out;
  detail::for_each_neighbor(s.key(), s.size(), [&](chord removed, chord, std::uint64_t w) {
    if (dist(w) == d - 1) out.push_back(removed);
  });
  return out;
}

struct geodesic_set {
  std::vector<flip_path> paths;
  bool limit_exceeded = false;
};

inline constexpr std::size_t default_geodesic_limit = 10000;

// Every shortest flip path from s to t, up to `limit` of them.  A neighbour N
// of X lies on a geodesic iff d(N, t) = d(X, t) - 1.
inline geodesic_set all_geodesics(const triangulation& s, const triangulation& t,
                                  std::size_t limit = default_geodesic_limit) {
  require_same_size(s, t);
  const int n = s.size();
  detail::distance_to_target dist(t);
  geodesic_set out;
  std::vector<std::uint64_t> words{s.key()};
  std::vector<flip_move> moves;
  auto emit = [&] {
    flip_path p;
    for (auto w : words) p.states.push_back(from_packed(w, n));
    p.moves = moves;
    out.paths.push_back(std::move(p));
  };
  auto walk = [&](auto&& self, std::uint64_t w, int d) -> bool {
    if (d == 0) {
      if (out.paths.size() >= limit) {
        out.limit_exceeded = true;
        return false;
      }
      emit();
      return true;
    }
    bool keep_going = true;
    detail::for_each_neighbor(w, n, [&](chord removed, chord inserted, std::uint64_t nw) {
      if (!keep_going || dist(nw) != d - 1) return;
      words.push_back(nw);
      moves.push_back({removed, inserted});
      keep_going = self(self, nw, d - 1);
      words.pop_back();
      moves.pop_back();
    });
    return keep_going;
  };
  walk(walk, s.key(), dist(s.key()));
  return out;
}

// Move-by-move validation of a path.
inline bool is_valid_path(const flip_path& p) {
  if (p.states.empty() || p.states.size() != p.moves.size() + 1) return false;
  for (std::size_t i = 0; i < p.moves.size(); ++i) {
    if (p.states[i].size() != p.states[0].size() || !p.states[i].contains(p.moves[i].removed)) return false;
    auto [next, move] = flip(p.states[i], p.moves[i].removed);
    if (!(next == p.states[i + 1]) || !(move == p.moves[i])) return false;
  }
  return true;
}

}  // namespace assoc
