#pragma once

// Bit-level representation used by the search routines.
//
// Vertices are re-indexed so the root vertex is q = 0 and the vertex labelled
// i is q = i + 1; cyclic order is then plain integer order and a chord (x, y)
// with x < y subtends exactly the vertices strictly between x and y.  A tree
// word of size n is packed into the low 2n+1 bits of a uint64 with its first
// symbol in the most significant position, so numeric order on equal-size
// words is lexicographic order with '0' < '1'.

#include <array>
#include <bit>
#include <cstdint>
#include <utility>

namespace assoc::detail {

inline constexpr int max_size = 31;

using mask = std::uint64_t;

inline constexpr mask bit(int q) noexcept { return mask{1} << q; }

// Vertices strictly between x and y (x < y).
inline constexpr mask between(int x, int y) noexcept {
  return (bit(y) - 1) & ~(bit(x + 1) - 1);
}

inline constexpr int to_q(int label, int n) noexcept { return label == n + 1 ? 0 : label + 1; }
inline constexpr int to_label(int q, int n) noexcept { return q == 0 ? n + 1 : q - 1; }

struct adjacency {
  int n = 0;
  std::array<mask, max_size + 2> nb{};

  void link(int x, int y) noexcept {
    nb[x] |= bit(y);
    nb[y] |= bit(x);
  }
  void unlink(int x, int y) noexcept {
    nb[x] &= ~bit(y);
    nb[y] &= ~bit(x);
  }
  bool has(int x, int y) const noexcept { return (nb[x] >> y) & 1u; }

  // True for polygon sides, which are never chords.
  bool is_side(int x, int y) const noexcept {
    if (x > y) std::swap(x, y);
    return y - x == 1 || (x == 0 && y == n + 1);
  }
};

inline adjacency boundary(int n) noexcept {
  adjacency adj;
  adj.n = n;
  for (int q = 0; q <= n; ++q) adj.link(q, q + 1);
  adj.link(0, n + 1);
  return adj;
}

inline int word_length(int n) noexcept { return 2 * n + 1; }

// Dual tree of a packed word -> adjacency of the triangulation.
inline adjacency decode(std::uint64_t word, int n) noexcept {
  adjacency adj = boundary(n);
  const int len = word_length(n);
  int pos = 0;
  auto parse = [&](auto&& self, int qa) -> int {
    const bool internal = (word >> (len - 1 - pos)) & 1u;
    ++pos;
    if (!internal) return qa + 1;
    const int apex = self(self, qa);
    const int qb = self(self, apex);
    adj.link(qa, apex);
    adj.link(apex, qb);
    adj.link(qa, qb);
    return qb;
  };
  parse(parse, 0);
  return adj;
}

inline std::uint64_t encode(const adjacency& adj) noexcept {
  std::uint64_t word = 0;
  auto emit = [&](auto&& self, int qa, int qb) -> void {
    if (qb - qa == 1) {
      word <<= 1;
      return;
    }
    const int apex = std::countr_zero(adj.nb[qa] & adj.nb[qb] & between(qa, qb));
    word = (word << 1) | 1u;
    self(self, qa, apex);
    self(self, apex, qb);
  };
  emit(emit, 0, adj.n + 1);
  return word;
}

// The two apexes of the quadrilateral around chord (x, y), x < y: one inside
// (x, y) and one outside.
inline std::pair<int, int> quad_apexes(const adjacency& adj, int x, int y) noexcept {
  const mask common = adj.nb[x] & adj.nb[y];
  const mask inside = common & between(x, y);
  const mask outside = common & ~between(x, y) & ~bit(x) & ~bit(y);
  return {std::countr_zero(inside), std::countr_zero(outside)};
}

// Replaces chord (x, y) by the other diagonal of its quadrilateral; returns
// the inserted diagonal normalized to (low, high).
inline std::pair<int, int> flip_in_place(adjacency& adj, int x, int y) noexcept {
  if (x > y) std::swap(x, y);
  auto [c1, c2] = quad_apexes(adj, x, y);
  adj.unlink(x, y);
  adj.link(c1, c2);
  return c1 < c2 ? std::pair{c1, c2} : std::pair{c2, c1};
}

// Chords of a packed word listed in preorder of their dual tree nodes: the
// node whose '1' comes first in the word comes first.  A node's chord is the
// side of its triangle facing its parent; the root has none.
inline int preorder_chords(std::uint64_t word, int n, std::pair<int, int>* out) noexcept {
  const int len = word_length(n);
  int pos = 0;
  int count = 0;
  auto parse = [&](auto&& self, int qa) -> int {
    const bool internal = (word >> (len - 1 - pos)) & 1u;
    ++pos;
    if (!internal) return qa + 1;
    const int slot = count++;
    const int apex = self(self, qa);
    const int qb = self(self, apex);
    out[slot] = {qa, qb};
    return qb;
  };
  parse(parse, 0);
  // slot 0 is the root, whose side is the root interval
  for (int i = 1; i < count; ++i) out[i - 1] = out[i];
  return count - 1;
}

// Calls f(x, y) for each chord (x < y in q-space) in q-space order.
template <typename F>
void for_each_chord(const adjacency& adj, F&& f) {
  for (int x = 0; x <= adj.n + 1; ++x) {
    mask higher = adj.nb[x] & ~(bit(x + 1) - 1);
    while (higher) {
      const int y = std::countr_zero(higher);
      higher &= higher - 1;
      if (!adj.is_side(x, y)) f(x, y);
    }
  }
}

}  // namespace assoc::detail
