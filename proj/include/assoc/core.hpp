#pragma once

// Triangulations of a marked convex (n+2)-gon and their dual tree words.
//
// Labelling: vertices are 0..n+1 counterclockwise, n+1 being the root vertex.
// Boundary interval i (0 <= i <= n) joins vertex i-1 to vertex i, where
// interval 0 starts at the root vertex; the root interval joins n to n+1.
// The dual tree is rooted at the triangle on the root interval and its leaves
// read left to right are the intervals 0..n.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assoc/detail/packed.hpp"
#include "assoc/error.hpp"

namespace assoc {

using detail::max_size;

// An unordered pair of vertex labels, stored with a < b.
struct chord {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const chord&, const chord&) = default;
};

inline std::string to_string(chord c) { return std::to_string(c.a) + "-" + std::to_string(c.b); }

inline bool cyclically_adjacent(int u, int v, int n) {
  const int d = u > v ? u - v : v - u;
  return d == 1 || d == n + 1;
}

// Validated, normalized chord of the (n+2)-gon.
inline chord make_chord(int u, int v, int n) {
  if (u < 0 || v < 0 || u > n + 1 || v > n + 1)
    throw error(errc::invalid_chord, std::to_string(u) + "-" + std::to_string(v) +
                                         " has a label outside 0.." + std::to_string(n + 1));
  if (u == v) throw error(errc::invalid_chord, std::to_string(u) + "-" + std::to_string(v) + " is a loop");
  if (cyclically_adjacent(u, v, n))
    throw error(errc::invalid_chord,
                std::to_string(u) + "-" + std::to_string(v) + " is a polygon side, not a chord");
  return u < v ? chord{u, v} : chord{v, u};
}

// Chords cross iff they share no endpoint and exactly one endpoint of c2
// lies strictly inside c1's span.  The labels are already in cyclic order, so
// n only matters for validity.
inline bool chords_cross(chord c1, chord c2, [[maybe_unused]] int n = 0) noexcept {
  if (c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b) return false;
  const bool a_in = c1.a < c2.a && c2.a < c1.b;
  const bool b_in = c1.a < c2.b && c2.b < c1.b;
  return a_in != b_in;
}

// Preorder encoding of a rooted binary tree: 1 per internal node, 0 per leaf.
class tree_word {
 public:
  tree_word() : tree_word(0b100, 1) {}

  static tree_word from_packed(std::uint64_t bits, int n) { return tree_word(bits, n); }

  int size() const noexcept { return n_; }
  std::uint64_t packed() const noexcept { return bits_; }

  std::string str() const {
    const int len = detail::word_length(n_);
    std::string s(len, '0');
    for (int i = 0; i < len; ++i)
      if ((bits_ >> (len - 1 - i)) & 1u) s[i] = '1';
    return s;
  }

  friend bool operator==(const tree_word&, const tree_word&) = default;
  friend auto operator<=>(const tree_word& x, const tree_word& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.bits_ <=> y.bits_;
  }

 private:
  tree_word(std::uint64_t bits, int n) : bits_(bits), n_(n) {}

  std::uint64_t bits_;
  int n_;
};

inline tree_word validate_word(std::string_view bits) {
  if (bits.empty()) throw error(errc::empty_input, "tree word is empty");
  int ones = 0;
  int zeros = 0;
  std::uint64_t packed = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const char ch = bits[i];
    if (ch != '0' && ch != '1')
      throw error(errc::parse_error, "unexpected character '" + std::string(1, ch) + "' at position " +
                                         std::to_string(i));
    // A ballot prefix closes (zeros == ones + 1) only at the very end.
    if (zeros > ones)
      throw error(errc::prefix_violation, "prefix of length " + std::to_string(i) +
                                              " already encodes a complete tree");
    ch == '1' ? ++ones : ++zeros;
    if (bits.size() <= 64) packed = (packed << 1) | (ch == '1' ? 1u : 0u);
  }
  if (zeros != ones + 1)
    throw error(errc::wrong_counts, std::to_string(ones) + " ones and " + std::to_string(zeros) +
                                        " zeros; expected n ones and n+1 zeros");
  if (ones > max_size)
    throw error(errc::resource_guard, "size " + std::to_string(ones) + " exceeds the supported maximum " +
                                          std::to_string(max_size));
  return tree_word::from_packed(packed, ones);
}

class triangulation {
 public:
  triangulation() : triangulation(tree_word{}) {}

  explicit triangulation(const tree_word& w) : n_(w.size()), word_(w.packed()) {
    const auto adj = detail::decode(word_, n_);
    detail::for_each_chord(adj, [&](int x, int y) {
      const int u = detail::to_label(x, n_);
      const int v = detail::to_label(y, n_);
      chords_.push_back(u < v ? chord{u, v} : chord{v, u});
    });
    std::sort(chords_.begin(), chords_.end());
  }

  // Validates count, chord geometry and pairwise non-crossing; n-1 pairwise
  // non-crossing diagonals are automatically maximal.
  static triangulation from_chords(int n, std::vector<chord> chords) {
    if (n < 1) throw error(errc::invalid_triangulation, "size must be at least 1");
    if (n > max_size)
      throw error(errc::resource_guard, "size " + std::to_string(n) + " exceeds the supported maximum");
    for (auto& c : chords) c = make_chord(c.a, c.b, n);
    std::sort(chords.begin(), chords.end());
    if (auto dup = std::adjacent_find(chords.begin(), chords.end()); dup != chords.end())
      throw error(errc::invalid_triangulation, "chord " + to_string(*dup) + " listed twice");
    if (static_cast<int>(chords.size()) != n - 1)
      throw error(errc::invalid_triangulation, std::to_string(chords.size()) + " chords given; a size-" +
                                                   std::to_string(n) + " triangulation has " +
                                                   std::to_string(n - 1));
    for (std::size_t i = 0; i < chords.size(); ++i)
      for (std::size_t j = i + 1; j < chords.size(); ++j)
        if (chords_cross(chords[i], chords[j], n))
          throw error(errc::invalid_triangulation,
                      "chords " + to_string(chords[i]) + " and " + to_string(chords[j]) + " cross");
    auto adj = detail::boundary(n);
    for (const auto& c : chords) adj.link(detail::to_q(c.a, n), detail::to_q(c.b, n));
    triangulation t;
    t.n_ = n;
    t.word_ = detail::encode(adj);
    t.chords_ = std::move(chords);
    return t;
  }

  int size() const noexcept { return n_; }
  const std::vector<chord>& chords() const noexcept { return chords_; }
  tree_word word() const { return tree_word::from_packed(word_, n_); }
  std::uint64_t key() const noexcept { return word_; }

  bool contains(chord c) const { return std::binary_search(chords_.begin(), chords_.end(), c); }

  detail::adjacency adjacency() const { return detail::decode(word_, n_); }

  friend bool operator==(const triangulation& x, const triangulation& y) {
    return x.n_ == y.n_ && x.word_ == y.word_;
  }
  friend auto operator<=>(const triangulation& x, const triangulation& y) { return x.word() <=> y.word(); }

 private:
  int n_ = 1;
  std::uint64_t word_ = 0b100;
  std::vector<chord> chords_;
};

inline triangulation word_to_triangulation(const tree_word& w) { return triangulation(w); }
inline tree_word triangulation_to_word(const triangulation& t) { return t.word(); }

inline triangulation from_packed(std::uint64_t word, int n) {
  return triangulation(tree_word::from_packed(word, n));
}

// Ordered pair of same-size triangulations.
class pair_problem {
 public:
  pair_problem(triangulation source, triangulation target)
      : source_(std::move(source)), target_(std::move(target)) {
    if (source_.size() != target_.size())
      throw error(errc::size_mismatch, "source has size " + std::to_string(source_.size()) +
                                           ", target has size " + std::to_string(target_.size()));
  }

  const triangulation& source() const noexcept { return source_; }
  const triangulation& target() const noexcept { return target_; }
  int size() const noexcept { return source_.size(); }

  friend bool operator==(const pair_problem&, const pair_problem&) = default;

 private:
  triangulation source_;
  triangulation target_;
};

inline void require_same_size(const triangulation& s, const triangulation& t) {
  if (s.size() != t.size())
    throw error(errc::size_mismatch,
                "sizes " + std::to_string(s.size()) + " and " + std::to_string(t.size()) + " differ");
}

// --- dihedral symmetry -----------------------------------------------------

struct symmetry_element {
  enum class kind { rotation, reflection };
  kind type = kind::rotation;
  int offset = 0;  // modulo n+2

  // rotation:   v -> v + offset
  // reflection: v -> offset - v
  int apply(int v, int n) const noexcept {
    const int m = n + 2;
    const int r = type == kind::rotation ? v + offset : offset - v;
    return ((r % m) + m) % m;
  }

  symmetry_element inverse(int n) const noexcept {
    if (type == kind::reflection) return *this;
    return {kind::rotation, (n + 2 - offset % (n + 2)) % (n + 2)};
  }

  friend bool operator==(const symmetry_element&, const symmetry_element&) = default;
};

// Rotations 0..n+1 followed by reflections 0..n+1.
inline std::vector<symmetry_element> dihedral_group(int n) {
  std::vector<symmetry_element> g;
  g.reserve(2 * (n + 2));
  for (int k = 0; k < n + 2; ++k) g.push_back({symmetry_element::kind::rotation, k});
  for (int k = 0; k < n + 2; ++k) g.push_back({symmetry_element::kind::reflection, k});
  return g;
}

inline triangulation apply_symmetry(const triangulation& t, const symmetry_element& g) {
  const int n = t.size();
  auto adj = detail::boundary(n);
  for (const auto& c : t.chords()) adj.link(detail::to_q(g.apply(c.a, n), n), detail::to_q(g.apply(c.b, n), n));
  return from_packed(detail::encode(adj), n);
}

inline pair_problem apply_symmetry(const pair_problem& p, const symmetry_element& g) {
  return {apply_symmetry(p.source(), g), apply_symmetry(p.target(), g)};
}

// Least-word member of t's dihedral orbit.
inline triangulation canonical_source(const triangulation& t) {
  std::uint64_t best = ~0ull;
  for (const auto& g : dihedral_group(t.size())) best = std::min(best, apply_symmetry(t, g).key());
  return from_packed(best, t.size());
}

// Least image of (S, T) under simultaneous dihedral action, ordered by the
// pair of tree words.  Pairs are not identified with their swaps.
inline pair_problem canonical_pair(const pair_problem& p) {
  std::pair<std::uint64_t, std::uint64_t> best{~0ull, ~0ull};
  for (const auto& g : dihedral_group(p.size())) {
    const std::pair key{apply_symmetry(p.source(), g).key(), apply_symmetry(p.target(), g).key()};
    best = std::min(best, key);
  }
  return {from_packed(best.first, p.size()), from_packed(best.second, p.size())};
}

// --- text formats ----------------------------------------------------------

inline std::string format_chords(const triangulation& t) {
  std::string out;
  for (const auto& c : t.chords()) {
    if (!out.empty()) out += ',';
    out += to_string(c);
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace detail

// "a-b,c-d,..." with "r" standing for the root vertex n+1; n is inferred as
// one more than the number of chords.
inline triangulation parse_chord_list(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw error(errc::empty_input, "chord list is empty");
  constexpr int root = -1;
  std::vector<std::pair<int, int>> raw;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw error(errc::parse_error, what + " at position " + std::to_string(pos));
  };
  auto skip_space = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto label = [&]() -> int {
    skip_space();
    if (pos < text.size() && (text[pos] == 'r' || text[pos] == 'R')) {
      ++pos;
      return root;
    }
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') fail("expected a vertex label");
    int v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000) fail("vertex label too large");
      ++pos;
    }
    return v;
  };
  while (true) {
    const int u = label();
    skip_space();
    if (pos >= text.size() || text[pos] != '-') fail("expected '-'");
    ++pos;
    const int v = label();
    raw.emplace_back(u, v);
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') fail("expected ','");
    ++pos;
  }
  const int n = static_cast<int>(raw.size()) + 1;
  std::vector<chord> chords;
  for (auto [u, v] : raw) {
    if (u == root) u = n + 1;
    if (v == root) v = n + 1;
    chords.push_back({u, v});
  }
  return triangulation::from_chords(n, std::move(chords));
}

// Accepts either a tree word or a chord list.
inline triangulation parse_triangulation(std::string_view text) {
  const auto trimmed = detail::trim(text);
  if (trimmed.empty()) throw error(errc::empty_input, "no triangulation given");
  if (trimmed.find('-') == std::string_view::npos) return triangulation(validate_word(trimmed));
  return parse_chord_list(trimmed);
}

}  // namespace assoc
