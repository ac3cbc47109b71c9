#pragma once

// Generators for the counterexample families.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "assoc/core.hpp"

namespace assoc {

inline triangulation decode(std::string_view word) { return triangulation(validate_word(word)); }

inline pair_problem theorem1_pair() {
  return {decode("10101010101011000"), decode("11010101101010000")};
}

inline pair_problem bidirectional9_pair() {
  return {decode("1010101100101110000"), decode("1111110101000100000")};
}

namespace detail {

inline std::string repeat(std::string_view unit, int times) {
  std::string out;
  for (int i = 0; i < times; ++i) out += unit;
  return out;
}

}  // namespace detail

// Size n = k+7.  S is a fan from vertex n over vertices 0..n-3 plus the chord
// (n-3, n-1); its only geodesic first move raises conflicts by exactly k.
inline pair_problem rising_pair(int k) {
  if (k < 1) throw error(errc::invalid_argument, "rising_pair needs k >= 1, got " + std::to_string(k));
  const int n = k + 7;
  if (n > max_size) throw error(errc::resource_guard, "rising_pair size " + std::to_string(n) + " too large");
  const std::string s = detail::repeat("10", n - 2) + "11000";
  const std::string t = "1" + detail::repeat("10", n - 5) + "1101010000";
  return {decode(s), decode(t)};
}

// Grows both triangulations by the same fan of m chords: the new vertices
// n+1..n+m are inserted between vertex n and the root, and the root vertex
// is joined to n, n+1, ..., n+m-1.
inline pair_problem pad_with_common_triangles(const pair_problem& p, int m) {
  if (m < 0) throw error(errc::invalid_argument, "padding count must be non-negative");
  if (m == 0) return p;
  const int n = p.size();
  const int big = n + m;
  if (big > max_size) throw error(errc::resource_guard, "padded size " + std::to_string(big) + " too large");
  const int root = big + 1;
  auto grow = [&](const triangulation& t) {
    std::vector<chord> chords;
    for (const auto& c : t.chords()) chords.push_back({c.a, c.b == n + 1 ? root : c.b});
    for (int v = n; v < n + m; ++v) chords.push_back({v, root});
    return triangulation::from_chords(big, std::move(chords));
  };
  return {grow(p.source()), grow(p.target())};
}

// Glues (S, T) to a mirror image of (T, S) along interval 0 of each.  The
// first copy keeps its labels 0..n+1 inside the (2n+2)-gon; the second is
// reflected by v -> -v mod (2n+2), which fixes 0 and n+1, so the shared side
// (0, n+1) becomes a common chord.
inline pair_problem double_pair(const pair_problem& p) {
  const int n = p.size();
  const int big = 2 * n;
  if (big > max_size) throw error(errc::resource_guard, "doubled size " + std::to_string(big) + " too large");
  const int m = big + 2;
  auto glue = [&](const triangulation& first, const triangulation& second) {
    std::vector<chord> chords{{0, n + 1}};
    for (const auto& c : first.chords()) chords.push_back(c);
    for (const auto& c : second.chords()) chords.push_back({(m - c.a) % m, (m - c.b) % m});
    return triangulation::from_chords(big, std::move(chords));
  };
  return {glue(p.source(), p.target()), glue(p.target(), p.source())};
}

inline pair_problem theorem4_pair(int k) { return double_pair(rising_pair(k)); }

// Uniform random tree word via the cycle lemma: among the rotations of a
// shuffled word with n ones and n+1 zeros exactly one is a ballot sequence.
template <typename Rng>
triangulation random_triangulation(int n, Rng& rng) {
  if (n < 1 || n > max_size) throw error(errc::invalid_argument, "random triangulation size out of range");
  std::string w(n, '1');
  w.append(n + 1, '0');
  std::shuffle(w.begin(), w.end(), rng);
  int height = 0;
  int low = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    height += w[i] == '1' ? 1 : -1;
    if (height < low) {
      low = height;
      start = i + 1;
    }
  }
  std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start % w.size()), w.end());
  return decode(w);
}

template <typename Rng>
pair_problem random_pair(int n, Rng& rng) {
  auto s = random_triangulation(n, rng);
  auto t = random_triangulation(n, rng);
  return {std::move(s), std::move(t)};
}

}  // namespace assoc
