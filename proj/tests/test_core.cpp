#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "assoc/assoc.hpp"

using namespace assoc;

namespace {

// Crossing by plane geometry: vertices on a circle, proper segment intersection.
bool segments_cross(chord c1, chord c2, int n) {
  auto pt = [n](int v) {
    const double a = 2 * std::numbers::pi * v / (n + 2);
    return std::pair{std::cos(a), std::sin(a)};
  };
  auto orient = [](auto p, auto q, auto r) {
    return (q.first - p.first) * (r.second - p.second) - (q.second - p.second) * (r.first - p.first);
  };
  auto a = pt(c1.a), b = pt(c1.b), c = pt(c2.a), d = pt(c2.b);
  const double d1 = orient(a, b, c), d2 = orient(a, b, d), d3 = orient(c, d, a), d4 = orient(c, d, b);
  const double eps = 1e-12;
  return ((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) && ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps));
}

errc code_of(auto&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return errc::invalid_argument;
}

}  // namespace

TEST(Chords, CrossingMatchesGeometry) {
  for (int n = 2; n <= 9; ++n) {
    std::vector<chord> all;
    for (int a = 0; a <= n + 1; ++a)
      for (int b = a + 2; b <= n + 1; ++b)
        if (!cyclically_adjacent(a, b, n)) all.push_back({a, b});
    for (auto x : all)
      for (auto y : all) EXPECT_EQ(chords_cross(x, y, n), segments_cross(x, y, n)) << to_string(x) << " " << to_string(y);
  }
}

TEST(Chords, MakeChordRejectsSides) {
  EXPECT_EQ(code_of([] { make_chord(1, 2, 5); }), errc::invalid_chord);
  EXPECT_EQ(code_of([] { make_chord(0, 6, 5); }), errc::invalid_chord);  // root side
  EXPECT_EQ(code_of([] { make_chord(3, 3, 5); }), errc::invalid_chord);
  EXPECT_EQ(code_of([] { make_chord(0, 9, 5); }), errc::invalid_chord);
  EXPECT_EQ(make_chord(4, 1, 5), (chord{1, 4}));
}

TEST(Words, Validation) {
  EXPECT_EQ(code_of([] { validate_word(""); }), errc::empty_input);
  EXPECT_EQ(code_of([] { validate_word("10a00"); }), errc::parse_error);
  EXPECT_EQ(code_of([] { validate_word("0100"); }), errc::prefix_violation);
  EXPECT_EQ(code_of([] { validate_word("1100"); }), errc::wrong_counts);
  EXPECT_EQ(code_of([] { validate_word("111"); }), errc::wrong_counts);
  EXPECT_EQ(validate_word("0").size(), 0);
  EXPECT_EQ(validate_word("10101010101011000").size(), 8);
  std::string big = std::string(32, '1') + std::string(33, '0');
  EXPECT_EQ(code_of([&] { validate_word(big); }), errc::resource_guard);
}

TEST(Words, KnownDecodings) {
  const auto s = decode("10101010101011000");
  EXPECT_EQ(format_chords(s), "0-8,1-8,2-8,3-8,4-8,5-7,5-8");
  const auto t = decode("11010101101010000");
  EXPECT_EQ(format_chords(t), "0-7,1-7,2-6,2-7,3-6,4-6,7-9");
  // size 1: the only triangulation has no chords
  EXPECT_TRUE(decode("100").chords().empty());
}

TEST(Words, RoundTripExhaustive) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> seen;
    for (const auto& t : enumerate_triangulations(n)) {
      const auto w = t.word().str();
      EXPECT_TRUE(seen.insert(w).second);
      EXPECT_EQ(word_to_triangulation(validate_word(w)), t);
      EXPECT_EQ(triangulation_to_word(t).str(), w);
      const auto back = triangulation::from_chords(n, t.chords());
      EXPECT_EQ(back.word().str(), w);
      if (n >= 2) EXPECT_EQ(parse_triangulation(format_chords(t)), t);  // size 1 has no chords to list
    }
  }
}

TEST(Triangulation, FromChordsErrors) {
  EXPECT_EQ(code_of([] { triangulation::from_chords(4, {{0, 2}, {0, 3}}); }), errc::invalid_triangulation);
  EXPECT_EQ(code_of([] { triangulation::from_chords(4, {{0, 2}, {1, 3}, {0, 4}}); }), errc::invalid_triangulation);
  EXPECT_EQ(code_of([] { triangulation::from_chords(4, {{0, 2}, {0, 2}, {0, 4}}); }), errc::invalid_triangulation);
  try {
    triangulation::from_chords(4, {{0, 2}, {1, 3}, {0, 4}});
  } catch (const error& e) {
    EXPECT_NE(std::string(e.what()).find("0-2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("1-3"), std::string::npos);
  }
}

TEST(Parsing, ChordListsAndWords) {
  const auto s = parse_triangulation("10101010101011000");
  EXPECT_EQ(parse_triangulation("0-8,1-8,2-8,3-8,4-8,5-8,5-7"), s);
  EXPECT_EQ(parse_triangulation(" 5-7, 0-8,1-8,2-8,3-8,4-8,5-8 "), s);
  // 'r' names the root vertex n+1
  EXPECT_EQ(parse_triangulation("0-7,1-7,2-6,2-7,3-6,4-6,7-r"), decode("11010101101010000"));
  EXPECT_EQ(code_of([] { parse_triangulation("1-2"); }), errc::invalid_chord);
  EXPECT_EQ(code_of([] { parse_triangulation("0-2,x-3"); }), errc::parse_error);
  EXPECT_EQ(code_of([] { parse_triangulation(""); }), errc::empty_input);
}

TEST(Pairs, SizeMismatch) {
  EXPECT_EQ(code_of([] { pair_problem(decode("100"), decode("11000")); }), errc::size_mismatch);
}

TEST(Symmetry, GroupActsFaithfully) {
  for (int n = 2; n <= 7; ++n) {
    const auto group = dihedral_group(n);
    ASSERT_EQ(group.size(), static_cast<std::size_t>(2 * (n + 2)));
    for (const auto& g : group)
      for (int v = 0; v <= n + 1; ++v) EXPECT_EQ(g.inverse(n).apply(g.apply(v, n), n), v);
    for (const auto& t : enumerate_triangulations(n)) {
      std::set<std::string> orbit;
      for (const auto& g : group) orbit.insert(apply_symmetry(t, g).word().str());
      EXPECT_EQ(canonical_source(t).word().str(), *orbit.begin());
    }
  }
}

// Orbits of all 25 ordered pentagon pairs, enumerated directly.
TEST(Symmetry, PentagonPairOrbits) {
  const auto all = enumerate_triangulations(3);
  ASSERT_EQ(all.size(), 5u);
  std::set<std::pair<std::string, std::string>> reps;
  std::set<std::pair<std::string, std::string>> seen;
  int orbits = 0;
  for (const auto& s : all)
    for (const auto& t : all) {
      const auto key = std::pair{s.word().str(), t.word().str()};
      if (seen.count(key)) continue;
      ++orbits;
      for (const auto& g : dihedral_group(3))
        seen.insert({apply_symmetry(s, g).word().str(), apply_symmetry(t, g).word().str()});
      const auto c = canonical_pair({s, t});
      reps.insert({c.source().word().str(), c.target().word().str()});
    }
  EXPECT_EQ(orbits, 3);
  EXPECT_EQ(reps.size(), 3u);
  EXPECT_EQ(pair_orbit_count(3), 3u);
}

TEST(Symmetry, CanonicalPairIsOrbitInvariant) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const int n = 3 + i % 7;
    const auto p = random_pair(n, rng);
    const auto c = canonical_pair(p);
    for (const auto& g : dihedral_group(n)) {
      const auto q = canonical_pair(apply_symmetry(p, g));
      EXPECT_EQ(q.source(), c.source());
      EXPECT_EQ(q.target(), c.target());
    }
    EXPECT_EQ(canonical_pair(c).source(), c.source());
    EXPECT_EQ(distance(c), distance(p));
    EXPECT_EQ(conflict_count(c.source(), c.target()), conflict_count(p.source(), p.target()));
  }
}
