#include <gtest/gtest.h>

#include <algorithm>

#include "assoc/assoc.hpp"

using namespace assoc;

namespace {

std::vector<int> sorted_profile(const triangulation& s, const triangulation& t) {
  std::vector<int> out;
  for (auto [c, k] : neighbor_conflict_profile(s, t)) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

// Brute force: walk every geodesic, keep those whose conflicts never rise.
bool monotone_by_enumeration(const triangulation& s, const triangulation& t) {
  for (const auto& path : all_geodesics(s, t, 1'000'000).paths) {
    const auto prof = conflict_profile_along(path, t);
    if (std::is_sorted(prof.rbegin(), prof.rend())) return true;
  }
  return false;
}

}  // namespace

TEST(Conflicts, SizeEightPair) {
  const auto p = theorem1_pair();
  const auto& s = p.source();
  const auto& t = p.target();
  EXPECT_EQ(conflict_count(s, t), 27);
  EXPECT_EQ(conflict_count(t, s), 27);
  const auto r = conflicts(s, t);
  int sum = 0;
  for (auto [c, k] : r.per_chord) sum += k;
  EXPECT_EQ(sum, 27);
  EXPECT_EQ(sorted_profile(s, t), (std::vector<int>{22, 22, 23, 26, 26, 27, 28}));
  EXPECT_EQ(sorted_profile(t, s), (std::vector<int>{21, 23, 24, 25, 25, 26, 29}));
  const std::vector<std::pair<chord, int>> by_chord{{{0, 8}, 27}, {{1, 8}, 26}, {{2, 8}, 26}, {{3, 8}, 23},
                                                    {{4, 8}, 22}, {{5, 7}, 28}, {{5, 8}, 22}};
  EXPECT_EQ(neighbor_conflict_profile(s, t), by_chord);
}

TEST(Conflicts, UniqueGeodesicWords) {
  const auto p = theorem1_pair();
  const auto g = all_geodesics(p.source(), p.target());
  ASSERT_EQ(g.paths.size(), 1u);
  EXPECT_EQ(conflict_profile_along(g.paths[0], p.target()), (std::vector<int>{27, 28, 21, 15, 10, 6, 3, 1, 0}));
  const std::vector<std::string> words{"10101010101011000", "10101010101010100", "10101010101100100",
                                       "10101010110100100", "10101011010100100", "10101011101010000",
                                       "10101101101010000", "10110101101010000", "11010101101010000"};
  std::vector<std::string> got;
  for (const auto& st : g.paths[0].states) got.push_back(st.word().str());
  EXPECT_EQ(got, words);
}

TEST(Conflicts, SelfAndSymmetry) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_pair(2 + i % 10, rng);
    EXPECT_EQ(conflict_count(p.source(), p.source()), 0);
    EXPECT_EQ(conflict_count(p.source(), p.target()), conflict_count(p.target(), p.source()));
    EXPECT_EQ(conflict_count(p.source(), p.target()) == 0, p.source() == p.target());
  }
}

TEST(Classification, PartitionsChords) {
  const auto p = theorem1_pair();
  const auto c = classify_edges(p.source(), p.target());
  EXPECT_TRUE(c.common.empty());
  EXPECT_TRUE(c.one_off.empty());
  EXPECT_EQ(c.other.size(), 7u);
  const auto b = bidirectional9_pair();
  const auto d = classify_edges(b.source(), b.target());
  EXPECT_EQ(d.common.size() + d.one_off.size() + d.other.size(), 8u);
}

TEST(LowerBound, SizeEightPairIsTight) {
  const auto p = theorem1_pair();
  EXPECT_EQ(distance_lower_bound(p.source(), p.target()), 8);
  EXPECT_EQ(distance_lower_bound(p.source(), p.source()), 0);
}

TEST(Greedy, SizeEightPairBothDirections) {
  const auto p = theorem1_pair();
  const auto fwd = greedy_path(p.source(), p.target());
  EXPECT_EQ(fwd.length, 9);
  EXPECT_EQ(fwd.overestimate, 1);
  EXPECT_TRUE(is_valid_path(fwd.path));
  const auto bwd = greedy_path(p.target(), p.source());
  EXPECT_EQ(bwd.length, 8);
  EXPECT_EQ(bwd.overestimate, 0);
  // conflicts fall strictly along any greedy walk
  const auto prof = conflict_profile_along(fwd.path, p.target());
  for (std::size_t i = 1; i < prof.size(); ++i) EXPECT_LT(prof[i], prof[i - 1]);
}

TEST(Greedy, TieRulesStayWithinBounds) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_pair(3 + i % 7, rng);
    const int d = distance(p);
    const int c = conflict_count(p.source(), p.target());
    for (auto rule : {tie_rule::preorder_first, tie_rule::least_word, tie_rule::first_found}) {
      const auto w = greedy_walk(p.source(), p.target(), rule);
      EXPECT_TRUE(is_valid_path(w));
      EXPECT_GE(w.length(), d);
      EXPECT_LE(w.length(), c);
    }
  }
}

TEST(FirstStep, SizeEightPairForcedIncrease) {
  const auto p = theorem1_pair();
  const auto f = first_step_conflict_behavior(p.source(), p.target());
  EXPECT_TRUE(f.all_first_moves_increase);
  EXPECT_EQ(f.min_rise, 1);
  EXPECT_FALSE(exists_conflict_monotone_geodesic(p.source(), p.target()));
  EXPECT_TRUE(exists_conflict_monotone_geodesic(p.target(), p.source()));
  EXPECT_EQ(geodesic_peak_rise(p.source(), p.target()), 1);
}

TEST(FirstStep, BidirectionalNine) {
  const auto p = bidirectional9_pair();
  EXPECT_EQ(conflict_count(p.source(), p.target()), 33);
  EXPECT_EQ(geodesic_first_moves(p.source(), p.target()), std::vector<chord>{chord(2, 4)});
  EXPECT_EQ(geodesic_first_moves(p.target(), p.source()), std::vector<chord>{chord(4, 6)});
  EXPECT_EQ(conflict_count(flip(p.source(), {2, 4}).first, p.target()), 34);
  EXPECT_EQ(conflict_count(flip(p.target(), {4, 6}).first, p.source()), 34);
  EXPECT_FALSE(exists_conflict_monotone_geodesic(p.source(), p.target()));
  EXPECT_FALSE(exists_conflict_monotone_geodesic(p.target(), p.source()));
}

TEST(Monotone, SearchMatchesEnumeration) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_pair(4 + i % 5, rng);
    const bool fast = exists_conflict_monotone_geodesic(p.source(), p.target());
    EXPECT_EQ(fast, monotone_by_enumeration(p.source(), p.target())) << p.source().word().str() << " "
                                                                      << p.target().word().str();
    if (!(p.source() == p.target())) {
      EXPECT_EQ(geodesic_peak_rise(p.source(), p.target()) <= 0, fast);
    }
  }
}

// Conflicts are not a metric: a pentagon triple breaks the triangle inequality.
TEST(Conflicts, PentagonSemiMetric) {
  const auto all = enumerate_triangulations(3);
  bool found = false;
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
        found = found || (conflict_count(a, c) == 1 && conflict_count(c, b) == 1 && conflict_count(a, b) == 3);
  EXPECT_TRUE(found);
}
