#include <gtest/gtest.h>

#include <random>

#include "assoc/assoc.hpp"

using namespace assoc;

TEST(Properties, MetricAxiomsOnRandomTriples) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const int n = 2 + i % 8;
    const auto a = random_triangulation(n, rng);
    const auto b = random_triangulation(n, rng);
    const auto c = random_triangulation(n, rng);
    const int ab = distance(a, b), ba = distance(b, a), ac = distance(a, c), cb = distance(c, b);
    EXPECT_EQ(distance(a, a), 0);
    EXPECT_EQ(ab, ba);
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_LE(ab, ac + cb);
  }
}

TEST(Properties, DecompositionMatchesPlainSearch) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 10000; ++i) {
    const int n = 1 + i % 9;
    auto p = random_pair(n, rng);
    // a third of the pairs share a padded fan, so decomposition has work to do
    if (i % 3 == 0 && n <= 7) p = pad_with_common_triangles(p, 2);
    const int d = distance(p);
    EXPECT_EQ(d, bfs_distance(p.source(), p.target())) << p.source().word().str() << " " << p.target().word().str();
    EXPECT_LE(distance_lower_bound(p.source(), p.target()), d);
    const auto g = greedy_path(p.source(), p.target());
    EXPECT_GE(g.length, d);
    EXPECT_LE(g.length, conflict_count(p.source(), p.target()));
    EXPECT_LE(d, std::max(0, 2 * p.size() - 2));
  }
}

TEST(Properties, DiameterBoundOnAllPairs) {
  for (int n = 1; n <= 8; ++n) {
    const flip_table table(n);
    int worst = 0;
    for (std::uint32_t j = 0; j < table.count(); ++j) {
      const auto* d = table.distances_to(j);
      for (std::uint32_t i = 0; i < table.count(); ++i) worst = std::max<int>(worst, d[i]);
    }
    EXPECT_LE(worst, std::max(0, 2 * n - 2)) << n;
  }
}

TEST(Properties, GreedyWithinBoundsOnCensus) {
  for (const auto& r : run_census(7)) {
    EXPECT_GE(r.greedy_length, r.distance);
    EXPECT_LE(r.greedy_length, r.conflicts);
    EXPECT_LE(r.distance, 12);
  }
}
