#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "mpr/errors.hpp"
#include "mpr/matching.hpp"

using namespace mpr;

namespace {

const Graph kK3(3, {{0, 1}, {0, 2}, {1, 2}});
const Graph kC4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
const Graph kC5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
const Graph kC7(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}});

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int k = 0; k < n; ++k) e.push_back({k, (k + 1) % n});
  return Graph(n, e);
}

// Lucas numbers count the matchings of C_n: L(n) = L(n-1) + L(n-2), L(1)=1, L(2)=3.
long lucas(int n) {
  long a = 2, b = 1;
  for (int k = 0; k < n; ++k) {
    const long c = a + b;
    a = b;
    b = c;
  }
  return a;
}

}  // namespace

TEST(Matching, MaximumMatchingExamples) {
  EXPECT_EQ(maximum_matching(Graph(0, {})).size(), 0);
  EXPECT_EQ(maximum_matching(kK3).size(), 1);
  EXPECT_EQ(maximum_matching(kC5).size(), 2);
  EXPECT_TRUE(is_matching(kC5, maximum_matching(kC5).edges()));
}

TEST(Matching, MaximumMatchingMatchesBruteForce) {
  for (const auto& [name, g] : oracle::corpus()) {
    if (g.edge_count() > 16) continue;
    int best = 0;
    for (auto m : oracle::all_matchings(g)) best = std::max(best, oracle::popcount(m));
    EXPECT_EQ(maximum_matching(g).size(), best) << name;
  }
}

TEST(Matching, PerfectMatchingExamples) {
  EXPECT_TRUE(has_perfect_matching(Graph(2, {{0, 1}})));
  EXPECT_FALSE(has_perfect_matching(kK3));
  EXPECT_TRUE(has_perfect_matching(kC4));
}

TEST(Matching, NearPerfectExcluding) {
  const Matching k3 = near_pm_excluding(kK3, 0);
  EXPECT_EQ(k3.size(), 1);
  EXPECT_TRUE(k3.contains(*kK3.find_edge(1, 2)));

  const Matching c5 = near_pm_excluding(kC5, 0);
  EXPECT_EQ(c5.edges(), (EdgeSet{*kC5.find_edge(1, 2), *kC5.find_edge(3, 4)}));

  const Matching c7 = near_pm_excluding(kC7, 3);
  EXPECT_EQ(c7.size(), 3);
  EXPECT_EQ(covered_nodes(kC7, c7), kC7.all_nodes().without(3));

  EXPECT_THROW(near_pm_excluding(kC4, 0), PreconditionError);
}

TEST(Matching, SmallestPerfectMatchingIsLexicographicallyFirst) {
  for (const auto& [name, g] : oracle::corpus()) {
    const auto ms = enumerate_matchings(g);
    std::optional<Matching> first;
    for (const Matching& m : ms) {
      if (covered_nodes(g, m) == g.all_nodes() && (!first || m < *first)) first = m;
    }
    EXPECT_EQ(smallest_perfect_matching(g, whole(g)), first) << name;
  }
}

TEST(Matching, EnumerationCounts) {
  const Graph k2(2, {{0, 1}});
  const auto m2 = enumerate_matchings(k2);
  ASSERT_EQ(m2.size(), 2u);
  EXPECT_EQ(m2[0].size(), 0);
  EXPECT_EQ(m2[1].size(), 1);
  EXPECT_EQ(enumerate_matchings(kK3).size(), 4u);
  EXPECT_EQ(enumerate_matchings(kC5).size(), 11u);
  for (int n = 3; n <= 12; ++n) EXPECT_EQ(static_cast<long>(enumerate_matchings(cycle(n)).size()), lucas(n)) << n;
}

TEST(Matching, EnumerationAgreesWithSubsetScanAndIsCanonical) {
  for (const auto& [name, g] : oracle::corpus()) {
    const auto ours = enumerate_matchings(g);
    const auto ref = oracle::all_matchings(g);
    ASSERT_EQ(ours.size(), ref.size()) << name;
    std::vector<std::uint64_t> bits;
    for (const Matching& m : ours) bits.push_back(m.edges().bits());
    std::sort(bits.begin(), bits.end());
    EXPECT_EQ(bits, ref) << name;
    EXPECT_TRUE(std::is_sorted(ours.begin(), ours.end())) << name;
  }
}

TEST(Matching, EnumerationGuard) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) e.push_back({a, b});
  }
  const Graph k8(8, e);
  EXPECT_THROW(enumerate_matchings(k8, 24), GuardExceeded);
}

TEST(Matching, CycleAndPathHelpers) {
  const Matching m = cycle_near_pm(kC5, {0, 1, 2, 3, 4}, 2);
  EXPECT_EQ(m.size(), 2);
  EXPECT_EQ(covered_nodes(kC5, m), kC5.all_nodes().without(2));
  const Matching p = path_pm(kC5, {1, 2, 3, 4});
  EXPECT_EQ(p.edges(), (EdgeSet{*kC5.find_edge(1, 2), *kC5.find_edge(3, 4)}));
}
