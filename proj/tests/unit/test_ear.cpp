#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "mpr/ear.hpp"
#include "mpr/errors.hpp"

using namespace mpr;

namespace {

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) e.push_back({a, b});
  }
  return Graph(n, e);
}

const Graph kC5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
const Graph kC7(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}});

// Independent re-check of the decomposition: odd ears, endpoints already
// present, interiors new, edges partition the graph, prefixes factor-critical
// and nice (and 2-connected for the proper variant).
void expect_valid(const Graph& g, const EarDecomposition& d, bool proper) {
  const auto ms = oracle::all_matchings(g);
  ASSERT_EQ(d.initial_cycle.size() % 2, 1u);
  std::uint64_t nodes = NodeSet::from_range(d.initial_cycle).bits();
  std::uint64_t edges = cycle_edges(g, d.initial_cycle).bits();
  auto check_prefix = [&] {
    EXPECT_TRUE(oracle::factor_critical(g, nodes, ms));
    EXPECT_TRUE(oracle::has_pm(g, g.all_nodes().bits() & ~nodes, ms));
    if (proper) EXPECT_TRUE(oracle::two_connected(g, nodes));
  };
  check_prefix();
  for (const Ear& ear : d.ears) {
    EXPECT_EQ(ear.length() % 2, 1);
    EXPECT_TRUE(oracle::bit(nodes, ear.endpoint_a()));
    EXPECT_TRUE(oracle::bit(nodes, ear.endpoint_b()));
    if (proper) EXPECT_TRUE(ear.is_proper());
    for (NodeId x : ear.interior()) EXPECT_FALSE(oracle::bit(nodes, x));
    const std::uint64_t pe = path_edges(g, ear.path).bits();
    EXPECT_EQ(pe & edges, 0u);
    edges |= pe;
    nodes |= NodeSet::from_range(ear.path).bits();
    check_prefix();
  }
  EXPECT_EQ(nodes, g.all_nodes().bits());
  EXPECT_EQ(edges, g.all_edges().bits());
  EXPECT_EQ(check_ear_decomposition(g, whole(g), d, proper), std::nullopt);
}

}  // namespace

TEST(Ear, CycleAloneHasNoEars) {
  const EarDecomposition d = odd_ear_decomposition(kC5, {0, 1, 2, 3, 4});
  EXPECT_TRUE(d.ears.empty());
  const EarDecomposition p = proper_odd_ear_decomposition(kC7);
  EXPECT_TRUE(p.ears.empty());
  EXPECT_EQ(p.initial_cycle.size(), 7u);
}

TEST(Ear, TriangleWithOneOddEar) {
  // Triangle 0-1-2 plus the 3-path 0-3-4-1.
  const Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {1, 4}});
  const EarDecomposition d = odd_ear_decomposition(g, {0, 1, 2});
  ASSERT_EQ(d.ears.size(), 1u);
  EXPECT_EQ(d.ears[0].length(), 3);
  EXPECT_EQ(NodeSet::from_range(d.ears[0].path), (NodeSet{0, 1, 3, 4}));
  expect_valid(g, d, false);
}

TEST(Ear, FirstEarContainsRequestedEdge) {
  const Graph k5 = complete(5);
  const Cycle c{0, 1, 2};
  for (NodeId k : {3, 4}) {
    const EdgeId first = *k5.find_edge(0, k);
    const EarDecomposition d = odd_ear_decomposition(k5, c, first);
    ASSERT_FALSE(d.ears.empty());
    EXPECT_TRUE(path_edges(k5, d.ears[0].path).contains(first));
    expect_valid(k5, d, false);
  }
}

TEST(Ear, ProperDecompositionOfK5) {
  const Graph k5 = complete(5);
  const EarDecomposition d = proper_odd_ear_decomposition(k5);
  expect_valid(k5, d, true);
}

TEST(Ear, C5WithTriangleChord) {
  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}});
  const EarDecomposition d = proper_odd_ear_decomposition(g);
  ASSERT_EQ(d.ears.size(), 1u);
  expect_valid(g, d, true);
}

TEST(Ear, CorpusDecompositions) {
  for (const auto& [name, g] : oracle::corpus()) {
    if (!is_factor_critical(g)) continue;
    SCOPED_TRACE(name);
    const Cycle c = nice_odd_cycle_through_edge(g, 0);
    expect_valid(g, odd_ear_decomposition(g, c), false);
    if (is_2_connected(g)) expect_valid(g, proper_odd_ear_decomposition(g), true);
  }
}

TEST(Ear, BowtieHasNoProperDecomposition) {
  const Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  const EarDecomposition d = odd_ear_decomposition(bowtie, {0, 1, 2});
  ASSERT_EQ(d.ears.size(), 1u);
  EXPECT_FALSE(d.ears[0].is_proper());
  expect_valid(bowtie, d, false);
  EXPECT_THROW(proper_odd_ear_decomposition(bowtie), PreconditionError);
}

TEST(Ear, CheckerReportsBrokenDecompositions) {
  const Graph k5 = complete(5);
  EarDecomposition d = proper_odd_ear_decomposition(k5);
  ASSERT_FALSE(d.ears.empty());
  d.ears.pop_back();
  EXPECT_NE(check_ear_decomposition(k5, whole(k5), d, true), std::nullopt);
  EXPECT_THROW(odd_ear_decomposition(kC5, {0, 1, 2}), PreconditionError);
}
