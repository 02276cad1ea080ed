#pragma once

#include <vector>

#include "mpr/graph.hpp"
#include "mpr/matching.hpp"

namespace mpr {

/// Node sequence of a cycle; consecutive nodes (and last/first) are adjacent.
using Cycle = std::vector<NodeId>;

bool is_connected(const Graph& g, const Subgraph& h);

/// Odd order and h - v has a perfect matching for every node v.
bool is_factor_critical(const Graph& g, const Subgraph& h);
bool is_factor_critical(const Graph& g);

/// Connected with no cut node. Throws PreconditionError below 3 nodes.
bool is_2_connected(const Graph& g, const Subgraph& h);
bool is_2_connected(const Graph& g);

/// h minus the nodes of `u` has a perfect matching (true when nothing remains).
/// Throws PreconditionError unless u is a subset of h's nodes.
bool is_nice_subgraph(const Graph& g, const Subgraph& h, NodeSet u);
bool is_nice_subgraph(const Graph& g, NodeSet u);

/// Exactly |U| edges and every node of degree 2, i.e. an odd hole when |U| is odd.
bool is_chordless_cycle(const Graph& g, const Subgraph& h);

/// Odd cycle through edge e = (i, j) of a factor-critical h whose node set
/// is nice in h. Built by closing the alternating i-j path of
/// near_pm_excluding(i) and near_pm_excluding(j) with e. The returned cycle
/// starts at i and ends at j.
Cycle nice_odd_cycle_through_edge(const Graph& g, const Subgraph& h, EdgeId e);
Cycle nice_odd_cycle_through_edge(const Graph& g, EdgeId e);

/// The alternating path in m1 xor m2 that starts at `from`, a node covered by
/// exactly one of the two matchings.
std::vector<NodeId> alternating_path(const Graph& g, const Matching& m1, const Matching& m2, NodeId from);

/// Edges of a cycle given by its node sequence. Throws InternalError on a non-edge.
EdgeSet cycle_edges(const Graph& g, const Cycle& c);
EdgeSet path_edges(const Graph& g, const std::vector<NodeId>& path);

/// True iff `c` is a simple cycle of h (distinct nodes, >= 3, all edges in h).
bool is_cycle_of(const Graph& g, const Subgraph& h, const Cycle& c);

}  // namespace mpr
