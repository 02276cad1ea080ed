#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpr/factor_critical.hpp"

namespace mpr {

/// A path whose two endpoints (but no interior node) lie in the subgraph
/// built so far. When both endpoints coincide the ear is a cycle and is not
/// proper.
struct Ear {
  std::vector<NodeId> path;

  NodeId endpoint_a() const { return path.front(); }
  NodeId endpoint_b() const { return path.back(); }
  bool is_proper() const { return path.front() != path.back(); }
  int length() const { return static_cast<int>(path.size()) - 1; }
  std::vector<NodeId> interior() const { return {path.begin() + 1, path.end() - 1}; }
  NodeSet interior_set() const { return NodeSet::from_range(interior()); }

  friend bool operator==(const Ear&, const Ear&) = default;
};

/// G = C + P1 + ... + Pk.
struct EarDecomposition {
  Cycle initial_cycle;
  std::vector<Ear> ears;

  /// C + P1 + ... + P_count as a subgraph of the host graph.
  Subgraph prefix(const Graph& g, std::size_t count) const;
  Subgraph covered(const Graph& g) const { return prefix(g, ears.size()); }
};

/// One odd ear grown from the edge (anchor, outside) of h, where `anchor` lies
/// in the nice node set `prefix_nodes` and `outside` does not. The ear follows
/// the alternating path of a perfect matching of h - prefix_nodes and a
/// perfect matching of h - outside until it re-enters the prefix.
Ear grow_odd_ear(const Graph& g, const Subgraph& h, NodeSet prefix_nodes, NodeId anchor, NodeId outside);

/// Continue an odd ear decomposition of `start` (a nice factor-critical
/// subgraph of the factor-critical, connected h) until all of h is covered.
/// Each step takes the smallest unused edge touching the prefix; an edge with
/// both ends in the prefix becomes a single-edge ear. `first_edge`, if given,
/// is used for the first ear.
std::vector<Ear> extend_ear_decomposition(const Graph& g, const Subgraph& h, const Subgraph& start,
                                          std::optional<EdgeId> first_edge = std::nullopt);

/// Odd ear decomposition of h starting from the nice odd cycle c. If
/// `first_ear_edge` = (v, k) is given with v on c and k off c, the first ear
/// contains it.
EarDecomposition odd_ear_decomposition(const Graph& g, const Subgraph& h, const Cycle& c,
                                       std::optional<EdgeId> first_ear_edge = std::nullopt);
EarDecomposition odd_ear_decomposition(const Graph& g, const Cycle& c,
                                       std::optional<EdgeId> first_ear_edge = std::nullopt);

/// Proper odd ear decomposition of a factor-critical 2-connected h; every
/// prefix is factor-critical, 2-connected and nice in h.
EarDecomposition proper_odd_ear_decomposition(const Graph& g, const Subgraph& h);
EarDecomposition proper_odd_ear_decomposition(const Graph& g);

/// Re-checks every structural and prefix invariant of `d` against h.
/// Returns a description of the first violation, or nullopt.
std::optional<std::string> check_ear_decomposition(const Graph& g, const Subgraph& h, const EarDecomposition& d,
                                                   bool require_proper);

}  // namespace mpr
