#pragma once

#include <optional>
#include <vector>

#include "mpr/graph.hpp"

namespace mpr {

/// A set of pairwise node-disjoint edges. The edge set doubles as the 0/1
/// incidence vector over the host graph's edge index.
class Matching {
 public:
  Matching() = default;
  explicit Matching(EdgeSet edges) : edges_(edges) {}

  EdgeSet edges() const { return edges_; }
  int size() const { return edges_.size(); }
  bool contains(EdgeId e) const { return edges_.contains(e); }
  /// Incidence vector of length g.edge_count().
  std::vector<int> incidence(const Graph& g) const;

  Matching with(EdgeId e) const { return Matching(edges_.with(e)); }
  Matching operator|(const Matching& o) const { return Matching(edges_ | o.edges_); }

  friend bool operator==(const Matching&, const Matching&) = default;
  /// Canonical order: lexicographic on sorted edge-id lists.
  friend bool operator<(const Matching& a, const Matching& b) { return lex_less(a.edges_, b.edges_); }

 private:
  EdgeSet edges_;
};

/// True iff `edges` is a matching of g (no two edges share a node).
bool is_matching(const Graph& g, EdgeSet edges);
/// Nodes covered by the matching.
NodeSet covered_nodes(const Graph& g, const Matching& m);

/// Maximum-cardinality matching of h (Edmonds' blossom algorithm).
Matching maximum_matching(const Graph& g, const Subgraph& h);
Matching maximum_matching(const Graph& g);

bool has_perfect_matching(const Graph& g, const Subgraph& h);
bool has_perfect_matching(const Graph& g);

/// The perfect matching of h whose sorted edge list is lexicographically
/// smallest, or nullopt if h has none.
std::optional<Matching> smallest_perfect_matching(const Graph& g, const Subgraph& h);

/// Lexicographically smallest perfect matching of h - v.
/// Throws PreconditionError if h is not factor-critical.
Matching near_pm_excluding(const Graph& g, const Subgraph& h, NodeId v);
Matching near_pm_excluding(const Graph& g, NodeId v);

/// All matchings of h, empty matching included, in canonical order.
/// Throws GuardExceeded if h has more than `max_edges` edges.
std::vector<Matching> enumerate_matchings(const Graph& g, const Subgraph& h, int max_edges = 24);
std::vector<Matching> enumerate_matchings(const Graph& g, int max_edges = 24);

/// The unique perfect matching of the path obtained from an odd cycle by
/// deleting `removed`. `cycle` lists the cycle's nodes in order.
Matching cycle_near_pm(const Graph& g, const std::vector<NodeId>& cycle, NodeId removed);
/// Perfect matching of a path given as a node sequence of even length.
Matching path_pm(const Graph& g, const std::vector<NodeId>& path);

}  // namespace mpr
