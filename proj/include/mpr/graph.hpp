#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mpr/index_set.hpp"

namespace mpr {

using NodeId = int;
using EdgeId = int;

struct Edge {
  NodeId u = 0;  ///< always the smaller endpoint
  NodeId v = 0;

  NodeId other(NodeId x) const { return x == u ? v : u; }
  bool has(NodeId x) const { return x == u || x == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on nodes 0..n-1.
///
/// Edges are stored sorted by (min endpoint, max endpoint); an EdgeId is the
/// position in that order and is stable for the lifetime of the graph. Node
/// and edge counts are capped at 64 so that node and edge subsets fit in a
/// machine word.
class Graph {
 public:
  Graph() = default;
  /// Throws GraphError on self-loops, duplicate edges, or out-of-range ids.
  Graph(int node_count, std::span<const std::pair<NodeId, NodeId>> edges);
  Graph(int node_count, std::initializer_list<std::pair<NodeId, NodeId>> edges)
      : Graph(node_count, std::span<const std::pair<NodeId, NodeId>>(edges.begin(), edges.size())) {}

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;
  bool adjacent(NodeId a, NodeId b) const { return neighbor_mask_[a].contains(b); }

  /// Sorted neighbor list.
  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
  NodeSet neighbor_set(NodeId v) const { return neighbor_mask_[v]; }
  int degree(NodeId v) const { return static_cast<int>(adjacency_[v].size()); }

  /// delta(v): edges incident to v.
  EdgeSet incident(NodeId v) const { return incident_[v]; }
  /// E[U]: edges with both endpoints in U.
  EdgeSet induced_edges(NodeSet u) const;
  /// Nodes touched by the given edges.
  NodeSet endpoints(EdgeSet edges) const;

  NodeSet all_nodes() const { return NodeSet::first_n(node_count_); }
  EdgeSet all_edges() const { return EdgeSet::first_n(edge_count()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<NodeSet> neighbor_mask_;
  std::vector<EdgeSet> incident_;
};

/// A subgraph of a host graph addressed with the host's node and edge ids.
/// Every edge in `edges` has both endpoints in `nodes`.
struct Subgraph {
  NodeSet nodes;
  EdgeSet edges;

  friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

inline Subgraph whole(const Graph& g) { return {g.all_nodes(), g.all_edges()}; }
inline Subgraph induced(const Graph& g, NodeSet u) { return {u, g.induced_edges(u)}; }
/// `h` with the nodes in `drop` and their incident edges removed.
Subgraph remove_nodes(const Graph& g, const Subgraph& h, NodeSet drop);
/// Degree of v counting only edges of h.
int degree_in(const Graph& g, const Subgraph& h, NodeId v);
/// Throws PreconditionError unless h is a valid subgraph of g.
void check_subgraph(const Graph& g, const Subgraph& h);

/// Parse the line-oriented graph format:
///   # comment
///   n <node_count>
///   e <u> <v>
/// Throws GraphParseError with a 1-based line number.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Canonical text: header line then one `e u v` line per edge in edge-id order.
std::string format_graph(const Graph& g);

std::string format_nodes(NodeSet s);

}  // namespace mpr
