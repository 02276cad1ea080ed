#include "mpr/matching.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "mpr/errors.hpp"

namespace mpr {

std::vector<int> Matching::incidence(const Graph& g) const {
  std::vector<int> x(g.edge_count(), 0);
  for (EdgeId e : edges_) x[e] = 1;
  return x;
}

bool is_matching(const Graph& g, EdgeSet edges) {
  NodeSet seen;
  for (EdgeId e : edges) {
    if (e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if (seen.contains(ed.u) || seen.contains(ed.v)) return false;
    seen.insert(ed.u);
    seen.insert(ed.v);
  }
  return true;
}

NodeSet covered_nodes(const Graph& g, const Matching& m) { return g.endpoints(m.edges()); }

Matching maximum_matching(const Graph& g, const Subgraph& h) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  using Vertex = boost::graph_traits<BoostGraph>::vertex_descriptor;

  const std::vector<NodeId> nodes = h.nodes.to_vector();
  std::vector<int> local(g.node_count(), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) local[nodes[k]] = static_cast<int>(k);

  BoostGraph bg(nodes.size());
  for (EdgeId e : h.edges) boost::add_edge(local[g.edge(e).u], local[g.edge(e).v], bg);

  std::vector<Vertex> mate(nodes.size());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);

  EdgeSet out;
  const Vertex none = boost::graph_traits<BoostGraph>::null_vertex();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (mate[k] == none || mate[k] < k) continue;
    out.insert(*g.find_edge(nodes[k], nodes[mate[k]]));
  }
  return Matching(out);
}

Matching maximum_matching(const Graph& g) { return maximum_matching(g, whole(g)); }

bool has_perfect_matching(const Graph& g, const Subgraph& h) {
  if (h.nodes.size() % 2 != 0) return false;
  return 2 * maximum_matching(g, h).size() == h.nodes.size();
}

bool has_perfect_matching(const Graph& g) { return has_perfect_matching(g, whole(g)); }

std::optional<Matching> smallest_perfect_matching(const Graph& g, const Subgraph& h) {
  if (!has_perfect_matching(g, h)) return std::nullopt;
  Subgraph rest = h;
  EdgeSet chosen;
  for (EdgeId e : h.edges) {
    if (rest.nodes.empty()) break;
    const Edge& ed = g.edge(e);
    if (!rest.nodes.contains(ed.u) || !rest.nodes.contains(ed.v)) continue;
    const Subgraph next = remove_nodes(g, rest, NodeSet{ed.u, ed.v});
    if (has_perfect_matching(g, next)) {
      chosen.insert(e);
      rest = next;
    }
  }
  if (!rest.nodes.empty()) throw InternalError("greedy perfect matching extraction failed");
  return Matching(chosen);
}

Matching near_pm_excluding(const Graph& g, const Subgraph& h, NodeId v) {
  if (!h.nodes.contains(v)) throw PreconditionError("node " + std::to_string(v) + " is not in the graph");
  auto m = smallest_perfect_matching(g, remove_nodes(g, h, NodeSet{v}));
  if (!m) {
    throw PreconditionError("graph is not factor-critical: no perfect matching after deleting node " +
                            std::to_string(v));
  }
  return *m;
}

Matching near_pm_excluding(const Graph& g, NodeId v) { return near_pm_excluding(g, whole(g), v); }

namespace {

void enumerate_from(const Graph& g, const std::vector<EdgeId>& edges, std::size_t start, EdgeSet current,
                    NodeSet covered, std::vector<Matching>& out) {
  out.emplace_back(current);
  for (std::size_t k = start; k < edges.size(); ++k) {
    const Edge& ed = g.edge(edges[k]);
    if (covered.contains(ed.u) || covered.contains(ed.v)) continue;
    enumerate_from(g, edges, k + 1, current.with(edges[k]), covered.with(ed.u).with(ed.v), out);
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(const Graph& g, const Subgraph& h, int max_edges) {
  if (h.edges.size() > max_edges) {
    throw GuardExceeded("matching enumeration needs at most " + std::to_string(max_edges) +
                        " edges, graph has " + std::to_string(h.edges.size()));
  }
  std::vector<Matching> out;
  enumerate_from(g, h.edges.to_vector(), 0, {}, {}, out);
  return out;
}

std::vector<Matching> enumerate_matchings(const Graph& g, int max_edges) {
  return enumerate_matchings(g, whole(g), max_edges);
}

Matching path_pm(const Graph& g, const std::vector<NodeId>& path) {
  if (path.size() % 2 != 0) throw InternalError("path with odd node count has no perfect matching");
  EdgeSet out;
  for (std::size_t k = 0; k + 1 < path.size(); k += 2) {
    const auto e = g.find_edge(path[k], path[k + 1]);
    if (!e) throw InternalError("path uses a non-edge");
    out.insert(*e);
  }
  return Matching(out);
}

Matching cycle_near_pm(const Graph& g, const std::vector<NodeId>& cycle, NodeId removed) {
  const auto it = std::find(cycle.begin(), cycle.end(), removed);
  if (it == cycle.end()) throw InternalError("removed node is not on the cycle");
  std::vector<NodeId> path(it + 1, cycle.end());
  path.insert(path.end(), cycle.begin(), it);
  return path_pm(g, path);
}

}  // namespace mpr
