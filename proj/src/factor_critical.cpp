#include "mpr/factor_critical.hpp"

#include "mpr/errors.hpp"

namespace mpr {

bool is_connected(const Graph& g, const Subgraph& h) {
  if (h.nodes.empty()) return true;
  NodeSet seen{h.nodes.front()};
  NodeSet frontier = seen;
  while (!frontier.empty()) {
    NodeSet next;
    for (NodeId v : frontier) {
      for (EdgeId e : g.incident(v) & h.edges) next.insert(g.edge(e).other(v));
    }
    frontier = next - seen;
    seen |= frontier;
  }
  return seen == h.nodes;
}

bool is_factor_critical(const Graph& g, const Subgraph& h) {
  if (h.nodes.size() % 2 == 0) return false;
  for (NodeId v : h.nodes) {
    if (!has_perfect_matching(g, remove_nodes(g, h, NodeSet{v}))) return false;
  }
  return true;
}

bool is_factor_critical(const Graph& g) { return is_factor_critical(g, whole(g)); }

bool is_2_connected(const Graph& g, const Subgraph& h) {
  if (h.nodes.size() < 3) throw PreconditionError("2-connectivity needs at least 3 nodes");
  if (!is_connected(g, h)) return false;
  for (NodeId v : h.nodes) {
    if (!is_connected(g, remove_nodes(g, h, NodeSet{v}))) return false;
  }
  return true;
}

bool is_2_connected(const Graph& g) { return is_2_connected(g, whole(g)); }

bool is_nice_subgraph(const Graph& g, const Subgraph& h, NodeSet u) {
  if (!u.is_subset_of(h.nodes)) throw PreconditionError("node set is not contained in the graph");
  return has_perfect_matching(g, remove_nodes(g, h, u));
}

bool is_nice_subgraph(const Graph& g, NodeSet u) { return is_nice_subgraph(g, whole(g), u); }

bool is_chordless_cycle(const Graph& g, const Subgraph& h) {
  if (h.nodes.size() < 3 || h.edges.size() != h.nodes.size()) return false;
  for (NodeId v : h.nodes) {
    if (degree_in(g, h, v) != 2) return false;
  }
  return is_connected(g, h);
}

std::vector<NodeId> alternating_path(const Graph& g, const Matching& m1, const Matching& m2, NodeId from) {
  const EdgeSet sym = m1.edges() ^ m2.edges();
  std::vector<NodeId> path{from};
  EdgeSet used;
  NodeId cur = from;
  for (;;) {
    const EdgeSet next = (g.incident(cur) & sym) - used;
    if (next.empty()) break;
    if (next.size() > 1) throw InternalError("alternating path branches");
    const EdgeId e = next.front();
    used.insert(e);
    cur = g.edge(e).other(cur);
    path.push_back(cur);
  }
  return path;
}

Cycle nice_odd_cycle_through_edge(const Graph& g, const Subgraph& h, EdgeId e) {
  if (!h.edges.contains(e)) throw PreconditionError("edge is not in the graph");
  if (!is_factor_critical(g, h)) throw PreconditionError("graph is not factor-critical");
  const auto [i, j] = g.edge(e);
  const Matching mi = near_pm_excluding(g, h, i);
  const Matching mj = near_pm_excluding(g, h, j);
  Cycle c = alternating_path(g, mi, mj, i);
  if (c.back() != j || c.size() % 2 == 0) throw InternalError("alternating path does not end at j");
  return c;
}

Cycle nice_odd_cycle_through_edge(const Graph& g, EdgeId e) { return nice_odd_cycle_through_edge(g, whole(g), e); }

EdgeSet path_edges(const Graph& g, const std::vector<NodeId>& path) {
  EdgeSet out;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const auto e = g.find_edge(path[k], path[k + 1]);
    if (!e) throw InternalError("path uses a non-edge");
    out.insert(*e);
  }
  return out;
}

EdgeSet cycle_edges(const Graph& g, const Cycle& c) {
  EdgeSet out = path_edges(g, c);
  if (c.size() >= 3) {
    const auto e = g.find_edge(c.back(), c.front());
    if (!e) throw InternalError("cycle does not close");
    out.insert(*e);
  }
  return out;
}

bool is_cycle_of(const Graph& g, const Subgraph& h, const Cycle& c) {
  if (c.size() < 3) return false;
  if (NodeSet::from_range(c).size() != static_cast<int>(c.size())) return false;
  if (!NodeSet::from_range(c).is_subset_of(h.nodes)) return false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto e = g.find_edge(c[k], c[(k + 1) % c.size()]);
    if (!e || !h.edges.contains(*e)) return false;
  }
  return true;
}

}  // namespace mpr
