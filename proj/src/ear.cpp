#include "mpr/ear.hpp"

#include <algorithm>

#include "mpr/errors.hpp"

namespace mpr {

Subgraph EarDecomposition::prefix(const Graph& g, std::size_t count) const {
  Subgraph s{NodeSet::from_range(initial_cycle), cycle_edges(g, initial_cycle)};
  for (std::size_t k = 0; k < count && k < ears.size(); ++k) {
    s.nodes |= NodeSet::from_range(ears[k].path);
    s.edges |= path_edges(g, ears[k].path);
  }
  return s;
}

Ear grow_odd_ear(const Graph& g, const Subgraph& h, NodeSet prefix_nodes, NodeId anchor, NodeId outside) {
  if (!prefix_nodes.contains(anchor) || prefix_nodes.contains(outside) || !g.adjacent(anchor, outside)) {
    throw PreconditionError("ear must start with an edge leaving the prefix");
  }
  const auto rest = smallest_perfect_matching(g, remove_nodes(g, h, prefix_nodes));
  if (!rest) throw PreconditionError("prefix is not a nice subgraph");
  const Matching avoid_outside = near_pm_excluding(g, h, outside);

  Ear ear{{anchor}};
  for (NodeId x : alternating_path(g, *rest, avoid_outside, outside)) ear.path.push_back(x);
  if (!prefix_nodes.contains(ear.endpoint_b()) || ear.length() % 2 == 0 ||
      ear.interior_set().intersects(prefix_nodes)) {
    throw InternalError("grown ear is not an odd ear of the prefix");
  }
  return ear;
}

std::vector<Ear> extend_ear_decomposition(const Graph& g, const Subgraph& h, const Subgraph& start,
                                          std::optional<EdgeId> first_edge) {
  std::vector<Ear> ears;
  NodeSet nodes = start.nodes;
  EdgeSet used = start.edges;
  while (used != h.edges) {
    std::optional<EdgeId> pick;
    if (first_edge && ears.empty()) {
      pick = first_edge;
    } else {
      for (EdgeId e : h.edges - used) {
        if (nodes.contains(g.edge(e).u) || nodes.contains(g.edge(e).v)) {
          pick = e;
          break;
        }
      }
    }
    if (!pick) throw PreconditionError("graph is not connected");
    const Edge& ed = g.edge(*pick);
    Ear ear;
    if (nodes.contains(ed.u) && nodes.contains(ed.v)) {
      ear.path = {ed.u, ed.v};
    } else {
      const NodeId anchor = nodes.contains(ed.u) ? ed.u : ed.v;
      ear = grow_odd_ear(g, h, nodes, anchor, ed.other(anchor));
    }
    nodes |= NodeSet::from_range(ear.path);
    used |= path_edges(g, ear.path);
    ears.push_back(std::move(ear));
  }
  return ears;
}

EarDecomposition odd_ear_decomposition(const Graph& g, const Subgraph& h, const Cycle& c,
                                       std::optional<EdgeId> first_ear_edge) {
  check_subgraph(g, h);
  if (!is_cycle_of(g, h, c) || c.size() % 2 == 0) throw PreconditionError("start is not an odd cycle of the graph");
  if (!is_connected(g, h) || !is_factor_critical(g, h)) {
    throw PreconditionError("graph is not connected and factor-critical");
  }
  const NodeSet cycle_nodes = NodeSet::from_range(c);
  if (!is_nice_subgraph(g, h, cycle_nodes)) throw PreconditionError("start cycle is not nice");
  if (first_ear_edge) {
    const Edge& ed = g.edge(*first_ear_edge);
    if (!h.edges.contains(*first_ear_edge) || cycle_nodes.contains(ed.u) == cycle_nodes.contains(ed.v)) {
      throw PreconditionError("first ear edge must join the cycle to a node off the cycle");
    }
  }
  const Subgraph start{cycle_nodes, cycle_edges(g, c)};
  return {c, extend_ear_decomposition(g, h, start, first_ear_edge)};
}

EarDecomposition odd_ear_decomposition(const Graph& g, const Cycle& c, std::optional<EdgeId> first_ear_edge) {
  return odd_ear_decomposition(g, whole(g), c, first_ear_edge);
}

namespace {

// Depth-first search for a proper odd ear decomposition. Chords are always
// safe to add, so they are taken eagerly; path ears are tried in order of
// their first edge and then DFS order of the path.
class ProperEarSearch {
 public:
  ProperEarSearch(const Graph& g, const Subgraph& h) : g_(g), h_(h) {}

  bool extend(NodeSet nodes, EdgeSet used, std::vector<Ear>& ears) {
    if (++steps_ > kStepLimit) throw InternalError("proper ear search exceeded its step budget");
    const std::size_t mark = ears.size();
    for (EdgeId e : h_.edges - used) {
      const Edge& ed = g_.edge(e);
      if (nodes.contains(ed.u) && nodes.contains(ed.v)) {
        ears.push_back({{ed.u, ed.v}});
        used.insert(e);
      }
    }
    if (used == h_.edges) return true;

    for (EdgeId e : h_.edges - used) {
      const Edge& ed = g_.edge(e);
      if (nodes.contains(ed.u) == nodes.contains(ed.v)) continue;
      const NodeId anchor = nodes.contains(ed.u) ? ed.u : ed.v;
      std::vector<NodeId> path{anchor, ed.other(anchor)};
      if (grow(nodes, used, path, ears)) return true;
    }
    ears.resize(mark);
    return false;
  }

 private:
  static constexpr long kStepLimit = 2'000'000;

  bool grow(NodeSet nodes, EdgeSet used, std::vector<NodeId>& path, std::vector<Ear>& ears) {
    if (++steps_ > kStepLimit) throw InternalError("proper ear search exceeded its step budget");
    const NodeId tail = path.back();
    for (EdgeId e : g_.incident(tail) & h_.edges) {
      const NodeId y = g_.edge(e).other(tail);
      if (nodes.contains(y)) {
        if (y == path.front() || path.size() % 2 == 0) continue;  // improper, or even length
        Ear ear{path};
        ear.path.push_back(y);
        const NodeSet grown = nodes | ear.interior_set();
        if (!is_nice_subgraph(g_, h_, grown)) continue;
        ears.push_back(ear);
        if (extend(grown, used | path_edges(g_, ear.path), ears)) return true;
        ears.pop_back();
      } else if (std::find(path.begin(), path.end(), y) == path.end()) {
        path.push_back(y);
        if (grow(nodes, used, path, ears)) return true;
        path.pop_back();
      }
    }
    return false;
  }

  const Graph& g_;
  const Subgraph& h_;
  long steps_ = 0;
};

}  // namespace

EarDecomposition proper_odd_ear_decomposition(const Graph& g, const Subgraph& h) {
  check_subgraph(g, h);
  if (!is_factor_critical(g, h) || !is_2_connected(g, h)) {
    throw PreconditionError("graph is not factor-critical and 2-connected");
  }
  std::vector<NodeSet> tried;
  for (EdgeId e : h.edges) {
    Cycle c = nice_odd_cycle_through_edge(g, h, e);
    const NodeSet key = NodeSet::from_range(c);
    if (std::find(tried.begin(), tried.end(), key) != tried.end()) continue;
    tried.push_back(key);
    ProperEarSearch search(g, h);
    std::vector<Ear> ears;
    if (search.extend(key, cycle_edges(g, c), ears)) return {std::move(c), std::move(ears)};
  }
  throw InternalError("no proper odd ear decomposition found");
}

EarDecomposition proper_odd_ear_decomposition(const Graph& g) { return proper_odd_ear_decomposition(g, whole(g)); }

std::optional<std::string> check_ear_decomposition(const Graph& g, const Subgraph& h, const EarDecomposition& d,
                                                   bool require_proper) {
  const Cycle& c = d.initial_cycle;
  if (!is_cycle_of(g, h, c)) return "initial cycle is not a cycle of the graph";
  if (c.size() % 2 == 0) return "initial cycle has even length";

  Subgraph prefix{NodeSet::from_range(c), cycle_edges(g, c)};
  auto check_prefix = [&](std::size_t step) -> std::optional<std::string> {
    const std::string where = "prefix " + std::to_string(step);
    if (!is_nice_subgraph(g, h, prefix.nodes)) return where + " is not nice";
    if (!is_factor_critical(g, prefix)) return where + " is not factor-critical";
    if (require_proper && !is_2_connected(g, prefix)) return where + " is not 2-connected";
    return std::nullopt;
  };
  if (auto err = check_prefix(0)) return err;

  for (std::size_t k = 0; k < d.ears.size(); ++k) {
    const Ear& ear = d.ears[k];
    const std::string where = "ear " + std::to_string(k + 1);
    if (ear.path.size() < 2) return where + " is empty";
    if (ear.length() % 2 == 0) return where + " has even length";
    if (require_proper && !ear.is_proper()) return where + " is not proper";
    if (!ear.is_proper() && ear.length() < 3) return where + " is a loop";
    if (!prefix.nodes.contains(ear.endpoint_a()) || !prefix.nodes.contains(ear.endpoint_b())) {
      return where + " has an endpoint outside the prefix";
    }
    const auto inner = ear.interior();
    if (NodeSet::from_range(inner).size() != static_cast<int>(inner.size())) return where + " repeats a node";
    if (NodeSet::from_range(inner).intersects(prefix.nodes)) return where + " re-enters the prefix";
    EdgeSet edges;
    try {
      edges = path_edges(g, ear.path);
    } catch (const InternalError&) {
      return where + " uses a non-edge";
    }
    if (!edges.is_subset_of(h.edges)) return where + " uses an edge outside the graph";
    if (edges.intersects(prefix.edges)) return where + " reuses an edge";
    prefix.nodes |= NodeSet::from_range(ear.path);
    prefix.edges |= edges;
    if (auto err = check_prefix(k + 1)) return err;
  }
  if (prefix != h) return "ears do not cover the graph";
  return std::nullopt;
}

}  // namespace mpr
