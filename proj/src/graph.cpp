#include "mpr/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mpr/errors.hpp"

namespace mpr {

Graph::Graph(int node_count, std::span<const std::pair<NodeId, NodeId>> edges)
    : node_count_(node_count) {
  if (node_count < 0) throw GraphError("negative node count");
  if (node_count > kMaxIndex) {
    throw GraphError("graph has " + std::to_string(node_count) + " nodes; at most " +
                     std::to_string(kMaxIndex) + " are supported");
  }
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= node_count || b >= node_count) {
      throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") references a node outside 0.." + std::to_string(node_count - 1));
    }
    if (a == b) throw GraphError("self-loop at node " + std::to_string(a));
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
  }
  if (edge_count() > kMaxIndex) {
    throw GraphError("graph has " + std::to_string(edge_count()) + " edges; at most " +
                     std::to_string(kMaxIndex) + " are supported");
  }

  adjacency_.assign(node_count, {});
  neighbor_mask_.assign(node_count, {});
  incident_.assign(node_count, {});
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const auto [u, v] = edges_[e];
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    neighbor_mask_[u].insert(v);
    neighbor_mask_[v].insert(u);
    incident_[u].insert(e);
    incident_[v].insert(e);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

std::optional<EdgeId> Graph::find_edge(NodeId a, NodeId b) const {
  if (a < 0 || b < 0 || a >= node_count_ || b >= node_count_ || a == b) return std::nullopt;
  const EdgeSet common = incident_[a] & incident_[b];
  if (common.empty()) return std::nullopt;
  return common.front();
}

EdgeSet Graph::induced_edges(NodeSet u) const {
  EdgeSet out;
  for (NodeId v : u) out |= incident_[v];
  for (EdgeId e : out) {
    if (!u.contains(edges_[e].u) || !u.contains(edges_[e].v)) out.erase(e);
  }
  return out;
}

NodeSet Graph::endpoints(EdgeSet edges) const {
  NodeSet out;
  for (EdgeId e : edges) {
    out.insert(edges_[e].u);
    out.insert(edges_[e].v);
  }
  return out;
}

Subgraph remove_nodes(const Graph& g, const Subgraph& h, NodeSet drop) {
  Subgraph out{h.nodes - drop, h.edges};
  for (NodeId v : drop & h.nodes) out.edges -= g.incident(v);
  return out;
}

int degree_in(const Graph& g, const Subgraph& h, NodeId v) {
  return (g.incident(v) & h.edges).size();
}

void check_subgraph(const Graph& g, const Subgraph& h) {
  if (!h.nodes.is_subset_of(g.all_nodes())) throw PreconditionError("subgraph node outside graph");
  if (!h.edges.is_subset_of(g.all_edges())) throw PreconditionError("subgraph edge outside graph");
  if (!g.endpoints(h.edges).is_subset_of(h.nodes)) {
    throw PreconditionError("subgraph edge has an endpoint outside the subgraph");
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view tok, int line, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
    throw GraphParseError(line, std::string("expected a non-negative integer ") + what + ", got '" +
                                    std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<int> n;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<int> edge_lines;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto tokens = split_ws(line);
    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw GraphParseError(line_no, "expected header 'n <node_count>'");
      }
      n = parse_int(tokens[1], line_no, "node count");
      if (*n > kMaxIndex) {
        throw GraphParseError(line_no, "node count " + std::to_string(*n) + " exceeds " +
                                           std::to_string(kMaxIndex));
      }
      continue;
    }
    if (tokens.size() != 3 || tokens[0] != "e") {
      throw GraphParseError(line_no, "expected edge line 'e <u> <v>'");
    }
    const int u = parse_int(tokens[1], line_no, "node id");
    const int v = parse_int(tokens[2], line_no, "node id");
    if (u >= *n || v >= *n) {
      throw GraphParseError(line_no, "node id out of range 0.." + std::to_string(*n - 1));
    }
    if (u == v) throw GraphParseError(line_no, "self-loop at node " + std::to_string(u));
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (std::minmax(edges[k].first, edges[k].second) == std::minmax(u, v)) {
        throw GraphParseError(line_no, "duplicate edge (first given on line " +
                                           std::to_string(edge_lines[k]) + ")");
      }
    }
    edges.emplace_back(u, v);
    edge_lines.push_back(line_no);
  }
  if (!n) throw GraphParseError(0, "missing header 'n <node_count>'");
  try {
    return Graph(*n, edges);
  } catch (const GraphError& e) {
    throw GraphParseError(0, e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.node_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

std::string format_nodes(NodeSet s) {
  std::string out = "{";
  bool first = true;
  for (NodeId v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace mpr
