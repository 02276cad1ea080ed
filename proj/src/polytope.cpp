#include "mpr/polytope.hpp"

#include <algorithm>

#include "mpr/errors.hpp"
#include "mpr/exact_rank.hpp"
#include "mpr/kernels.hpp"

namespace mpr {

std::string to_string(InequalityKind k) {
  switch (k) {
    case InequalityKind::NonNeg: return "NonNeg";
    case InequalityKind::Degree: return "Degree";
    case InequalityKind::OddSet: return "OddSet";
  }
  return "?";
}

Inequality Inequality::non_neg(const Graph& g, EdgeId e) {
  if (e < 0 || e >= g.edge_count()) throw PreconditionError("edge id out of range");
  Inequality q;
  q.kind_ = InequalityKind::NonNeg;
  q.edge_ = e;
  q.support_ = EdgeSet{e};
  q.rhs_ = 0;
  return q;
}

Inequality Inequality::degree(const Graph& g, NodeId v) {
  if (v < 0 || v >= g.node_count()) throw PreconditionError("node id out of range");
  Inequality q;
  q.kind_ = InequalityKind::Degree;
  q.nodes_ = NodeSet{v};
  q.support_ = g.incident(v);
  q.rhs_ = 1;
  return q;
}

Inequality Inequality::odd_set(const Graph& g, NodeSet u) {
  if (!u.is_subset_of(g.all_nodes())) throw PreconditionError("node set outside the graph");
  if (u.size() < 3 || u.size() % 2 == 0) {
    throw PreconditionError("odd-set inequality needs an odd node set of size >= 3, got " + format_nodes(u));
  }
  Inequality q;
  q.kind_ = InequalityKind::OddSet;
  q.nodes_ = u;
  q.support_ = g.induced_edges(u);
  q.rhs_ = u.size() / 2;
  return q;
}

std::vector<int> Inequality::coefficients(const Graph& g) const {
  std::vector<int> c(g.edge_count(), 0);
  for (EdgeId e : support_) c[e] = sign();
  return c;
}

std::vector<int> Inequality::key() const {
  if (kind_ == InequalityKind::NonNeg) return {edge_};
  return nodes_.to_vector();
}

std::string Inequality::to_string() const {
  switch (kind_) {
    case InequalityKind::NonNeg: return "NonNeg(e" + std::to_string(edge_) + ")";
    case InequalityKind::Degree: return "Degree(" + std::to_string(node()) + ")";
    case InequalityKind::OddSet: return "OddSet(" + format_nodes(nodes_) + ")";
  }
  return "?";
}

bool operator<(const Inequality& a, const Inequality& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  switch (a.kind_) {
    case InequalityKind::NonNeg: return a.edge_ < b.edge_;
    case InequalityKind::Degree: return a.node() < b.node();
    case InequalityKind::OddSet: return lex_less(a.nodes_, b.nodes_);
  }
  return false;
}

int affine_dimension(const Graph& g, std::span<const Matching> points) {
  if (points.empty()) return -1;
  const int columns = g.edge_count() + 1;
  IntegerRowBasis basis(columns);
  std::vector<std::int64_t> row(columns);
  for (const Matching& m : points) {
    std::fill(row.begin(), row.end(), 0);
    row[0] = 1;
    for (EdgeId e : m.edges()) row[e + 1] = 1;
    basis.add(row);
    if (basis.rank() == columns) break;
  }
  return basis.rank() - 1;
}

MatchingPolytope::MatchingPolytope(Graph g, int max_edges)
    : graph_(std::move(g)), vertices_(enumerate_matchings(graph_, max_edges)) {
  dimension_ = affine_dimension(graph_, vertices_);
}

bool MatchingPolytope::is_valid(const Inequality& q) const {
  return std::all_of(vertices_.begin(), vertices_.end(), [&](const Matching& m) { return q.satisfied_by(m); });
}

FaceDescriptor MatchingPolytope::face(std::span<const Inequality> tight) const {
  FaceDescriptor out;
  out.tight_set.assign(tight.begin(), tight.end());
  for (const Matching& m : vertices_) {
    if (std::all_of(tight.begin(), tight.end(), [&](const Inequality& q) { return q.tight_at(m); })) {
      out.tight_matchings.push_back(m);
    }
  }
  out.dimension = affine_dimension(graph_, out.tight_matchings);
  return out;
}

int MatchingPolytope::face_dimension(std::span<const Inequality> tight) const { return face(tight).dimension; }

bool MatchingPolytope::is_facet(const Inequality& q) const {
  if (!is_valid(q)) throw InvalidInequalityError(q.to_string() + " is violated by some matching");
  return face_dimension(std::span(&q, 1)) == dimension_ - 1;
}

int MatchingPolytope::pair_dimension(const Inequality& f, const Inequality& h) const {
  const Inequality both[] = {f, h};
  return face_dimension(both);
}

bool MatchingPolytope::is_ridge_pair(const Inequality& f, const Inequality& h) const {
  if (f == h) throw PreconditionError("ridge check needs two distinct facets");
  if (!is_facet(f)) throw PreconditionError(f.to_string() + " is not a facet");
  if (!is_facet(h)) throw PreconditionError(h.to_string() + " is not a facet");
  return pair_dimension(f, h) == dimension_ - 2;
}

bool degree_inequality_listed(const Graph& g, NodeId v) {
  if (g.degree(v) >= 3) return true;
  if (g.degree(v) == 2) {
    const auto nbrs = g.neighbors(v);
    return !g.adjacent(nbrs[0], nbrs[1]);
  }
  return false;
}

namespace {

void check_node_guard(const Graph& g, int max_nodes) {
  if (g.node_count() > max_nodes) {
    throw GuardExceeded("odd-set scan needs at most " + std::to_string(max_nodes) + " nodes, graph has " +
                        std::to_string(g.node_count()));
  }
}

}  // namespace

std::vector<Inequality> enumerate_facets(const Graph& g, int max_nodes) {
  check_node_guard(g, max_nodes);
  std::vector<Inequality> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.push_back(Inequality::non_neg(g, e));
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (degree_inequality_listed(g, v)) out.push_back(Inequality::degree(g, v));
  }
  for (NodeSet u : blossom_node_sets(g, Execution::Parallel)) out.push_back(Inequality::odd_set(g, u));
  return out;
}

std::vector<Inequality> syntactic_inequalities(const Graph& g, int max_nodes) {
  check_node_guard(g, max_nodes);
  std::vector<Inequality> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.push_back(Inequality::non_neg(g, e));
  for (NodeId v = 0; v < g.node_count(); ++v) out.push_back(Inequality::degree(g, v));
  std::vector<NodeSet> odd;
  const std::uint64_t limit = std::uint64_t{1} << g.node_count();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const NodeSet u = NodeSet::from_bits(bits);
    if (u.size() >= 3 && u.size() % 2 == 1) odd.push_back(u);
  }
  std::sort(odd.begin(), odd.end(), [](NodeSet a, NodeSet b) { return lex_less(a, b); });
  for (NodeSet u : odd) out.push_back(Inequality::odd_set(g, u));
  return out;
}

int polytope_dimension(const Graph& g, int max_edges) { return MatchingPolytope(g, max_edges).dimension(); }

FaceDescriptor face_dimension(const Graph& g, std::span<const Inequality> tight, int max_edges) {
  return MatchingPolytope(g, max_edges).face(tight);
}

bool is_facet(const Graph& g, const Inequality& q, int max_edges) { return MatchingPolytope(g, max_edges).is_facet(q); }

bool is_ridge_pair(const Graph& g, const Inequality& f, const Inequality& h, int max_edges) {
  return MatchingPolytope(g, max_edges).is_ridge_pair(f, h);
}

}  // namespace mpr
