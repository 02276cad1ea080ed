#pragma once

#include <span>
#include <string>
#include <vector>

#include "mpr/graph.hpp"
#include "mpr/matching.hpp"

namespace mpr {

enum class InequalityKind { NonNeg, Degree, OddSet };

std::string to_string(InequalityKind k);

/// One member of the matching system, always in "<=" form:
///   NonNeg(e):  -x_e          <= 0
///   Degree(v):  x(delta(v))   <= 1
///   OddSet(U):  x(E[U])       <= floor(|U|/2)
class Inequality {
 public:
  static Inequality non_neg(const Graph& g, EdgeId e);
  static Inequality degree(const Graph& g, NodeId v);
  /// Throws PreconditionError unless |U| is odd and at least 3.
  static Inequality odd_set(const Graph& g, NodeSet u);

  InequalityKind kind() const { return kind_; }
  EdgeId edge() const { return edge_; }
  NodeId node() const { return nodes_.front(); }
  NodeSet nodes() const { return nodes_; }
  int rhs() const { return rhs_; }
  /// Edges carrying a nonzero coefficient.
  EdgeSet support() const { return support_; }
  int sign() const { return kind_ == InequalityKind::NonNeg ? -1 : 1; }

  /// Dense coefficient row over the edge index.
  std::vector<int> coefficients(const Graph& g) const;
  int lhs(const Matching& m) const { return sign() * (m.edges() & support_).size(); }
  bool satisfied_by(const Matching& m) const { return lhs(m) <= rhs_; }
  bool tight_at(const Matching& m) const { return lhs(m) == rhs_; }

  /// Sorted identifying ids: the edge for NonNeg, the node for Degree, the
  /// node list for OddSet.
  std::vector<int> key() const;
  std::string to_string() const;

  friend bool operator==(const Inequality& a, const Inequality& b) {
    return a.kind_ == b.kind_ && a.edge_ == b.edge_ && a.nodes_ == b.nodes_;
  }
  /// Canonical order: NonNeg by edge, then Degree by node, then OddSet by
  /// sorted node list.
  friend bool operator<(const Inequality& a, const Inequality& b);

  Inequality() = default;

 private:
  InequalityKind kind_ = InequalityKind::NonNeg;
  EdgeId edge_ = -1;
  NodeSet nodes_;
  EdgeSet support_;
  int rhs_ = 0;
};

/// A face of the matching polytope given by the inequalities held at equality.
struct FaceDescriptor {
  std::vector<Inequality> tight_set;
  int dimension = -1;  ///< -1 for the empty face
  std::vector<Matching> tight_matchings;
};

/// Affine dimension of a set of 0/1 points (-1 if empty), computed exactly.
int affine_dimension(const Graph& g, std::span<const Matching> points);

/// The matching polytope of a graph, represented by its vertex list (every
/// matching). All face computations work on vertices: a face's dimension is
/// the affine dimension of the matchings tight on it.
class MatchingPolytope {
 public:
  explicit MatchingPolytope(Graph g, int max_edges = 24);

  const Graph& graph() const { return graph_; }
  const std::vector<Matching>& vertices() const { return vertices_; }
  int dimension() const { return dimension_; }

  bool is_valid(const Inequality& q) const;
  FaceDescriptor face(std::span<const Inequality> tight) const;
  int face_dimension(std::span<const Inequality> tight) const;
  /// Throws InvalidInequalityError if some matching violates q.
  bool is_facet(const Inequality& q) const;
  /// dim(F_f cap F_h); no facet checks.
  int pair_dimension(const Inequality& f, const Inequality& h) const;
  /// Throws PreconditionError unless f and h are distinct facets.
  bool is_ridge_pair(const Inequality& f, const Inequality& h) const;

 private:
  Graph graph_;
  std::vector<Matching> vertices_;
  int dimension_ = -1;
};

/// x(delta(v)) <= 1 is listed as a facet when deg(v) >= 3, or deg(v) = 2 and
/// the two neighbours are not adjacent.
bool degree_inequality_listed(const Graph& g, NodeId v);

/// The facet list: NonNeg for every edge, Degree per degree_inequality_listed,
/// OddSet(U) for every odd U (|U| >= 3) with G[U] factor-critical and
/// 2-connected. Canonically sorted. Throws GuardExceeded above max_nodes.
std::vector<Inequality> enumerate_facets(const Graph& g, int max_nodes = 16);

/// Every inequality of the three syntactic families: NonNeg for all edges,
/// Degree for all nodes, OddSet for all odd node sets of size >= 3.
std::vector<Inequality> syntactic_inequalities(const Graph& g, int max_nodes = 16);

int polytope_dimension(const Graph& g, int max_edges = 24);
FaceDescriptor face_dimension(const Graph& g, std::span<const Inequality> tight, int max_edges = 24);
bool is_facet(const Graph& g, const Inequality& q, int max_edges = 24);
bool is_ridge_pair(const Graph& g, const Inequality& f, const Inequality& h, int max_edges = 24);

}  // namespace mpr
