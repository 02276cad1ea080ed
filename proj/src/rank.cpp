#include "mpr/rank.hpp"

#include <algorithm>

#include "mpr/errors.hpp"
#include "mpr/witness.hpp"

namespace mpr {

std::string to_string(F0Mode m) { return m == F0Mode::Lemma ? "lemma" : "exhaustive"; }

std::vector<Inequality> lemma_minimal_formulation(const Graph& g, const Guards& guards) {
  if (g.node_count() > guards.max_nodes) {
    throw GuardExceeded("graph has " + std::to_string(g.node_count()) + " nodes, limit is " +
                        std::to_string(guards.max_nodes));
  }
  std::vector<Inequality> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.push_back(Inequality::non_neg(g, e));
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (degree_inequality_listed(g, v)) out.push_back(Inequality::degree(g, v));
  }
  std::vector<NodeSet> triangles;
  for (const Edge& e : g.edges()) {
    for (NodeId w : g.neighbor_set(e.u) & g.neighbor_set(e.v)) {
      const NodeSet tri{e.u, e.v, w};
      if (w < e.v) continue;  // count each triangle once, from its two smallest nodes
      if (g.degree(e.u) == 2 || g.degree(e.v) == 2 || g.degree(w) == 2) triangles.push_back(tri);
    }
  }
  std::sort(triangles.begin(), triangles.end(), [](NodeSet a, NodeSet b) { return lex_less(a, b); });
  for (NodeSet t : triangles) out.push_back(Inequality::odd_set(g, t));
  return out;
}

IntegerPointScan::IntegerPointScan(const Graph& g, std::span<const Inequality> system, long max_points)
    : g_(g), system_(system.begin(), system.end()), max_points_(max_points) {
  EdgeSet lower, upper;
  for (const Inequality& q : system_) {
    if (q.kind() == InequalityKind::NonNeg) {
      lower.insert(q.edge());
    } else {
      upper |= q.support();
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!lower.contains(e)) {
      unbounded_edge_ = e;
      unbounded_below_ = true;
      return;
    }
    if (!upper.contains(e)) {
      unbounded_edge_ = e;
      return;
    }
  }
}

std::optional<std::vector<int>> IntegerPointScan::non_matching_point() const {
  const int m = g_.edge_count();
  if (unbounded_edge_) {
    // All upper-bounding rows have nonnegative coefficients, so moving one
    // unbounded coordinate away from a matching stays feasible.
    std::vector<int> x(m, 0);
    x[*unbounded_edge_] = unbounded_below_ ? -1 : 2;
    return x;
  }

  std::vector<const Inequality*> rows;
  for (const Inequality& q : system_) {
    if (q.kind() != InequalityKind::NonNeg) rows.push_back(&q);
  }
  std::vector<std::vector<int>> rows_of_edge(m);
  std::vector<int> upper(m, 0);
  for (EdgeId e = 0; e < m; ++e) {
    int ub = -1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r]->support().contains(e)) continue;
      rows_of_edge[e].push_back(static_cast<int>(r));
      ub = ub < 0 ? rows[r]->rhs() : std::min(ub, rows[r]->rhs());
    }
    upper[e] = ub;
  }

  std::vector<int> x(m, 0);
  std::vector<int> slack(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) slack[r] = rows[r]->rhs();
  long visited = 0;

  // Depth-first over edges in id order. Any feasible partial assignment
  // extends by zeros to a feasible point, so the search stops as soon as the
  // assigned prefix stops being a matching.
  auto search = [&](auto&& self, EdgeId e, NodeSet covered) -> bool {
    if (e == m) return false;
    for (int value = 0; value <= upper[e]; ++value) {
      bool fits = true;
      for (int r : rows_of_edge[e]) fits = fits && slack[r] >= value;
      if (!fits) break;
      if (++visited > max_points_) {
        throw GuardExceeded("integer point scan exceeded " + std::to_string(max_points_) + " points");
      }
      for (int r : rows_of_edge[e]) slack[r] -= value;
      x[e] = value;
      const Edge& ed = g_.edge(e);
      const bool clash = value >= 2 || (value == 1 && (covered.contains(ed.u) || covered.contains(ed.v)));
      if (clash) return true;
      const NodeSet next = value == 1 ? covered.with(ed.u).with(ed.v) : covered;
      if (self(self, e + 1, next)) return true;
      for (int r : rows_of_edge[e]) slack[r] += value;
      x[e] = 0;
    }
    return false;
  };
  if (search(search, 0, NodeSet{})) return x;
  return std::nullopt;
}

bool MinimalityCheck::minimal() const {
  return generates && std::all_of(member_required.begin(), member_required.end(), [](bool b) { return b; });
}

MinimalityCheck check_minimal_formulation(const Graph& g, std::span<const Inequality> fmin, const Guards& guards) {
  MinimalityCheck out;
  const IntegerPointScan full(g, fmin, guards.max_integer_points);
  out.bounded = full.bounded();
  out.stray_point = full.non_matching_point();
  out.generates = out.bounded && !out.stray_point;
  std::vector<Inequality> rest;
  for (std::size_t k = 0; k < fmin.size(); ++k) {
    rest.assign(fmin.begin(), fmin.end());
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    out.member_required.push_back(IntegerPointScan(g, rest, guards.max_integer_points).non_matching_point().has_value());
  }
  return out;
}

bool is_minimal_formulation(const Graph& g, std::span<const Inequality> fmin, const Guards& guards) {
  // Condition (i) first; (ii) is only meaningful once (i) holds.
  const IntegerPointScan full(g, fmin, guards.max_integer_points);
  if (!full.bounded() || full.non_matching_point()) return false;
  return check_minimal_formulation(g, fmin, guards).minimal();
}

std::vector<Inequality> rank_zero_facets(const Graph& g, F0Mode mode, const Guards& guards) {
  if (mode == F0Mode::Lemma) return lemma_minimal_formulation(g, guards);

  const auto facets = enumerate_facets(g, guards.max_nodes);
  if (static_cast<int>(facets.size()) > guards.max_facets_exhaustive) {
    throw GuardExceeded("exhaustive rank-0 scan allows " + std::to_string(guards.max_facets_exhaustive) +
                        " facets, graph has " + std::to_string(facets.size()));
  }
  const std::uint64_t limit = std::uint64_t{1} << facets.size();
  std::vector<bool> member(facets.size(), false);
  std::vector<Inequality> subset;
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    subset.clear();
    for (std::size_t k = 0; k < facets.size(); ++k) {
      if ((bits >> k) & 1u) subset.push_back(facets[k]);
    }
    if (!IntegerPointScan(g, subset, guards.max_integer_points).bounded()) continue;
    if (!is_minimal_formulation(g, subset, guards)) continue;
    for (std::size_t k = 0; k < facets.size(); ++k) {
      if ((bits >> k) & 1u) member[k] = true;
    }
  }
  std::vector<Inequality> out;
  for (std::size_t k = 0; k < facets.size(); ++k) {
    if (member[k]) out.push_back(facets[k]);
  }
  return out;
}

int RankReport::rank_of(const Inequality& q) const {
  const auto it = std::find(facets.begin(), facets.end(), q);
  if (it == facets.end()) return -1;
  return ranks[static_cast<std::size_t>(it - facets.begin())];
}

RankReport rank_hierarchy(const MatchingPolytope& p, std::span<const Inequality> facets,
                          std::span<const Inequality> f0, Execution ex) {
  if (f0.empty()) throw PreconditionError("rank-0 set is empty");
  RankReport report;
  report.polytope_dimension = p.dimension();
  report.facets.assign(facets.begin(), facets.end());
  std::sort(report.facets.begin(), report.facets.end());
  report.ranks.assign(report.facets.size(), -1);
  for (const Inequality& q : f0) {
    const auto it = std::find(report.facets.begin(), report.facets.end(), q);
    if (it == report.facets.end()) throw PreconditionError(q.to_string() + " is not a facet");
    report.ranks[static_cast<std::size_t>(it - report.facets.begin())] = 0;
  }
  for (std::size_t k = 0; k < report.facets.size(); ++k) {
    if (report.ranks[k] == 0) report.rank_zero_set.push_back(report.facets[k]);
  }

  for (int r = 0;; ++r) {
    std::vector<Inequality> partners, candidates;
    std::vector<std::size_t> candidate_index;
    for (std::size_t k = 0; k < report.facets.size(); ++k) {
      if (report.ranks[k] >= 0) {
        partners.push_back(report.facets[k]);
      } else {
        candidates.push_back(report.facets[k]);
        candidate_index.push_back(k);
      }
    }
    if (candidates.empty()) break;
    const auto partner = first_ridge_partner(p, candidates, partners, ex);
    bool progress = false;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (partner[c] < 0) continue;
      report.ranks[candidate_index[c]] = r + 1;
      report.certificates.push_back({candidates[c], partners[partner[c]], p.dimension() - 2});
      progress = true;
    }
    if (!progress) break;
  }
  std::sort(report.certificates.begin(), report.certificates.end(),
            [](const RidgeCertificate& a, const RidgeCertificate& b) { return a.facet < b.facet; });
  report.complete = std::none_of(report.ranks.begin(), report.ranks.end(), [](int r) { return r < 0; });
  report.rho = report.ranks.empty() ? 0 : *std::max_element(report.ranks.begin(), report.ranks.end());
  return report;
}

RankReport rank_hierarchy(const Graph& g, std::span<const Inequality> f0, const Guards& guards, Execution ex) {
  const MatchingPolytope p(g, guards.max_edges);
  const auto facets = enumerate_facets(g, guards.max_nodes);
  return rank_hierarchy(p, facets, f0, ex);
}

RankReport verify_rank_at_most_one(const Graph& g, const Guards& guards, Execution ex) {
  const MatchingPolytope p(g, guards.max_edges);
  const auto facets = enumerate_facets(g, guards.max_nodes);
  const auto f0 = lemma_minimal_formulation(g, guards);
  RankReport report = rank_hierarchy(p, facets, f0, ex);
  report.f0_mode = F0Mode::Lemma;

  if (!report.complete) report.violations.push_back("hierarchy does not reach every facet from the lemma set");
  if (report.rho > 1) report.violations.push_back("rho = " + std::to_string(report.rho) + " exceeds 1");

  for (RidgeCertificate& cert : report.certificates) {
    if (cert.facet.kind() != InequalityKind::OddSet) continue;
    if (report.rank_of(cert.facet) != 1) continue;
    try {
      const Anchor anchor = choose_anchor(g, cert.facet.nodes());
      const Inequality degree = Inequality::degree(g, anchor.node);
      if (report.rank_of(degree) != 0) {
        report.violations.push_back(cert.facet.to_string() + ": anchor " + degree.to_string() + " is not rank 0");
        continue;
      }
      const int dim = p.pair_dimension(cert.facet, degree);
      if (dim != p.dimension() - 2) {
        report.violations.push_back(cert.facet.to_string() + " and " + degree.to_string() + " meet in dimension " +
                                    std::to_string(dim));
        continue;
      }
      cert.partner = degree;
      cert.ridge_dimension = dim;
    } catch (const PreconditionError& e) {
      report.violations.push_back(cert.facet.to_string() + ": " + e.what());
    }
  }
  return report;
}

}  // namespace mpr
