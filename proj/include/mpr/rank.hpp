#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpr/guards.hpp"
#include "mpr/kernels.hpp"
#include "mpr/polytope.hpp"

namespace mpr {

enum class F0Mode { Lemma, Exhaustive };

std::string to_string(F0Mode m);

/// NonNeg for every edge, every listed Degree facet, and OddSet(U) for every
/// triangle U that contains a node of degree 2 in g.
std::vector<Inequality> lemma_minimal_formulation(const Graph& g, const Guards& guards = {});

/// Integer points of a system of matching inequalities.
class IntegerPointScan {
 public:
  IntegerPointScan(const Graph& g, std::span<const Inequality> system, long max_points = 5'000'000);

  /// Every variable has a finite lower and upper bound implied by the system.
  bool bounded() const { return !unbounded_edge_; }
  /// An integer point of the system that is not a matching incidence vector,
  /// if one exists. Works for unbounded systems too.
  std::optional<std::vector<int>> non_matching_point() const;

 private:
  const Graph& g_;
  std::vector<Inequality> system_;
  long max_points_;
  std::optional<EdgeId> unbounded_edge_;
  bool unbounded_below_ = false;
};

struct MinimalityCheck {
  bool bounded = false;
  bool generates = false;                         ///< integer points are exactly the matchings
  std::optional<std::vector<int>> stray_point;    ///< non-matching integer point when generation fails
  std::vector<bool> member_required;              ///< dropping member k admits a non-matching point
  bool minimal() const;
};

MinimalityCheck check_minimal_formulation(const Graph& g, std::span<const Inequality> fmin,
                                          const Guards& guards = {});
bool is_minimal_formulation(const Graph& g, std::span<const Inequality> fmin, const Guards& guards = {});

/// Lemma mode returns the lemma set; exhaustive mode returns every facet that
/// lies in some minimal formulation (subset scan, capped by
/// guards.max_facets_exhaustive).
std::vector<Inequality> rank_zero_facets(const Graph& g, F0Mode mode, const Guards& guards = {});

struct RidgeCertificate {
  Inequality facet;
  Inequality partner;
  int ridge_dimension = 0;
};

struct RankReport {
  F0Mode f0_mode = F0Mode::Lemma;
  int polytope_dimension = 0;
  std::vector<Inequality> facets;         ///< canonical order
  std::vector<int> ranks;                 ///< parallel to facets; -1 if never reached
  std::vector<Inequality> rank_zero_set;
  std::vector<RidgeCertificate> certificates;
  int rho = 0;
  bool complete = false;                  ///< every facet received a rank
  std::vector<std::string> violations;    ///< failed rank-at-most-one assertions

  int rank_of(const Inequality& q) const;
};

/// Rank hierarchy grown from f0 by ridge adjacency. A facet receives rank
/// r + 1 when it forms a ridge with some facet of rank <= r; its certificate
/// records the canonically smallest such partner.
RankReport rank_hierarchy(const Graph& g, std::span<const Inequality> f0, const Guards& guards = {},
                          Execution ex = Execution::Parallel);
RankReport rank_hierarchy(const MatchingPolytope& p, std::span<const Inequality> facets,
                          std::span<const Inequality> f0, Execution ex = Execution::Parallel);

/// Hierarchy from the lemma set, with every rank-1 blossom facet certified by
/// the degree facet of its anchor node. Assertion failures are listed in
/// `violations`.
RankReport verify_rank_at_most_one(const Graph& g, const Guards& guards = {}, Execution ex = Execution::Parallel);

}  // namespace mpr
