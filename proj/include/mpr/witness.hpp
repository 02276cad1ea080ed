#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpr/ear.hpp"
#include "mpr/guards.hpp"
#include "mpr/polytope.hpp"

namespace mpr {

// Witness matchings for the ridge between a blossom facet OddSet(U) and the
// degree facet of an anchor node v. For every other inequality of the system
// a matching is built that is tight on both
//   x(E[U]) <= floor(|U|/2)   and   x(delta(v)) <= 1
// and slack on the target. Together these show that no other inequality is
// implied at equality on the intersection of the two facets.

enum class WitnessCase { Case1a, Case1b, Case2, Case3a, Case3b, Case3c, Case4 };

std::string to_string(WitnessCase c);

enum class AnchorKind {
  EarEndpoint,  ///< degree >= 3 in G[U], endpoint of an ear
  OddHole,      ///< G[U] is a chordless odd cycle
};

struct Anchor {
  NodeId node = -1;
  AnchorKind kind = AnchorKind::EarEndpoint;
};

struct WitnessChecks {
  bool valid_matching = false;
  bool tight_on_u = false;
  bool tight_on_v = false;
  bool slack_on_target = false;

  bool all() const { return valid_matching && tight_on_u && tight_on_v && slack_on_target; }
};

struct WitnessResult {
  Inequality target;
  Matching matching;
  WitnessCase case_tag = WitnessCase::Case1a;
  WitnessChecks checks;
  bool fallback = false;  ///< produced by the brute-force scan
  std::string note;       ///< why the constructive path failed, if it did
};

/// Scratch data of the nested-blossom case (U' strictly inside U, G[U'] nice
/// in G[U]).
struct WitnessContext {
  NodeSet u;
  NodeSet u_prime;
  NodeId v = -1;
  WitnessCase case_tag = WitnessCase::Case3c;

  EarDecomposition inner;       ///< odd ear decomposition of G[U']
  std::vector<Ear> extension;   ///< ears continuing it to G[U]
  std::size_t ell = 0;          ///< index in `extension` of the ear joining I and J
  NodeId i = -1, j = -1;        ///< attachment nodes in U'
  NodeId i_prime = -1, j_prime = -1;
  NodeSet component_i;          ///< I, excluding i
  NodeSet component_j;          ///< J, excluding j
  Subgraph g_ell;               ///< G[U'] + ears of I and J + the joining ear
};

/// Anchor for the blossom facet OddSet(U): the smallest node of degree >= 3
/// in G[U] that is an ear endpoint of a proper odd ear decomposition, or the
/// smallest node of U when G[U] is a chordless odd cycle. Throws
/// PreconditionError if G[U] is not factor-critical and 2-connected, or if U
/// is a triangle with a node of degree 2 in g (a rank-0 facet).
Anchor choose_anchor(const Graph& g, NodeSet u);

WitnessContext build_case3c_scaffold(const Graph& g, NodeSet u, NodeSet u_prime);

/// Nice odd cycle of G_ell through (i', j'); its i-j arc through i', j' lies
/// outside U' and has odd length, the other arc lies in U' with even length
/// and at least one interior node.
Cycle case3c_nice_cycle(const Graph& g, const WitnessContext& ctx);

/// The case of the proof that handles `target`.
WitnessCase classify_target(const Graph& g, NodeSet u, const Inequality& target);

/// Re-evaluates the three witness conditions from the raw matching.
WitnessChecks evaluate_witness(const Graph& g, NodeSet u, NodeId v, const Inequality& target, const Matching& m);

/// Constructive witness following the case analysis. Throws InternalError if
/// the construction fails its own checks.
WitnessResult constructive_witness(const Graph& g, NodeSet u, NodeId v, const Inequality& target);

/// Canonically smallest matching meeting the three conditions, found by
/// scanning `matchings` (all matchings of g, canonical order).
WitnessResult brute_force_witness(const Graph& g, NodeSet u, NodeId v, const Inequality& target,
                                  std::span<const Matching> matchings);
WitnessResult brute_force_witness(const Graph& g, NodeSet u, NodeId v, const Inequality& target,
                                  int max_edges = 24);

/// Constructive witness, falling back to the brute-force scan (flagged) when
/// the construction fails.
WitnessResult witness_matching(const Graph& g, NodeSet u, NodeId v, const Inequality& target,
                               std::span<const Matching> matchings);
WitnessResult witness_matching(const Graph& g, NodeSet u, NodeId v, const Inequality& target, int max_edges = 24);

struct WitnessReport {
  NodeSet u;
  Anchor anchor;
  std::vector<WitnessResult> results;
  int fallback_count = 0;
  int ridge_dimension = -1;
  bool ridge = false;  ///< dim(F_U cap F_v) = dim(P) - 2

  bool ok() const;
};

/// Witnesses for every facet other than OddSet(U) and Degree(v), plus an
/// independent ridge check of the pair.
WitnessReport witness_all(const Graph& g, NodeSet u, const Anchor& anchor, const Guards& guards = {});
WitnessReport witness_all(const MatchingPolytope& p, std::span<const Inequality> facets, NodeSet u,
                          const Anchor& anchor);

}  // namespace mpr
