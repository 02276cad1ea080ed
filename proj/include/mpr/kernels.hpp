#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mpr/polytope.hpp"

// Data-parallel scans behind facet enumeration, the facet oracle and the rank
// hierarchy. Each kernel has a serial reference in mpr::serial and an OpenMP
// version in mpr::parallel with identical output; the parallel versions fall
// back to one thread when the library is built without OpenMP.

namespace mpr {

enum class Execution { Serial, Parallel };

namespace serial {

/// Odd node sets U, |U| >= 3, with G[U] factor-critical and 2-connected, in
/// canonical (lexicographic) order.
std::vector<NodeSet> blossom_node_sets(const Graph& g);

/// is_facet for every candidate (all candidates must be valid).
std::vector<char> facet_flags(const MatchingPolytope& p, std::span<const Inequality> candidates);

/// For each candidate, the index of the first partner (in the given order)
/// forming a ridge with it, or -1.
std::vector<int> first_ridge_partner(const MatchingPolytope& p, std::span<const Inequality> candidates,
                                     std::span<const Inequality> partners);

}  // namespace serial

namespace parallel {

std::vector<NodeSet> blossom_node_sets(const Graph& g);
std::vector<char> facet_flags(const MatchingPolytope& p, std::span<const Inequality> candidates);
std::vector<int> first_ridge_partner(const MatchingPolytope& p, std::span<const Inequality> candidates,
                                     std::span<const Inequality> partners);

/// Worker count the parallel kernels will use.
int thread_count();

}  // namespace parallel

inline std::vector<NodeSet> blossom_node_sets(const Graph& g, Execution ex) {
  return ex == Execution::Serial ? serial::blossom_node_sets(g) : parallel::blossom_node_sets(g);
}
inline std::vector<char> facet_flags(const MatchingPolytope& p, std::span<const Inequality> c, Execution ex) {
  return ex == Execution::Serial ? serial::facet_flags(p, c) : parallel::facet_flags(p, c);
}
inline std::vector<int> first_ridge_partner(const MatchingPolytope& p, std::span<const Inequality> c,
                                            std::span<const Inequality> partners, Execution ex) {
  return ex == Execution::Serial ? serial::first_ridge_partner(p, c, partners)
                                 : parallel::first_ridge_partner(p, c, partners);
}

}  // namespace mpr
