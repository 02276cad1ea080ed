#include <algorithm>
#include <cstdint>

#ifdef MPR_USE_OPENMP
#include <omp.h>
#endif

#include "mpr/factor_critical.hpp"
#include "mpr/kernels.hpp"

namespace mpr::parallel {

int thread_count() {
#ifdef MPR_USE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<NodeSet> blossom_node_sets(const Graph& g) {
  const std::int64_t limit = std::int64_t{1} << g.node_count();
  std::vector<char> hit(static_cast<std::size_t>(limit), 0);

#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t bits = 0; bits < limit; ++bits) {
    const NodeSet u = NodeSet::from_bits(static_cast<std::uint64_t>(bits));
    if (u.size() < 3 || u.size() % 2 == 0) continue;
    const Subgraph h = induced(g, u);
    hit[bits] = is_factor_critical(g, h) && is_2_connected(g, h);
  }

  std::vector<NodeSet> out;
  for (std::int64_t bits = 0; bits < limit; ++bits) {
    if (hit[bits]) out.push_back(NodeSet::from_bits(static_cast<std::uint64_t>(bits)));
  }
  std::sort(out.begin(), out.end(), [](NodeSet a, NodeSet b) { return lex_less(a, b); });
  return out;
}

std::vector<char> facet_flags(const MatchingPolytope& p, std::span<const Inequality> candidates) {
  const auto n = static_cast<std::int64_t>(candidates.size());
  std::vector<char> out(candidates.size(), 0);
  std::vector<char> invalid(candidates.size(), 0);

  // Exceptions may not escape an OpenMP region: record and rethrow serially.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < n; ++k) {
    if (!p.is_valid(candidates[k])) {
      invalid[k] = 1;
      continue;
    }
    out[k] = p.is_facet(candidates[k]) ? 1 : 0;
  }
  for (std::int64_t k = 0; k < n; ++k) {
    if (invalid[k]) (void)p.is_facet(candidates[k]);  // throws InvalidInequalityError
  }
  return out;
}

std::vector<int> first_ridge_partner(const MatchingPolytope& p, std::span<const Inequality> candidates,
                                     std::span<const Inequality> partners) {
  const auto n = static_cast<std::int64_t>(candidates.size());
  std::vector<int> out(candidates.size(), -1);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < partners.size(); ++j) {
      if (partners[j] == candidates[k]) continue;
      if (p.pair_dimension(candidates[k], partners[j]) == p.dimension() - 2) {
        out[k] = static_cast<int>(j);
        break;
      }
    }
  }
  return out;
}

}  // namespace mpr::parallel
