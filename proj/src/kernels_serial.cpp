#include <algorithm>

#include "mpr/factor_critical.hpp"
#include "mpr/kernels.hpp"

namespace mpr::serial {

std::vector<NodeSet> blossom_node_sets(const Graph& g) {
  std::vector<NodeSet> out;
  const std::uint64_t limit = std::uint64_t{1} << g.node_count();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const NodeSet u = NodeSet::from_bits(bits);
    if (u.size() < 3 || u.size() % 2 == 0) continue;
    const Subgraph h = induced(g, u);
    if (is_factor_critical(g, h) && is_2_connected(g, h)) out.push_back(u);
  }
  std::sort(out.begin(), out.end(), [](NodeSet a, NodeSet b) { return lex_less(a, b); });
  return out;
}

std::vector<char> facet_flags(const MatchingPolytope& p, std::span<const Inequality> candidates) {
  std::vector<char> out(candidates.size(), 0);
  for (std::size_t k = 0; k < candidates.size(); ++k) out[k] = p.is_facet(candidates[k]) ? 1 : 0;
  return out;
}

std::vector<int> first_ridge_partner(const MatchingPolytope& p, std::span<const Inequality> candidates,
                                     std::span<const Inequality> partners) {
  std::vector<int> out(candidates.size(), -1);
  for (std::size_t k = 0; k < candidates.size(); ++k) {
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

}  // namespace mpr::serial
