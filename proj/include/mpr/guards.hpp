#pragma once

namespace mpr {

/// Size limits for the exponential scans. Exceeding one raises GuardExceeded.
struct Guards {
  int max_nodes = 16;              ///< odd-set subset scan
  int max_edges = 24;              ///< matching enumeration
  int max_facets_exhaustive = 12;  ///< subset scan for exhaustive rank-0 sets
  long max_integer_points = 5'000'000;
};

}  // namespace mpr
