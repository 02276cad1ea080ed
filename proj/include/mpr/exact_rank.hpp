#pragma once

#include <cstdint>
#include <vector>

namespace mpr {

/// Incremental row-echelon basis over the integers.
///
/// Rows are reduced by fraction-free elimination against the current basis
/// and divided by their content (gcd of entries), so every stored row is
/// primitive. All arithmetic is checked; overflow throws std::overflow_error
/// rather than producing a wrong rank.
class IntegerRowBasis {
 public:
  explicit IntegerRowBasis(int columns) : columns_(columns) {}

  /// Adds a row; returns true if it increased the rank.
  bool add(std::vector<std::int64_t> row);
  int rank() const { return static_cast<int>(rows_.size()); }
  int columns() const { return columns_; }

 private:
  int columns_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<int> pivots_;
};

/// Rank of an integer matrix given as rows.
int integer_rank(const std::vector<std::vector<std::int64_t>>& rows, int columns);

}  // namespace mpr
