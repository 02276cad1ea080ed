#include "mpr/exact_rank.hpp"

#include <numeric>
#include <stdexcept>

namespace mpr {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer elimination overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer elimination overflow");
  return r;
}

void make_primitive(std::vector<std::int64_t>& row) {
  std::int64_t g = 0;
  for (std::int64_t x : row) g = std::gcd(g, x);
  if (g > 1) {
    for (std::int64_t& x : row) x /= g;
  }
}

}  // namespace

bool IntegerRowBasis::add(std::vector<std::int64_t> row) {
  if (static_cast<int>(row.size()) != columns_) throw std::invalid_argument("row length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const int p = pivots_[k];
    if (row[p] == 0) continue;
    const std::int64_t a = rows_[k][p];
    const std::int64_t b = row[p];
    // row <- a*row - b*basis_k, which clears column p
    for (int c = 0; c < columns_; ++c) row[c] = checked_sub(checked_mul(a, row[c]), checked_mul(b, rows_[k][c]));
    make_primitive(row);
  }
  for (int c = 0; c < columns_; ++c) {
    if (row[c] != 0) {
      // Clear the new pivot column from the existing rows so later
      // reductions never reintroduce it.
      for (auto& other : rows_) {
        if (other[c] == 0) continue;
        const std::int64_t a = row[c];
        const std::int64_t b = other[c];
        for (int j = 0; j < columns_; ++j) other[j] = checked_sub(checked_mul(a, other[j]), checked_mul(b, row[j]));
        make_primitive(other);
      }
      rows_.push_back(std::move(row));
      pivots_.push_back(c);
      return true;
    }
  }
  return false;
}

int integer_rank(const std::vector<std::vector<std::int64_t>>& rows, int columns) {
  IntegerRowBasis basis(columns);
  for (const auto& r : rows) {
    basis.add(r);
    if (basis.rank() == columns) break;
  }
  return basis.rank();
}

}  // namespace mpr
