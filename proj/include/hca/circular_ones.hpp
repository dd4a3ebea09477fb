#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hca {

/// Dense 0/1 matrix, row-major.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool at(int r, int c) const { return bits_[static_cast<std::size_t>(r) * cols_ + c] != 0; }
  void set(int r, int c, bool value) {
    bits_[static_cast<std::size_t>(r) * cols_ + c] = value ? 1 : 0;
  }

  /// Rows holding a 1 in column c, ascending.
  std::vector<int> column(int c) const;

  bool operator==(const BinaryMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// order[i] is the row placed at position i.
using RowOrder = std::vector<int>;

/// Whether every column's 1-rows are consecutive (linear) or circularly
/// consecutive under `order`. The order must be a permutation of the rows.
bool is_consecutive_under(const BinaryMatrix& m, const RowOrder& order);
bool is_circular_under(const BinaryMatrix& m, const RowOrder& order);

/// Exact consecutive-ones test for columns by recursive decomposition into
/// overlap components; nullopt iff no row order works.
std::optional<RowOrder> consecutive_ones_row_order(const BinaryMatrix& m);

/// Circular-ones for columns via Tucker's reduction: complement every
/// column with a 1 in row 0, then test consecutive ones.
std::optional<RowOrder> circular_ones_row_order(const BinaryMatrix& m);

/// All-permutations references, for small matrices (rows <= 10).
std::optional<RowOrder> consecutive_ones_brute_force(const BinaryMatrix& m);
std::optional<RowOrder> circular_ones_brute_force(const BinaryMatrix& m);

/// Same as consecutive_ones_row_order on an explicit set system over
/// elements 0..n-1.
std::optional<std::vector<int>> consecutive_arrangement(int n,
                                                        const std::vector<std::vector<int>>& sets);

}  // namespace hca
