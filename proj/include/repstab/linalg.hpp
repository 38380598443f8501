#pragma once

#include <map>
#include <utility>
#include <vector>

#include "repstab/rational.hpp"

namespace repstab {

/// Sparse vector as (index, value) pairs sorted by index, no zeros.
using SparseVector = std::vector<std::pair<int, Rational>>;

/// Sparse matrix stored by rows.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVector> row_entries;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), row_entries(r) {}

  Rational at(int r, int c) const;
  /// this · other.
  SparseMatrix multiply(const SparseMatrix& other) const;
  bool is_zero() const;
};

/// Reduced row echelon form over ℚ. For each pivot column the reduced row has
/// a 1 there and nonzero entries only in free columns.
class RowReduction {
 public:
  explicit RowReduction(const SparseMatrix& m);

  int rank() const { return static_cast<int>(pivots_.size()); }
  int cols() const { return cols_; }
  const std::vector<int>& free_columns() const { return free_; }
  bool is_pivot(int col) const { return pivots_.count(col) != 0; }

  /// Entry of the kernel basis vector attached to free column `f` at
  /// coordinate `col`: 1 on f itself, 0 on other free columns, and minus the
  /// reduced-row entry on pivot columns.
  Rational kernel_entry(int f, int col) const;

 private:
  int cols_;
  std::map<int, SparseVector> pivots_;
  std::vector<int> free_;
};

/// Determinant of a small dense matrix by fraction Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace repstab
