#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sudiag/fp.hpp"

namespace sudiag {

// Default cap on the ground-set size for global enumerations (overridable; the
// CLI also reads SUDIAG_ENUM_CAP).
inline constexpr int kDefaultEnumCap = 8;

struct CellPos {
  std::uint8_t row = 0, col = 0;  // 1-based
  friend bool operator==(CellPos a, CellPos b) { return a.row == b.row && a.col == b.col; }
};

// r x s grid holding each value of [N] exactly once; every row and column
// non-empty (tight shape). Immutable after construction.
class SparseIntMatrix {
 public:
  // entries: (row, col, value) triples.
  SparseIntMatrix(int rows, int cols, const std::vector<std::tuple<int, int, int>>& entries);
  static SparseIntMatrix from_positions(int rows, int cols, std::vector<CellPos> value_positions);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return static_cast<int>(pos_.size()); }  // N

  CellPos position(int value) const { return pos_[static_cast<size_t>(value - 1)]; }
  int value_at(int row, int col) const;  // 0 when the cell is empty
  std::vector<int> column_values(int col) const;  // sorted top -> bottom
  std::vector<int> row_values(int row) const;     // sorted left -> right
  // Values strictly increase along every row and column (holds for all step and
  // derived matrices, not required by the type itself).
  bool is_monotone() const;

  SparseIntMatrix transposed() const;

  // Rows on lines, entries space-separated, empty cells rendered as 0.
  std::string to_text() const;
  static SparseIntMatrix parse_text(const std::string& text);

  // Row-major (row, col, value) triples; doubles as the canonical form.
  std::vector<std::tuple<int, int, int>> triples() const;

  // Per-value packed position bytes; usable as a hash/sort key whenever N <= 8
  // and the grid fits 8x8 (always true for enumeration-capped ground sets).
  std::uint64_t packed_key() const;
  static SparseIntMatrix from_packed_key(std::uint64_t key, int n);

  friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.pos_ == b.pos_;
  }
  friend std::strong_ordering operator<=>(const SparseIntMatrix& a, const SparseIntMatrix& b);

 private:
  SparseIntMatrix() = default;
  void validate() const;

  std::uint8_t rows_ = 0, cols_ = 0;
  std::vector<CellPos> pos_;  // pos_[v-1] = cell of value v
};

// The four step-matrix conditions: each integer once (type invariant), entries
// adjacent in every row and column, strictly increasing rightwards and
// downwards, and exactly one entry on each diagonal col - row of the grid.
bool is_step_matrix(const SparseIntMatrix& m);

// Step matrix labeled by reading w along the staircase path determined by its
// descent set (up-step at position t iff w[t] > w[t+1]).
SparseIntMatrix step_matrix_from_permutation(const std::vector<int>& w);

// All step matrices with entries [n], every shape, in lexicographic order of
// the generating permutation. Exactly n! matrices.
std::vector<SparseIntMatrix> enumerate_step_matrices(int n, int cap = kDefaultEnumCap);

// R_{M}: moves each listed value of column `col` one column right when both
// admissibility conditions hold, otherwise returns the input unchanged. A move
// from the last column lands in a fresh column; empty lines are trimmed.
SparseIntMatrix right_shift(const SparseIntMatrix& m, int col, const std::vector<int>& values);
// Transpose dual of right_shift.
SparseIntMatrix down_shift(const SparseIntMatrix& m, int row, const std::vector<int>& values);

}  // namespace sudiag
