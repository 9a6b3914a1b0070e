#pragma once

#include <string>
#include <vector>

#include "sudiag/matrix.hpp"

namespace sudiag {

// Ordered list of disjoint non-empty blocks covering [ground]. ground == 0 with
// no blocks is the degenerate base case used by the top-cell diagonal.
struct OrderedPartition {
  int ground = 0;
  std::vector<std::vector<int>> blocks;  // each block sorted ascending

  OrderedPartition() = default;
  OrderedPartition(int ground_size, std::vector<std::vector<int>> blks);

  int block_count() const { return static_cast<int>(blocks.size()); }
  // Index (1-based) of the block containing v.
  int block_of(int v) const;

  // Column contents left to right.
  static OrderedPartition columns_of(const SparseIntMatrix& m);
  // Row contents numbered bottom-up (block 1 = bottom row).
  static OrderedPartition rows_bottom_up(const SparseIntMatrix& m);

  std::string to_text() const;  // "1,2|3"
  static OrderedPartition parse_text(const std::string& s);

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
  friend auto operator<=>(const OrderedPartition&, const OrderedPartition&) = default;
};

// One term u (x) v of the permutahedral top-cell diagonal.
struct DiagonalTermP {
  OrderedPartition left;   // lambda_A, read off the columns
  OrderedPartition right;  // lambda_B, rows bottom-up
  int coeff = 1;

  friend bool operator==(const DiagonalTermP&, const DiagonalTermP&) = default;
};

// Rebuilds the matrix whose columns are left's blocks and whose rows (bottom-up)
// are right's blocks; value g sits at (r + 1 - right.block_of(g), left.block_of(g)).
SparseIntMatrix matrix_from_pairing(const OrderedPartition& left, const OrderedPartition& right);

}  // namespace sudiag
