#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sudiag/partition.hpp"

namespace sudiag {

// One recorded shift. `value_mask` bit v-1 set when value v moved.
struct ShiftMove {
  bool down = false;
  std::uint8_t line = 0;
  std::uint32_t value_mask = 0;

  std::vector<int> values() const;
};

// All matrices derivable from a step matrix by right shifts followed by down
// shifts (each phase iterated to fixpoint), with one witness move path per
// matrix. Only shape-preserving moves are explored: the target line exists and
// the source line keeps at least one entry, so s + r stays fixed at n + 1.
class DerivedClosure {
 public:
  explicit DerivedClosure(int n, int cap = kDefaultEnumCap);

  int ground() const { return n_; }
  // Sorted by canonical form.
  const std::vector<SparseIntMatrix>& matrices() const { return matrices_; }
  bool contains(const SparseIntMatrix& m) const;

  struct PathStep {
    SparseIntMatrix before;
    ShiftMove move;
  };
  // Move sequence from a step matrix to m (empty when m is itself a step matrix).
  std::vector<PathStep> witness_path(const SparseIntMatrix& m) const;

 private:
  struct Record {
    std::uint64_t parent = 0;
    ShiftMove move;
    bool seed = false;
  };
  int n_;
  std::unordered_map<std::uint64_t, Record> records_;
  std::vector<SparseIntMatrix> matrices_;
};

std::vector<SparseIntMatrix> derived_matrices(int n, int cap = kDefaultEnumCap);

// One diagonal term per derived matrix, coefficient 1.
std::vector<DiagonalTermP> complementary_pairings(int n, int cap = kDefaultEnumCap);

// Top-cell diagonal on ground set [n]; n == 0 gives the single term pairing two
// empty partitions (e0 (x) e0).
std::vector<DiagonalTermP> delta_P_top(int n, int cap = kDefaultEnumCap);

// Enumerates the admissible shape-preserving moves out of m (used by the
// closures and by the unrestricted oracle).
std::vector<ShiftMove> admissible_moves(const SparseIntMatrix& m, bool rights, bool downs);

// Applies a recorded move through the public shift operations.
SparseIntMatrix apply_move(const SparseIntMatrix& m, const ShiftMove& mv);

}  // namespace sudiag
