#pragma once

#include <memory>

#include "sudiag/ainf.hpp"
#include "sudiag/closure.hpp"

namespace sudiag {

enum class SnakeVariant { full, drop_right, drop_down };

const char* to_string(SnakeVariant v);
SnakeVariant snake_variant_from_string(const std::string& s);

// Zigzag family: alternating vertical runs of n-1 and horizontal runs of m-1
// consecutive integers. `full` starts vertical and ends horizontal (k of each);
// `drop_right` drops the last horizontal run; `drop_down` starts horizontal and
// drops the last vertical run.
struct SnakeSpec {
  int n = 4;
  int m = 4;
  int k = 1;
  SnakeVariant variant = SnakeVariant::full;

  // k(n-2)+k(m-2)+2 / k(n-2)+(k-1)(m-2)+2 / (k-1)(n-2)+k(m-2)+2.
  int arity() const;
  void validate() const;  // n >= m > 3; k >= 1 (k = 0 admitted for full: arity 2)
};

SparseIntMatrix snake_matrix(const SnakeSpec& spec);

// The L-shaped step matrix the snake is derived from: first column carries the
// vertical blocks, first row the horizontal blocks, at their final cross
// positions.
SparseIntMatrix snake_step_matrix(const SnakeSpec& spec);

struct SnakeWitness {
  SparseIntMatrix start;         // L-shaped step matrix
  std::vector<ShiftMove> moves;  // right shifts (columns ascending), then down shifts
  SparseIntMatrix result;        // the snake
};

// Replays explicit shifts from the L-shaped step matrix and checks each one is
// admissible (the shift must change the matrix); throws std::logic_error if any
// replay step fails or the result is not the snake.
SnakeWitness verify_snake_derived(const SnakeSpec& spec);

// Argument tuple over H*(C_n x C_m, F_2) on which the snake term evaluates
// non-trivially: leaves directly under a large corolla receive that side's odd
// generator; each binary tower strictly between corollas carries exactly one
// odd entry (the leaf merged last, adjacent to the corolla above it).
std::vector<Element> witness_argument(const SnakeSpec& spec);

enum class WitnessMode { full_diagonal, snake_only };

// Value of the operation on witness_argument(spec): the whole arity-sized
// diagonal, or just the snake's own term.
Element evaluate_witness(const SnakeSpec& spec, WitnessMode mode, int ycap = 6,
                         std::shared_ptr<DeltaKCache> cache = nullptr);

// The snake's own term evaluated on an arbitrary tuple (used by scramble tests).
Element evaluate_snake_term(const SnakeSpec& spec, std::span<const Element> args, int ycap = 6);

}  // namespace sudiag
