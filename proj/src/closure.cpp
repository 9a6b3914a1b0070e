#include "sudiag/closure.hpp"

#include <algorithm>
#include <deque>

namespace sudiag {

std::vector<int> ShiftMove::values() const {
  std::vector<int> vals;
  for (int v = 1; v <= 32; ++v)
    if (value_mask & (1u << (v - 1))) vals.push_back(v);
  return vals;
}

SparseIntMatrix apply_move(const SparseIntMatrix& m, const ShiftMove& mv) {
  return mv.down ? down_shift(m, mv.line, mv.values())
                 : right_shift(m, mv.line, mv.values());
}

namespace {

// Admissible subsets of one line: every non-empty subset of the suffix of the
// line whose values exceed the next line's max and whose cross-positions clear
// the occupied span of the next line, excluding the full line (source must stay
// non-empty so s + r is preserved).
void line_moves(const SparseIntMatrix& m, bool down, int line, std::vector<ShiftMove>& out) {
  const auto vals = down ? m.row_values(line) : m.column_values(line);
  const auto next = down ? m.row_values(line + 1) : m.column_values(line + 1);
  const int maxnext = next.empty() ? 0 : *std::max_element(next.begin(), next.end());
  auto cross = [&](int v) { return down ? int(m.position(v).col) : int(m.position(v).row); };
  int span = 0;  // furthest occupied cross-position in the next line
  for (int v : next) span = std::max(span, cross(v));
  std::vector<int> movable;
  for (int v : vals)
    if (v > maxnext && cross(v) > span) movable.push_back(v);
  if (movable.empty()) return;
  const int k = static_cast<int>(movable.size());
  const bool whole_line = (k == static_cast<int>(vals.size()));
  for (std::uint32_t subset = 1; subset < (1u << k); ++subset) {
    if (whole_line && subset == (1u << k) - 1) continue;
    ShiftMove mv;
    mv.down = down;
    mv.line = static_cast<std::uint8_t>(line);
    for (int i = 0; i < k; ++i)
      if (subset & (1u << i)) mv.value_mask |= 1u << (movable[static_cast<size_t>(i)] - 1);
    out.push_back(mv);
  }
}

}  // namespace

std::vector<ShiftMove> admissible_moves(const SparseIntMatrix& m, bool rights, bool downs) {
  std::vector<ShiftMove> out;
  if (rights)
    for (int c = 1; c < m.cols(); ++c) line_moves(m, false, c, out);
  if (downs)
    for (int r = 1; r < m.rows(); ++r) line_moves(m, true, r, out);
  return out;
}

DerivedClosure::DerivedClosure(int n, int cap) : n_(n) {
  if (n < 1) throw std::invalid_argument("DerivedClosure: n must be >= 1");
  if (n > cap) throw resource_limit_error("DerivedClosure: n exceeds enumeration cap");

  std::deque<std::uint64_t> frontier;
  auto discover = [&](const SparseIntMatrix& m, std::uint64_t parent, const ShiftMove& mv,
                      bool seed) {
    std::uint64_t key = m.packed_key();
    if (records_.contains(key)) return;
    records_.emplace(key, Record{parent, mv, seed});
    frontier.push_back(key);
  };

  for (const SparseIntMatrix& s : enumerate_step_matrices(n, cap)) discover(s, 0, {}, true);

  // right-shift phase to fixpoint, then down-shift phase seeded from everything
  for (int phase = 0; phase < 2; ++phase) {
    const bool down = (phase == 1);
    if (down) {
      frontier.clear();
      for (const auto& [key, rec] : records_) frontier.push_back(key);
    }
    while (!frontier.empty()) {
      std::uint64_t key = frontier.front();
      frontier.pop_front();
      const SparseIntMatrix mat = SparseIntMatrix::from_packed_key(key, n_);
      for (const ShiftMove& mv : admissible_moves(mat, !down, down))
        discover(apply_move(mat, mv), key, mv, false);
    }
  }

  matrices_.reserve(records_.size());
  for (const auto& [key, rec] : records_)
    matrices_.push_back(SparseIntMatrix::from_packed_key(key, n_));
  std::sort(matrices_.begin(), matrices_.end());
}

bool DerivedClosure::contains(const SparseIntMatrix& m) const {
  if (m.size() != n_) return false;
  return records_.contains(m.packed_key());
}

std::vector<DerivedClosure::PathStep> DerivedClosure::witness_path(
    const SparseIntMatrix& m) const {
  auto it = records_.find(m.packed_key());
  if (it == records_.end()) throw std::invalid_argument("witness_path: matrix not in closure");
  std::vector<PathStep> rev;
  std::uint64_t key = m.packed_key();
  while (true) {
    const Record& rec = records_.at(key);
    if (rec.seed) break;
    rev.push_back(PathStep{SparseIntMatrix::from_packed_key(rec.parent, n_), rec.move});
    key = rec.parent;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::vector<SparseIntMatrix> derived_matrices(int n, int cap) {
  return DerivedClosure(n, cap).matrices();
}

std::vector<DiagonalTermP> complementary_pairings(int n, int cap) {
  std::vector<DiagonalTermP> terms;
  for (const SparseIntMatrix& m : derived_matrices(n, cap))
    terms.push_back(DiagonalTermP{OrderedPartition::columns_of(m),
                                  OrderedPartition::rows_bottom_up(m), 1});
  return terms;
}

std::vector<DiagonalTermP> delta_P_top(int n, int cap) {
  if (n < 0) throw std::invalid_argument("delta_P_top: n must be >= 0");
  if (n == 0) return {DiagonalTermP{OrderedPartition(), OrderedPartition(), 1}};
  return complementary_pairings(n, cap);
}

}  // namespace sudiag
