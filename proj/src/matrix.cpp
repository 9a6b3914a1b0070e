#include "sudiag/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sudiag {

SparseIntMatrix::SparseIntMatrix(int rows, int cols,
                                 const std::vector<std::tuple<int, int, int>>& entries) {
  rows_ = static_cast<std::uint8_t>(rows);
  cols_ = static_cast<std::uint8_t>(cols);
  pos_.assign(entries.size(), CellPos{});
  std::vector<bool> seen(entries.size(), false);
  for (const auto& [r, c, v] : entries) {
    if (v < 1 || v > static_cast<int>(entries.size()))
      throw std::invalid_argument("SparseIntMatrix: value out of range");
    if (seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("SparseIntMatrix: duplicate value");
    seen[static_cast<size_t>(v - 1)] = true;
    pos_[static_cast<size_t>(v - 1)] =
        CellPos{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(c)};
  }
  validate();
}

SparseIntMatrix SparseIntMatrix::from_positions(int rows, int cols,
                                                std::vector<CellPos> value_positions) {
  SparseIntMatrix m;
  m.rows_ = static_cast<std::uint8_t>(rows);
  m.cols_ = static_cast<std::uint8_t>(cols);
  m.pos_ = std::move(value_positions);
  m.validate();
  return m;
}

void SparseIntMatrix::validate() const {
  if (rows_ < 1 || cols_ < 1) throw std::invalid_argument("SparseIntMatrix: empty shape");
  std::vector<bool> row_used(rows_, false), col_used(cols_, false), cell(size_t(rows_) * cols_, false);
  for (const CellPos& p : pos_) {
    if (p.row < 1 || p.row > rows_ || p.col < 1 || p.col > cols_)
      throw std::invalid_argument("SparseIntMatrix: position out of bounds");
    size_t idx = size_t(p.row - 1) * cols_ + (p.col - 1);
    if (cell[idx]) throw std::invalid_argument("SparseIntMatrix: two values share a cell");
    cell[idx] = true;
    row_used[p.row - 1] = true;
    col_used[p.col - 1] = true;
  }
  for (bool u : row_used)
    if (!u) throw std::invalid_argument("SparseIntMatrix: empty row (shape not tight)");
  for (bool u : col_used)
    if (!u) throw std::invalid_argument("SparseIntMatrix: empty column (shape not tight)");
}

int SparseIntMatrix::value_at(int row, int col) const {
  for (size_t v = 0; v < pos_.size(); ++v)
    if (pos_[v].row == row && pos_[v].col == col) return static_cast<int>(v + 1);
  return 0;
}

std::vector<int> SparseIntMatrix::column_values(int col) const {
  std::vector<int> vals;
  for (size_t v = 0; v < pos_.size(); ++v)
    if (pos_[v].col == col) vals.push_back(static_cast<int>(v + 1));
  std::sort(vals.begin(), vals.end(),
            [&](int a, int b) { return position(a).row < position(b).row; });
  return vals;
}

std::vector<int> SparseIntMatrix::row_values(int row) const {
  std::vector<int> vals;
  for (size_t v = 0; v < pos_.size(); ++v)
    if (pos_[v].row == row) vals.push_back(static_cast<int>(v + 1));
  std::sort(vals.begin(), vals.end(),
            [&](int a, int b) { return position(a).col < position(b).col; });
  return vals;
}

bool SparseIntMatrix::is_monotone() const {
  for (int c = 1; c <= cols_; ++c) {
    auto col = column_values(c);  // sorted by row
    for (size_t i = 1; i < col.size(); ++i)
      if (col[i - 1] >= col[i]) return false;
  }
  for (int r = 1; r <= rows_; ++r) {
    auto row = row_values(r);
    for (size_t i = 1; i < row.size(); ++i)
      if (row[i - 1] >= row[i]) return false;
  }
  return true;
}

SparseIntMatrix SparseIntMatrix::transposed() const {
  std::vector<CellPos> t(pos_.size());
  for (size_t v = 0; v < pos_.size(); ++v) t[v] = CellPos{pos_[v].col, pos_[v].row};
  return from_positions(cols_, rows_, std::move(t));
}

std::string SparseIntMatrix::to_text() const {
  std::vector<std::vector<int>> grid(rows_, std::vector<int>(cols_, 0));
  for (size_t v = 0; v < pos_.size(); ++v)
    grid[pos_[v].row - 1][pos_[v].col - 1] = static_cast<int>(v + 1);
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << grid[r][c];
    }
    os << '\n';
  }
  return os.str();
}

SparseIntMatrix SparseIntMatrix::parse_text(const std::string& text) {
  std::vector<std::tuple<int, int, int>> entries;
  std::istringstream is(text);
  std::string line;
  int r = 0, cols = 0;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++r;
    std::istringstream ls(line);
    int v, c = 0;
    while (ls >> v) {
      ++c;
      if (v != 0) entries.emplace_back(r, c, v);
    }
    if (cols == 0) cols = c;
    if (c != cols) throw std::invalid_argument("matrix text: ragged rows");
  }
  if (r == 0) throw std::invalid_argument("matrix text: empty");
  return SparseIntMatrix(r, cols, entries);
}

std::vector<std::tuple<int, int, int>> SparseIntMatrix::triples() const {
  std::vector<std::tuple<int, int, int>> t;
  t.reserve(pos_.size());
  for (size_t v = 0; v < pos_.size(); ++v)
    t.emplace_back(pos_[v].row, pos_[v].col, static_cast<int>(v + 1));
  std::sort(t.begin(), t.end());
  return t;
}

std::uint64_t SparseIntMatrix::packed_key() const {
  if (pos_.size() > 8 || rows_ > 8 || cols_ > 8)
    throw std::invalid_argument("packed_key: matrix too large");
  std::uint64_t key = 0;
  for (size_t v = 0; v < pos_.size(); ++v) {
    std::uint64_t byte = (std::uint64_t(pos_[v].row - 1) << 4) | std::uint64_t(pos_[v].col - 1);
    key |= byte << (8 * v);
  }
  return key;
}

SparseIntMatrix SparseIntMatrix::from_packed_key(std::uint64_t key, int n) {
  std::vector<CellPos> pos(static_cast<size_t>(n));
  int rows = 0, cols = 0;
  for (int v = 0; v < n; ++v) {
    std::uint8_t byte = static_cast<std::uint8_t>(key >> (8 * v));
    pos[static_cast<size_t>(v)] =
        CellPos{static_cast<std::uint8_t>((byte >> 4) + 1), static_cast<std::uint8_t>((byte & 0xF) + 1)};
    rows = std::max(rows, int(pos[static_cast<size_t>(v)].row));
    cols = std::max(cols, int(pos[static_cast<size_t>(v)].col));
  }
  return from_positions(rows, cols, std::move(pos));
}

std::strong_ordering operator<=>(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (auto c = a.pos_.size() <=> b.pos_.size(); c != 0) return c;
  for (size_t v = 0; v < a.pos_.size(); ++v) {
    if (auto c = a.pos_[v].row <=> b.pos_[v].row; c != 0) return c;
    if (auto c = a.pos_[v].col <=> b.pos_[v].col; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool is_step_matrix(const SparseIntMatrix& m) {
  // one entry per diagonal col - row of the full grid
  std::vector<int> diag(size_t(m.rows() + m.cols() - 1), 0);
  for (int v = 1; v <= m.size(); ++v) {
    CellPos p = m.position(v);
    ++diag[size_t(p.col - p.row + m.rows() - 1)];
  }
  for (int d : diag)
    if (d != 1) return false;
  // adjacency and monotonicity per line
  for (int c = 1; c <= m.cols(); ++c) {
    auto col = m.column_values(c);
    for (size_t i = 1; i < col.size(); ++i) {
      if (m.position(col[i]).row != m.position(col[i - 1]).row + 1) return false;
      if (col[i - 1] >= col[i]) return false;
    }
  }
  for (int r = 1; r <= m.rows(); ++r) {
    auto row = m.row_values(r);
    for (size_t i = 1; i < row.size(); ++i) {
      if (m.position(row[i]).col != m.position(row[i - 1]).col + 1) return false;
      if (row[i - 1] >= row[i]) return false;
    }
  }
  return true;
}

SparseIntMatrix step_matrix_from_permutation(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  if (n < 1) throw std::invalid_argument("step_matrix_from_permutation: empty");
  int descents = 0;
  for (int i = 0; i + 1 < n; ++i)
    if (w[i] > w[i + 1]) ++descents;
  const int r = 1 + descents, s = n - descents;
  // walk the staircase from (r, 1) to (1, s): ascent = step right, descent = step up
  std::vector<CellPos> pos(static_cast<size_t>(n));
  int row = r, col = 1;
  pos[static_cast<size_t>(w[0] - 1)] =
      CellPos{static_cast<std::uint8_t>(row), static_cast<std::uint8_t>(col)};
  for (int i = 1; i < n; ++i) {
    if (w[i - 1] < w[i])
      ++col;
    else
      --row;
    pos[static_cast<size_t>(w[i] - 1)] =
        CellPos{static_cast<std::uint8_t>(row), static_cast<std::uint8_t>(col)};
  }
  return SparseIntMatrix::from_positions(r, s, std::move(pos));
}

std::vector<SparseIntMatrix> enumerate_step_matrices(int n, int cap) {
  if (n < 1) throw std::invalid_argument("enumerate_step_matrices: n must be >= 1");
  if (n > cap) throw resource_limit_error("enumerate_step_matrices: n exceeds enumeration cap");
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<SparseIntMatrix> out;
  do {
    out.push_back(step_matrix_from_permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

namespace {

// Shared shift engine; `transpose_mode` runs the row/down dual through the same code.
SparseIntMatrix shift_impl(const SparseIntMatrix& m, int line, std::vector<int> values,
                           bool down) {
  const SparseIntMatrix work = down ? m.transposed() : m;
  const int s = work.cols();
  if (line < 1 || line > s) throw std::invalid_argument("shift: line index out of range");
  if (values.empty()) throw std::invalid_argument("shift: empty subset");
  auto col = work.column_values(line);
  for (int v : values)
    if (std::find(col.begin(), col.end(), v) == col.end())
      throw std::invalid_argument("shift: subset member not in the selected line");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  const int minv = values.front();
  if (line < s) {
    auto next = work.column_values(line + 1);
    const int maxnext = next.empty() ? 0 : *std::max_element(next.begin(), next.end());
    if (minv <= maxnext) return m;  // condition 1 fails
    const int min_row = work.position(minv).row;
    for (int v : next)
      if (work.position(v).row >= min_row) return m;  // condition 2 fails
    // every target cell must be free (implied by condition 2 on monotone input)
    for (int v : values)
      if (work.value_at(work.position(v).row, line + 1) != 0) return m;
  }
  // admissible: move every member one column right
  std::vector<CellPos> pos(static_cast<size_t>(work.size()));
  for (int v = 1; v <= work.size(); ++v) pos[static_cast<size_t>(v - 1)] = work.position(v);
  for (int v : values) ++pos[static_cast<size_t>(v - 1)].col;
  int cols = s;
  if (line == s) ++cols;
  // trim empty columns (only the source can empty)
  std::vector<int> col_count(static_cast<size_t>(cols + 1), 0);
  for (const CellPos& p : pos) ++col_count[p.col];
  std::vector<std::uint8_t> remap(static_cast<size_t>(cols + 1), 0);
  int next_col = 0;
  for (int c = 1; c <= cols; ++c)
    if (col_count[c] > 0) remap[static_cast<size_t>(c)] = static_cast<std::uint8_t>(++next_col);
  for (CellPos& p : pos) p.col = remap[p.col];
  SparseIntMatrix result = SparseIntMatrix::from_positions(work.rows(), next_col, std::move(pos));
  return down ? result.transposed() : result;
}

}  // namespace

SparseIntMatrix right_shift(const SparseIntMatrix& m, int col, const std::vector<int>& values) {
  return shift_impl(m, col, values, false);
}

SparseIntMatrix down_shift(const SparseIntMatrix& m, int row, const std::vector<int>& values) {
  return shift_impl(m, row, values, true);
}

}  // namespace sudiag
