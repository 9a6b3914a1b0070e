#include "sudiag/partition.hpp"

#include <algorithm>
#include <sstream>

namespace sudiag {

OrderedPartition::OrderedPartition(int ground_size, std::vector<std::vector<int>> blks)
    : ground(ground_size), blocks(std::move(blks)) {
  std::vector<bool> seen(static_cast<size_t>(ground), false);
  int total = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("OrderedPartition: empty block");
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 1 || v > ground) throw std::invalid_argument("OrderedPartition: value out of range");
      if (seen[static_cast<size_t>(v - 1)])
        throw std::invalid_argument("OrderedPartition: duplicate value");
      seen[static_cast<size_t>(v - 1)] = true;
      ++total;
    }
  }
  if (total != ground) throw std::invalid_argument("OrderedPartition: blocks do not cover ground");
}

int OrderedPartition::block_of(int v) const {
  for (size_t i = 0; i < blocks.size(); ++i)
    if (std::binary_search(blocks[i].begin(), blocks[i].end(), v)) return static_cast<int>(i + 1);
  throw std::invalid_argument("OrderedPartition: value not covered");
}

OrderedPartition OrderedPartition::columns_of(const SparseIntMatrix& m) {
  std::vector<std::vector<int>> blocks;
  for (int c = 1; c <= m.cols(); ++c) {
    auto vals = m.column_values(c);
    std::sort(vals.begin(), vals.end());
    blocks.push_back(std::move(vals));
  }
  return OrderedPartition(m.size(), std::move(blocks));
}

OrderedPartition OrderedPartition::rows_bottom_up(const SparseIntMatrix& m) {
  std::vector<std::vector<int>> blocks;
  for (int r = m.rows(); r >= 1; --r) {
    auto vals = m.row_values(r);
    std::sort(vals.begin(), vals.end());
    blocks.push_back(std::move(vals));
  }
  return OrderedPartition(m.size(), std::move(blocks));
}

std::string OrderedPartition::to_text() const {
  if (blocks.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << '|';
    for (size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) os << ',';
      os << blocks[i][j];
    }
  }
  return os.str();
}

OrderedPartition OrderedPartition::parse_text(const std::string& s) {
  if (s == "-") return OrderedPartition();
  std::vector<std::vector<int>> blocks;
  int ground = 0;
  std::istringstream is(s);
  std::string blk;
  while (std::getline(is, blk, '|')) {
    std::vector<int> b;
    std::istringstream bs(blk);
    std::string tok;
    while (std::getline(bs, tok, ',')) b.push_back(std::stoi(tok));
    ground += static_cast<int>(b.size());
    blocks.push_back(std::move(b));
  }
  return OrderedPartition(ground, std::move(blocks));
}

SparseIntMatrix matrix_from_pairing(const OrderedPartition& left, const OrderedPartition& right) {
  if (left.ground != right.ground) throw std::invalid_argument("pairing: ground mismatch");
  const int n = left.ground;
  const int r = right.block_count();
  std::vector<std::tuple<int, int, int>> entries;
  entries.reserve(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v)
    entries.emplace_back(r + 1 - right.block_of(v), left.block_of(v), v);
  return SparseIntMatrix(r, left.block_count(), entries);
}

}  // namespace sudiag
