#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sudiag/closure.hpp"
#include "sudiag/partition.hpp"

namespace sudiag {

// Rooted planar tree; leaves carry no payload, internal nodes have arity >= 2.
class PlanarTree {
 public:
  PlanarTree() = default;  // leaf
  static PlanarTree leaf() { return {}; }
  static PlanarTree node(std::vector<PlanarTree> children);

  bool is_leaf() const { return children_.empty(); }
  const std::vector<PlanarTree>& children() const { return children_; }
  int arity() const { return static_cast<int>(children_.size()); }
  int leaf_count() const;
  int internal_count() const;
  // leaf_count - 1 - internal_count: codimension of the face this tree indexes.
  int deficiency() const { return leaf_count() - 1 - internal_count(); }
  bool is_corolla() const { return !is_leaf() && internal_count() == 1; }
  // Left-right reflection at every node.
  PlanarTree mirrored() const;
  // Sorted list of distinct internal-node arities.
  std::vector<int> node_arities() const;

  std::string to_text() const;  // "((1 2) 3 4)", single leaf renders as "1"
  static PlanarTree parse_text(const std::string& s);
  std::string shape_key() const;  // canonical parenthesis encoding, leaf = "."
  std::string to_dot(const std::string& graph_name = "tree") const;

  friend bool operator==(const PlanarTree& a, const PlanarTree& b) {
    return a.children_ == b.children_;
  }
  friend bool operator<(const PlanarTree& a, const PlanarTree& b) {
    return a.shape_key() < b.shape_key();
  }

 private:
  std::vector<PlanarTree> children_;
};

// One corolla created while replaying an ordered partition as a leveled tree.
struct LevelCorolla {
  int arity = 0;
  std::vector<int> leaf_children;  // leaf indices attached directly, in planar order
};

// Leveled tree produced from an ordered partition of [k-1]: the branches of
// leaves j and j+1 meet at the level whose block contains j.
struct LeveledTree {
  int leaves = 0;
  OrderedPartition levels;
  std::vector<std::vector<LevelCorolla>> corollas;  // per level, in planar order
  PlanarTree tree;                                  // level structure forgotten
  bool degenerate = false;  // some level carries more than one corolla
};

LeveledTree partition_to_leveled_tree(const OrderedPartition& lambda);

// Per level, the corolla arities appearing there.
std::vector<std::vector<int>> corolla_profile(const OrderedPartition& lambda);

// Projection that forgets levels; absent exactly when the leveled tree is
// degenerate (the face maps to a lower-dimensional cell).
std::optional<PlanarTree> tonks(const OrderedPartition& lambda);

enum class LineKind { Row, Column };

// Maximal runs in the selected line where each internal gap is filled strictly
// earlier (columns further left / rows lower down).
std::vector<std::vector<int>> derived_consecutive_blocks(const SparseIntMatrix& m, LineKind kind,
                                                         int index);

// Exactly one derived-consecutive block in every row and every column.
bool is_nondegenerate_matrix(const SparseIntMatrix& m);

struct DiagonalTermK {
  PlanarTree left;
  PlanarTree right;
  // Number of derived matrices projecting onto this pair; consumers reduce mod p.
  long multiplicity = 1;

  friend bool operator==(const DiagonalTermK&, const DiagonalTermK&) = default;
};

// Associahedral diagonal in arity k: the top-cell permutahedral terms on ground
// [k-1] pushed through the Tonks projection, degenerate sides dropped, grouped
// by tree pair. Sorted by (left, right) shape keys.
std::vector<DiagonalTermK> delta_K(int k, int cap = kDefaultEnumCap);

// Shared cache of closures and diagonal term lists (thread-safe, fill-once).
class DeltaKCache {
 public:
  explicit DeltaKCache(int cap = kDefaultEnumCap) : cap_(cap) {}
  int cap() const { return cap_; }
  const std::vector<DiagonalTermK>& terms(int arity);
  const DerivedClosure& closure(int ground);

 private:
  int cap_;
  std::mutex mu_;
  std::map<int, std::vector<DiagonalTermK>> terms_;
  std::map<int, std::unique_ptr<DerivedClosure>> closures_;
};

}  // namespace sudiag
