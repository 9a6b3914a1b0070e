#include "sudiag/tree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sudiag {

PlanarTree PlanarTree::node(std::vector<PlanarTree> children) {
  if (children.size() < 2) throw std::invalid_argument("PlanarTree: node arity must be >= 2");
  PlanarTree t;
  t.children_ = std::move(children);
  return t;
}

int PlanarTree::leaf_count() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const PlanarTree& c : children_) n += c.leaf_count();
  return n;
}

int PlanarTree::internal_count() const {
  if (is_leaf()) return 0;
  int n = 1;
  for (const PlanarTree& c : children_) n += c.internal_count();
  return n;
}

PlanarTree PlanarTree::mirrored() const {
  if (is_leaf()) return leaf();
  std::vector<PlanarTree> kids;
  kids.reserve(children_.size());
  for (auto it = children_.rbegin(); it != children_.rend(); ++it) kids.push_back(it->mirrored());
  return node(std::move(kids));
}

std::vector<int> PlanarTree::node_arities() const {
  std::vector<int> out;
  if (is_leaf()) return out;
  out.push_back(arity());
  for (const PlanarTree& c : children_) {
    auto sub = c.node_arities();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void render(const PlanarTree& t, int& next_leaf, std::ostringstream& os) {
  if (t.is_leaf()) {
    os << next_leaf++;
    return;
  }
  os << '(';
  bool first = true;
  for (const PlanarTree& c : t.children()) {
    if (!first) os << ' ';
    render(c, next_leaf, os);
    first = false;
  }
  os << ')';
}

PlanarTree parse_tree(const std::string& s, size_t& i) {
  while (i < s.size() && s[i] == ' ') ++i;
  if (i >= s.size()) throw std::invalid_argument("tree text: truncated");
  if (s[i] == '(') {
    ++i;
    std::vector<PlanarTree> kids;
    while (true) {
      while (i < s.size() && s[i] == ' ') ++i;
      if (i >= s.size()) throw std::invalid_argument("tree text: missing ')'");
      if (s[i] == ')') {
        ++i;
        break;
      }
      kids.push_back(parse_tree(s, i));
    }
    return PlanarTree::node(std::move(kids));
  }
  if (!std::isdigit(static_cast<unsigned char>(s[i])))
    throw std::invalid_argument("tree text: unexpected character");
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  return PlanarTree::leaf();
}

}  // namespace

std::string PlanarTree::to_text() const {
  std::ostringstream os;
  int next_leaf = 1;
  render(*this, next_leaf, os);
  return os.str();
}

PlanarTree PlanarTree::parse_text(const std::string& s) {
  size_t i = 0;
  PlanarTree t = parse_tree(s, i);
  while (i < s.size() && s[i] == ' ') ++i;
  if (i != s.size()) throw std::invalid_argument("tree text: trailing characters");
  return t;
}

std::string PlanarTree::shape_key() const {
  if (is_leaf()) return ".";
  std::string out = "(";
  for (const PlanarTree& c : children_) out += c.shape_key();
  out += ')';
  return out;
}

std::string PlanarTree::to_dot(const std::string& graph_name) const {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n  node [shape=point];\n";
  int next_id = 0, next_leaf = 1;
  auto walk = [&](auto&& self, const PlanarTree& t) -> int {
    int id = next_id++;
    if (t.is_leaf())
      os << "  n" << id << " [shape=plaintext, label=\"" << next_leaf++ << "\"];\n";
    else
      os << "  n" << id << ";\n";
    for (const PlanarTree& c : t.children()) {
      int cid = self(self, c);
      os << "  n" << id << " -> n" << cid << ";\n";
    }
    return id;
  };
  walk(walk, *this);
  os << "}\n";
  return os.str();
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[parent[static_cast<size_t>(x)]];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

LeveledTree partition_to_leveled_tree(const OrderedPartition& lambda) {
  if (lambda.ground < 1)
    throw std::invalid_argument("partition_to_leveled_tree: ground set must be non-empty");
  const int k = lambda.ground + 1;  // leaves
  LeveledTree out;
  out.leaves = k;
  out.levels = lambda;

  Dsu dsu(k);  // components over leaves 0..k-1
  std::vector<PlanarTree> comp_tree(static_cast<size_t>(k));
  std::vector<int> comp_leaf(static_cast<size_t>(k));  // leaf index when still a bare leaf, else 0
  std::iota(comp_leaf.begin(), comp_leaf.end(), 1);

  for (const auto& block : lambda.blocks) {
    // split the block into runs using the pre-level state: adjacent elements
    // j < j' chain exactly when leaves j+1 and j' already share a branch
    std::vector<std::vector<int>> runs;
    for (int j : block) {
      if (!runs.empty() && dsu.find(runs.back().back()) == dsu.find(j - 1))
        runs.back().push_back(j);
      else
        runs.push_back({j});
    }
    std::vector<LevelCorolla> level_nodes;
    for (const auto& run : runs) {
      // children: distinct branches of leaves run.front() .. run.back()+1
      std::vector<int> child_roots;
      for (int leaf = run.front(); leaf <= run.back() + 1; ++leaf) {
        int root = dsu.find(leaf - 1);
        if (child_roots.empty() || child_roots.back() != root) child_roots.push_back(root);
      }
      LevelCorolla info;
      info.arity = static_cast<int>(child_roots.size());
      std::vector<PlanarTree> kids;
      kids.reserve(child_roots.size());
      for (int root : child_roots) {
        if (comp_leaf[static_cast<size_t>(root)] != 0)
          info.leaf_children.push_back(comp_leaf[static_cast<size_t>(root)]);
        kids.push_back(std::move(comp_tree[static_cast<size_t>(root)]));
      }
      PlanarTree merged = PlanarTree::node(std::move(kids));
      for (size_t i = 1; i < child_roots.size(); ++i) dsu.unite(child_roots[i], child_roots[0]);
      int root = dsu.find(child_roots[0]);
      comp_tree[static_cast<size_t>(root)] = std::move(merged);
      comp_leaf[static_cast<size_t>(root)] = 0;
      level_nodes.push_back(std::move(info));
    }
    if (level_nodes.size() > 1) out.degenerate = true;
    out.corollas.push_back(std::move(level_nodes));
  }

  int root = dsu.find(0);
  for (int leaf = 1; leaf < k; ++leaf)
    if (dsu.find(leaf) != root)
      throw std::logic_error("partition_to_leveled_tree: merges left several components");
  out.tree = std::move(comp_tree[static_cast<size_t>(root)]);
  return out;
}

std::vector<std::vector<int>> corolla_profile(const OrderedPartition& lambda) {
  LeveledTree lt = partition_to_leveled_tree(lambda);
  std::vector<std::vector<int>> profile;
  for (const auto& level : lt.corollas) {
    std::vector<int> arities;
    for (const LevelCorolla& c : level) arities.push_back(c.arity);
    std::sort(arities.begin(), arities.end());
    profile.push_back(std::move(arities));
  }
  return profile;
}

std::optional<PlanarTree> tonks(const OrderedPartition& lambda) {
  LeveledTree lt = partition_to_leveled_tree(lambda);
  if (lt.degenerate) return std::nullopt;
  return lt.tree;
}

std::vector<std::vector<int>> derived_consecutive_blocks(const SparseIntMatrix& m, LineKind kind,
                                                         int index) {
  const std::vector<int> vals =
      kind == LineKind::Column ? m.column_values(index) : m.row_values(index);
  std::vector<std::vector<int>> blocks;
  for (size_t i = 0; i < vals.size(); ++i) {
    bool chained = false;
    if (i > 0) {
      chained = true;
      for (int k = vals[i - 1] + 1; k < vals[i]; ++k) {
        const CellPos p = m.position(k);
        const bool earlier =
            kind == LineKind::Column ? (p.col < index) : (p.row > index);
        if (!earlier) {
          chained = false;
          break;
        }
      }
    }
    if (chained)
      blocks.back().push_back(vals[i]);
    else
      blocks.push_back({vals[i]});
  }
  return blocks;
}

bool is_nondegenerate_matrix(const SparseIntMatrix& m) {
  for (int c = 1; c <= m.cols(); ++c)
    if (derived_consecutive_blocks(m, LineKind::Column, c).size() != 1) return false;
  for (int r = 1; r <= m.rows(); ++r)
    if (derived_consecutive_blocks(m, LineKind::Row, r).size() != 1) return false;
  return true;
}

namespace {

std::vector<DiagonalTermK> build_delta_k(int k, const DerivedClosure& closure) {
  std::map<std::pair<std::string, std::string>, DiagonalTermK> acc;
  for (const SparseIntMatrix& m : closure.matrices()) {
    if (!is_nondegenerate_matrix(m)) continue;
    auto left = tonks(OrderedPartition::columns_of(m));
    auto right = tonks(OrderedPartition::rows_bottom_up(m));
    if (!left || !right)
      throw std::logic_error("delta_K: block criterion and level criterion disagree");
    auto key = std::make_pair(left->shape_key(), right->shape_key());
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, DiagonalTermK{std::move(*left), std::move(*right), 1});
    else
      ++it->second.multiplicity;
  }
  std::vector<DiagonalTermK> out;
  out.reserve(acc.size());
  for (auto& [key, term] : acc) {
    if (term.left.leaf_count() != k || term.right.leaf_count() != k)
      throw std::logic_error("delta_K: leaf count mismatch");
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace

std::vector<DiagonalTermK> delta_K(int k, int cap) {
  if (k < 2) throw std::invalid_argument("delta_K: arity must be >= 2");
  DerivedClosure closure(k - 1, cap);
  return build_delta_k(k, closure);
}

const DerivedClosure& DeltaKCache::closure(int ground) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = closures_.find(ground);
  if (it == closures_.end())
    it = closures_.emplace(ground, std::make_unique<DerivedClosure>(ground, cap_)).first;
  return *it->second;
}

const std::vector<DiagonalTermK>& DeltaKCache::terms(int arity) {
  if (arity < 2) throw std::invalid_argument("DeltaKCache: arity must be >= 2");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = terms_.find(arity);
    if (it != terms_.end()) return it->second;
  }
  const DerivedClosure& cl = closure(arity - 1);
  std::vector<DiagonalTermK> built = build_delta_k(arity, cl);
  std::lock_guard<std::mutex> lock(mu_);
  return terms_.emplace(arity, std::move(built)).first->second;
}

}  // namespace sudiag
