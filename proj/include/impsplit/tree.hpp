#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "impsplit/base.hpp"
#include "impsplit/split.hpp"

namespace impsplit {

/// Node of a decomposition tree. Interior nodes carry the cross implications
/// of their split; leaves carry either a single element or an indecomposable
/// factor base. Children are stored ordered (chosen component first) but the
/// tree semantics treat them as unordered.
struct TreeNode {
  std::vector<Implication> label;
  Bitset u1, u2;
  bool acyclic = false;
  std::unique_ptr<TreeNode> left, right;

  std::optional<std::size_t> element;
  std::optional<ImplicationBase> factor;

  bool is_leaf() const { return left == nullptr; }
};

class DecompositionTree {
 public:
  DecompositionTree() = default;
  DecompositionTree(GroundPtr ground, Bitset universe, std::unique_ptr<TreeNode> root)
      : ground_(std::move(ground)), universe_(std::move(universe)), root_(std::move(root)) {}

  bool empty() const { return root_ == nullptr; }
  const TreeNode* root() const { return root_.get(); }
  const GroundPtr& ground() const { return ground_; }
  const Bitset& universe() const { return universe_; }

 private:
  GroundPtr ground_;
  Bitset universe_;
  std::unique_ptr<TreeNode> root_;
};

/// Selects the block to split off; blocks are sorted by smallest element.
using ComponentPicker = std::function<std::size_t(const ComponentPartition&)>;

/// Recursive decomposition along premise-connected components. Returns
/// nullopt (FAIL) when some premise-connected sub-base has two or more
/// elements; an empty universe yields the empty tree.
std::optional<DecompositionTree> build_tree(const ImplicationBase& base);

/// Like build_tree, but premise-connected sub-bases become factor leaves, so
/// every base decomposes.
DecompositionTree h_build_tree(const ImplicationBase& base);
DecompositionTree h_build_tree(const ImplicationBase& base, const ComponentPicker& pick);

/// Decomposition by acyclic splits only; sub-bases without an acyclic split
/// become factor leaves. Interior nodes are oriented u1 -> u2.
DecompositionTree build_acyclic_tree(const ImplicationBase& base);

struct TreeDiagnostics {
  bool ok = true;
  int condition = 0;  // 1..4 label conditions, 5 orientation, 0 structure
  std::string message;
};

TreeDiagnostics validate_tree(const ImplicationBase& base, const DecompositionTree& tree);

/// Factor leaf labels, in left-to-right order.
std::vector<ImplicationBase> h_factors(const DecompositionTree& tree);

nlohmann::json tree_to_json(const DecompositionTree& tree);

}  // namespace impsplit
