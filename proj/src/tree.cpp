#include "impsplit/tree.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace impsplit {

namespace {

enum class Mode { Strict, Factors };

const ComponentPicker kMinElementBlock = [](const ComponentPartition&) {
  return std::size_t{0};  // blocks are sorted by smallest element
};

std::vector<Implication> dedup_implications(std::vector<Implication> imps) {
  std::vector<Implication> out;
  for (auto& imp : imps) {
    if (std::find(out.begin(), out.end(), imp) == out.end())
      out.push_back(std::move(imp));
  }
  return out;
}

std::unique_ptr<TreeNode> leaf_for(const ImplicationBase& b) {
  auto node = std::make_unique<TreeNode>();
  node->element = static_cast<std::size_t>(b.universe().lowest());
  return node;
}

// The consumed base is released before descending so that only the current
// path's sub-bases stay resident; long caterpillar recursions (chains) would
// otherwise hold every ancestor base at once.
std::unique_ptr<TreeNode> rec_components(ImplicationBase b, Mode mode,
                                         const ComponentPicker& pick, bool& failed) {
  if (b.universe().count() == 1) return leaf_for(b);

  ComponentPartition parts = premise_components(b);
  if (parts.blocks.size() < 2) {
    if (mode == Mode::Strict) {
      failed = true;
      return nullptr;
    }
    auto node = std::make_unique<TreeNode>();
    node->factor = std::move(b);
    return node;
  }

  std::size_t idx = pick(parts);
  if (idx >= parts.blocks.size())
    throw Error("component picker returned an invalid block index");
  auto node = std::make_unique<TreeNode>();
  node->u1 = parts.blocks[idx];
  node->u2 = b.universe() - node->u1;
  parts = ComponentPartition{};

  std::vector<Implication> cross;
  for (const auto& imp : b.implications()) {
    const bool inside1 = imp.premise.is_subset_of(node->u1) &&
                         imp.conclusion.is_subset_of(node->u1);
    const bool inside2 = imp.premise.is_subset_of(node->u2) &&
                         imp.conclusion.is_subset_of(node->u2);
    if (!inside1 && !inside2) cross.push_back(imp);
  }
  node->label = dedup_implications(std::move(cross));

  ImplicationBase i1 = restrict_to(b, node->u1);
  ImplicationBase i2 = restrict_to(b, node->u2);
  b.release_implications();

  node->left = rec_components(std::move(i1), mode, pick, failed);
  if (failed) return nullptr;
  node->right = rec_components(std::move(i2), mode, pick, failed);
  if (failed) return nullptr;
  return node;
}

std::unique_ptr<TreeNode> rec_acyclic(ImplicationBase b) {
  if (b.universe().count() == 1) return leaf_for(b);

  auto cut = find_acyclic_split(b);
  if (!cut) {
    auto node = std::make_unique<TreeNode>();
    node->factor = std::move(b);
    return node;
  }

  SplitReport rep = is_split(b, cut->first, cut->second);
  b.release_implications();

  auto node = std::make_unique<TreeNode>();
  node->u1 = rep.u1;
  node->u2 = rep.u2;
  node->acyclic = true;
  std::vector<Implication> cross(rep.ibip.implications().begin(),
                                 rep.ibip.implications().end());
  node->label = dedup_implications(std::move(cross));
  node->left = rec_acyclic(std::move(rep.i1));
  node->right = rec_acyclic(std::move(rep.i2));
  return node;
}

}  // namespace

std::optional<DecompositionTree> build_tree(const ImplicationBase& base) {
  if (base.universe().none())
    return DecompositionTree(base.ground(), base.universe(), nullptr);
  bool failed = false;
  auto root = rec_components(unit_expand(base), Mode::Strict, kMinElementBlock, failed);
  if (failed) return std::nullopt;
  return DecompositionTree(base.ground(), base.universe(), std::move(root));
}

DecompositionTree h_build_tree(const ImplicationBase& base) {
  return h_build_tree(base, kMinElementBlock);
}

DecompositionTree h_build_tree(const ImplicationBase& base, const ComponentPicker& pick) {
  if (base.universe().none())
    return DecompositionTree(base.ground(), base.universe(), nullptr);
  bool failed = false;
  auto root = rec_components(unit_expand(base), Mode::Factors, pick, failed);
  return DecompositionTree(base.ground(), base.universe(), std::move(root));
}

DecompositionTree build_acyclic_tree(const ImplicationBase& base) {
  if (base.universe().none())
    return DecompositionTree(base.ground(), base.universe(), nullptr);
  return DecompositionTree(base.ground(), base.universe(),
                           rec_acyclic(unit_expand(base)));
}

namespace {

struct Validator {
  const Ground& ground;
  TreeDiagnostics diag;
  std::unordered_map<std::string, int> label_counts;
  Bitset covered;

  explicit Validator(const Ground& g, std::size_t width)
      : ground(g), covered(width) {}

  void fail(int condition, std::string message) {
    if (!diag.ok) return;
    diag.ok = false;
    diag.condition = condition;
    diag.message = std::move(message);
  }

  // returns the elements under the subtree
  Bitset walk(const TreeNode* node, std::size_t width) {
    Bitset elems(width);
    if (!node) return elems;
    const bool has_left = node->left != nullptr;
    const bool has_right = node->right != nullptr;
    if (has_left != has_right) {
      fail(0, "interior node with a single child");
      return elems;
    }
    if (!has_left) {  // leaf
      if (node->element && node->factor) {
        fail(1, "leaf with both an element and a factor label");
      } else if (node->element) {
        if (covered.test(*node->element))
          fail(4, "element covered by two leaves: " + ground.tokens[*node->element]);
        elems.set(*node->element);
        covered.set(*node->element);
      } else if (node->factor) {
        const Bitset& fu = node->factor->universe();
        if (fu.intersects(covered)) fail(4, "factor universe overlaps other leaves");
        if (fu.none()) fail(1, "factor leaf with empty universe");
        elems |= fu;
        covered |= fu;
        // labels are sets of implications; duplicates inside one label count once
        std::unordered_set<std::string> local;
        const ImplicationBase factor_units = unit_expand(*node->factor);
        for (const auto& imp : factor_units.implications())
          local.insert(format_implication(ground, imp));
        for (const auto& key : local) ++label_counts[key];
      } else {
        fail(1, "leaf without a label");
      }
      return elems;
    }
    if (node->element || node->factor) {
      fail(0, "interior node carrying a leaf label");
      return elems;
    }
    Bitset left = walk(node->left.get(), width);
    Bitset right = walk(node->right.get(), width);
    std::unordered_set<std::string> local;
    for (const auto& imp : node->label) {
      if (local.insert(format_implication(ground, imp)).second)
        ++label_counts[format_implication(ground, imp)];
      const bool fits_lr =
          imp.premise.is_subset_of(left) && imp.conclusion.is_subset_of(right);
      const bool fits_rl =
          imp.premise.is_subset_of(right) && imp.conclusion.is_subset_of(left);
      if (!fits_lr && !fits_rl)
        fail(3, "implication does not separate its premise from its head: " +
                    format_implication(ground, imp));
      if (node->acyclic && !fits_lr)
        fail(5, "acyclic node with a cross implication oriented backwards: " +
                    format_implication(ground, imp));
    }
    elems = left | right;
    return elems;
  }
};

}  // namespace

TreeDiagnostics validate_tree(const ImplicationBase& base, const DecompositionTree& tree) {
  Validator v(*base.ground(), base.width());
  if (tree.empty()) {
    if (base.universe().any()) v.fail(4, "empty tree for a non-empty universe");
    return v.diag;
  }
  Bitset elems = v.walk(tree.root(), base.width());
  if (!v.diag.ok) return v.diag;

  if (elems != base.universe()) {
    v.fail(4, "leaves do not cover the universe exactly");
    return v.diag;
  }

  std::unordered_set<std::string> base_units;
  const ImplicationBase units = unit_expand(base);
  for (const auto& imp : units.implications())
    base_units.insert(format_implication(*base.ground(), imp));

  for (const auto& [key, count] : v.label_counts) {
    if (!base_units.count(key)) {
      v.fail(2, "label implication not present in the base: " + key);
      return v.diag;
    }
    if (count != 1) {
      v.fail(4, "implication labelled more than once: " + key);
      return v.diag;
    }
  }
  for (const auto& key : base_units) {
    if (!v.label_counts.count(key)) {
      v.fail(4, "implication missing from every label: " + key);
      return v.diag;
    }
  }
  return v.diag;
}

std::vector<ImplicationBase> h_factors(const DecompositionTree& tree) {
  std::vector<ImplicationBase> out;
  std::function<void(const TreeNode*)> walk = [&](const TreeNode* node) {
    if (!node) return;
    if (node->is_leaf()) {
      if (node->factor) out.push_back(*node->factor);
      return;
    }
    walk(node->left.get());
    walk(node->right.get());
  };
  walk(tree.root());
  return out;
}

namespace {

nlohmann::json set_to_json(const Ground& g, const Bitset& s) {
  nlohmann::json arr = nlohmann::json::array();
  s.for_each([&](std::size_t i) { arr.push_back(g.tokens[i]); });
  return arr;
}

nlohmann::json implications_to_json(const Ground& g, std::span<const Implication> imps) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& imp : imps)
    arr.push_back({{"premise", set_to_json(g, imp.premise)},
                   {"conclusion", set_to_json(g, imp.conclusion)}});
  return arr;
}

nlohmann::json node_to_json(const Ground& g, const TreeNode* node) {
  if (node->is_leaf()) {
    if (node->element) return {{"element", g.tokens[*node->element]}};
    return {{"factor",
             {{"ground", set_to_json(g, node->factor->universe())},
              {"implications", implications_to_json(g, node->factor->implications())}}}};
  }
  return {{"split", {{"u1", set_to_json(g, node->u1)}, {"u2", set_to_json(g, node->u2)}}},
          {"implications", implications_to_json(g, node->label)},
          {"children",
           nlohmann::json::array(
               {node_to_json(g, node->left.get()), node_to_json(g, node->right.get())})},
          {"acyclic", node->acyclic}};
}

}  // namespace

nlohmann::json tree_to_json(const DecompositionTree& tree) {
  if (tree.empty()) return nullptr;
  return node_to_json(*tree.ground(), tree.root());
}

}  // namespace impsplit
