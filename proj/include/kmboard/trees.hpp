#ifndef KMBOARD_TREES_HPP_
#define KMBOARD_TREES_HPP_

#include <array>
#include <string>
#include <vector>

#include "kmboard/pairs.hpp"

namespace kmboard {

enum Slot : int { kLeft = 0, kMiddle = 1, kRight = 2 };

/// Admissible ternary tree on {1, 2, 4, ..., 2k}. Nodes are indexed by j
/// (label 2j); index 0 stands for the top node 1, whose only child is node 2.
struct SignedTree {
  int k = 0;
  // child[j][slot] is a node index or 0 for an empty slot. child[0] holds node 2 as its M child.
  std::vector<std::array<int, 3>> child;
  std::vector<int> parent;
  std::vector<Slot> slot;  // slot of j under its parent
  std::vector<Sign> sign;  // sign[j], j >= 1

  int label(int j) const { return j == 0 ? 1 : 2 * j; }
  bool operator==(const SignedTree&) const = default;
};

SignedTree tree_from_pair(const CollapsingPair& pair);
CollapsingPair pair_from_tree(const SignedTree& tree);

/// Builds a tree from explicit child lists; throws NotAdmissible on bad shape.
/// `children[j]` lists the L/M/R node indices of label 2j (0 = none); `children[0]` and `signs[0]` are ignored.
SignedTree make_tree(int k, const std::vector<std::array<int, 3>>& children, const std::vector<Sign>& signs);

/// Unlabeled shape, rooted at the node that carries label 2.
struct Skeleton {
  struct Node {
    std::array<int, 3> child{-1, -1, -1};
    Sign sign = Sign::Plus;
  };
  std::vector<Node> nodes;  // preorder, root first
  bool is_signed = false;

  int size() const { return static_cast<int>(nodes.size()); }
  /// Preorder "(" [sign] "L" sub "M" sub "R" sub ")", "." for an empty slot.
  std::string key() const;
  bool operator==(const Skeleton& o) const { return key() == o.key(); }
};

Skeleton skeleton_of(const SignedTree& tree, bool is_signed);
/// Node index j of each skeleton node, in the skeleton's preorder.
std::vector<int> preorder_nodes(const SignedTree& tree);
/// Skeleton key computed straight from a pair, without building a Skeleton.
std::string skeleton_key(const CollapsingPair& pair, bool is_signed);
Skeleton parse_skeleton(const std::string& key);

SignedTree echelon_labeling(const Skeleton& skeleton);
SignedTree tamed_labeling(const Skeleton& skeleton);
/// Applies a labeling (node index per skeleton node) to a skeleton.
SignedTree label_skeleton(const Skeleton& skeleton, const std::vector<int>& index_of_node);

std::string tree_to_dot(const SignedTree& tree);

}  // namespace kmboard

#endif  // KMBOARD_TREES_HPP_
