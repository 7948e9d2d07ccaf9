#ifndef FUNTAG_TREE_HPP_
#define FUNTAG_TREE_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace funtag {

// A node of a derivation tree. Spans are half-open intervals over the input
// phrase positions; children partition the parent span in order. Leaves have
// no children and carry the chunk text they cover.
struct ParseNode {
  std::string label;
  int begin = 0;
  int end = 0;
  std::vector<ParseNode> children;
  std::string surface;  // leaves only

  bool is_leaf() const { return children.empty(); }

  friend bool operator==(const ParseNode&, const ParseNode&) = default;
};

// Bracket notation: internal nodes as "(Label child child ...)", leaves as
// "Label[surface]".
std::string render_tree(const ParseNode& tree);

// Inverse of render_tree. Leaf spans are assigned left to right from zero and
// internal spans recomputed, so render/read round-trips are structural
// identities. Throws std::runtime_error on malformed text.
ParseNode read_tree(std::string_view text);

// Leaves in reading order as (surface, label).
std::vector<std::pair<std::string, std::string>> relations(
    const ParseNode& tree);

// Relations display: "surface#Label" joined by single spaces.
std::string relations_line(const ParseNode& tree);

// Label + span + shape equality; leaf surfaces must match too.
bool structural_equal(const ParseNode& a, const ParseNode& b);

// Shape-and-span equality with every label and surface erased: the two trees
// bracket the input identically, whatever the nodes are called.
bool skeleton_equal(const ParseNode& a, const ParseNode& b);

// Leaf labels in reading order (the tree's fringe).
std::vector<std::string> fringe(const ParseNode& tree);

int leaf_count(const ParseNode& tree);

}  // namespace funtag

#endif  // FUNTAG_TREE_HPP_
