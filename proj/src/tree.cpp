#include "funtag/tree.hpp"

#include <stdexcept>

namespace funtag {

namespace {

void render_into(const ParseNode& node, std::string& out) {
  if (node.is_leaf()) {
    out += node.label;
    out += '[';
    out += node.surface;
    out += ']';
    return;
  }
  out += '(';
  out += node.label;
  for (const ParseNode& child : node.children) {
    out += ' ';
    render_into(child, out);
  }
  out += ')';
}

class TreeReader {
 public:
  explicit TreeReader(std::string_view text) : text_(text) {}

  ParseNode read() {
    ParseNode root = read_node();
    skip_space();
    if (pos_ != text_.size())
      throw std::runtime_error("trailing text after tree");
    return root;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  std::string read_label() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ' ' && text_[pos_] != '(' &&
           text_[pos_] != ')' && text_[pos_] != '[' && text_[pos_] != '\t' &&
           text_[pos_] != '\n' && text_[pos_] != '\r')
      ++pos_;
    if (pos_ == start) throw std::runtime_error("missing node label");
    return std::string(text_.substr(start, pos_ - start));
  }

  ParseNode read_node() {
    skip_space();
    if (pos_ >= text_.size()) throw std::runtime_error("unexpected end of tree");
    ParseNode node;
    if (text_[pos_] == '(') {
      ++pos_;
      skip_space();
      node.label = read_label();
      node.begin = next_leaf_;
      while (true) {
        skip_space();
        if (pos_ >= text_.size())
          throw std::runtime_error("unbalanced '(' in tree");
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        node.children.push_back(read_node());
      }
      if (node.children.empty())
        throw std::runtime_error("internal node without children");
      node.end = next_leaf_;
      return node;
    }
    node.label = read_label();
    if (pos_ >= text_.size() || text_[pos_] != '[')
      throw std::runtime_error("leaf " + node.label + " is missing [surface]");
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
    if (pos_ >= text_.size())
      throw std::runtime_error("unterminated leaf surface");
    node.surface = std::string(text_.substr(start, pos_ - start));
    ++pos_;
    node.begin = next_leaf_;
    node.end = ++next_leaf_;
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int next_leaf_ = 0;
};

void collect_relations(const ParseNode& node,
                       std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_leaf()) {
    out.emplace_back(node.surface, node.label);
    return;
  }
  for (const ParseNode& child : node.children) collect_relations(child, out);
}

}  // namespace

std::string render_tree(const ParseNode& tree) {
  std::string out;
  render_into(tree, out);
  return out;
}

ParseNode read_tree(std::string_view text) { return TreeReader(text).read(); }

std::vector<std::pair<std::string, std::string>> relations(
    const ParseNode& tree) {
  std::vector<std::pair<std::string, std::string>> out;
  collect_relations(tree, out);
  return out;
}

std::string relations_line(const ParseNode& tree) {
  std::string out;
  for (const auto& [surface, label] : relations(tree)) {
    if (!out.empty()) out += ' ';
    out += surface;
    out += '#';
    out += label;
  }
  return out;
}

bool structural_equal(const ParseNode& a, const ParseNode& b) {
  if (a.label != b.label || a.begin != b.begin || a.end != b.end) return false;
  if (a.children.size() != b.children.size()) return false;
  if (a.is_leaf()) return a.surface == b.surface;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!structural_equal(a.children[i], b.children[i])) return false;
  }
  return true;
}

bool skeleton_equal(const ParseNode& a, const ParseNode& b) {
  if (a.begin != b.begin || a.end != b.end) return false;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!skeleton_equal(a.children[i], b.children[i])) return false;
  }
  return true;
}

std::vector<std::string> fringe(const ParseNode& tree) {
  std::vector<std::string> labels;
  for (const auto& [surface, label] : relations(tree)) labels.push_back(label);
  return labels;
}

int leaf_count(const ParseNode& tree) {
  if (tree.is_leaf()) return 1;
  int count = 0;
  for (const ParseNode& child : tree.children) count += leaf_count(child);
  return count;
}

}  // namespace funtag
