#include "funtag/parser.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace funtag {

namespace {

using Symbol = Grammar::Symbol;

struct Item {
  int production;
  int dot;
  int origin;
};

// Earley recognizer that records which nonterminals complete over which
// spans; that is all the tree extractor needs. Nullable nonterminals are
// handled by advancing the dot at prediction time, so same-set completions
// never have to re-scan a growing item set.
class Chart {
 public:
  Chart(const Grammar& grammar, const std::vector<Symbol>& input)
      : grammar_(grammar),
        input_(input),
        n_(input.size()),
        sets_(input.size() + 1),
        seen_(input.size() + 1),
        completed_(grammar.symbol_count(),
                   std::vector<std::vector<bool>>(
                       input.size() + 1,
                       std::vector<bool>(input.size() + 1, false))) {
    run();
  }

  bool accepted() const { return completed(grammar_.start(), 0, n_); }

  bool completed(Symbol symbol, int begin, int end) const {
    return completed_[symbol][begin][end];
  }

 private:
  void add(int set, Item item) {
    std::uint64_t code = (static_cast<std::uint64_t>(item.production) << 40) |
                         (static_cast<std::uint64_t>(item.dot) << 20) |
                         static_cast<std::uint64_t>(item.origin);
    if (!seen_[set].insert(code).second) return;
    sets_[set].push_back(item);
  }

  void run() {
    for (int production : grammar_.productions_of(grammar_.start()))
      add(0, {production, 0, 0});
    for (int k = 0; k <= n_; ++k) {
      for (std::size_t index = 0; index < sets_[k].size(); ++index) {
        Item item = sets_[k][index];
        const Grammar::Production& production =
            grammar_.productions()[item.production];
        if (item.dot < static_cast<int>(production.rhs.size())) {
          Symbol next = production.rhs[item.dot];
          if (grammar_.is_terminal(next)) {
            if (k < n_ && input_[k] == next)
              add(k + 1, {item.production, item.dot + 1, item.origin});
          } else {
            for (int predicted : grammar_.productions_of(next))
              add(k, {predicted, 0, k});
            if (grammar_.nullable(next))
              add(k, {item.production, item.dot + 1, item.origin});
          }
        } else {
          Symbol lhs = production.lhs;
          completed_[lhs][item.origin][k] = true;
          if (item.origin < k) {
            // Sets before k are final, so one scan over the origin set
            // pairs this completion with every waiting item.
            for (const Item& waiting : sets_[item.origin]) {
              const Grammar::Production& wp =
                  grammar_.productions()[waiting.production];
              if (waiting.dot < static_cast<int>(wp.rhs.size()) &&
                  wp.rhs[waiting.dot] == lhs)
                add(k, {waiting.production, waiting.dot + 1, waiting.origin});
            }
          }
        }
      }
    }
  }

  const Grammar& grammar_;
  const std::vector<Symbol>& input_;
  int n_;
  std::vector<std::vector<Item>> sets_;
  std::vector<std::unordered_set<std::uint64_t>> seen_;
  std::vector<std::vector<std::vector<bool>>> completed_;
};

class ForestBuilder {
 public:
  ForestBuilder(const Grammar& grammar, const Chart& chart,
                const std::vector<Phrase>& phrases,
                const std::vector<Symbol>& input)
      : grammar_(grammar), chart_(chart), phrases_(phrases), input_(input) {}

  std::vector<ParseNode> build() {
    return trees(grammar_.start(), 0, static_cast<int>(input_.size()));
  }

 private:
  // All derivations of a nonterminal over [begin, end), memoized per span.
  std::vector<ParseNode> trees(Symbol symbol, int begin, int end) {
    auto key = std::make_tuple(symbol, begin, end);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      if (it->second.in_progress)
        throw std::runtime_error("cyclic grammar is not supported");
      return it->second.result;
    }
    memo_[key].in_progress = true;

    std::vector<ParseNode> result;
    for (int production : grammar_.productions_of(symbol)) {
      const Grammar::Production& p = grammar_.productions()[production];
      std::vector<std::vector<ParseNode>> tails =
          expand(p.rhs, 0, begin, end);
      for (std::vector<ParseNode>& children : tails) {
        ParseNode node;
        node.label = grammar_.name(symbol);
        node.begin = begin;
        node.end = end;
        node.children = std::move(children);
        // An internal node with no children only happens for a nullable
        // helper; it is spliced away later.
        result.push_back(std::move(node));
      }
    }
    memo_[key] = {false, result};
    return result;
  }

  // Ways to derive rhs[from..] over exactly [begin, end); each way is the
  // child list it produces.
  std::vector<std::vector<ParseNode>> expand(const std::vector<Symbol>& rhs,
                                             std::size_t from, int begin,
                                             int end) {
    std::vector<std::vector<ParseNode>> results;
    if (from == rhs.size()) {
      if (begin == end) results.push_back({});
      return results;
    }
    Symbol head = rhs[from];
    if (grammar_.is_terminal(head)) {
      if (begin < end && input_[begin] == head) {
        ParseNode leaf;
        leaf.label = grammar_.name(head);
        leaf.begin = begin;
        leaf.end = begin + 1;
        leaf.surface = phrases_[begin].surface;
        for (std::vector<ParseNode>& tail :
             expand(rhs, from + 1, begin + 1, end)) {
          std::vector<ParseNode> children;
          children.push_back(leaf);
          for (ParseNode& node : tail) children.push_back(std::move(node));
          results.push_back(std::move(children));
        }
      }
      return results;
    }
    for (int split = begin; split <= end; ++split) {
      if (!chart_.completed(head, begin, split)) continue;
      std::vector<ParseNode> heads = trees(head, begin, split);
      if (heads.empty()) continue;
      std::vector<std::vector<ParseNode>> tails =
          expand(rhs, from + 1, split, end);
      for (const std::vector<ParseNode>& tail : tails) {
        for (const ParseNode& head_tree : heads) {
          std::vector<ParseNode> children;
          children.push_back(head_tree);
          for (const ParseNode& node : tail) children.push_back(node);
          results.push_back(std::move(children));
        }
      }
    }
    return results;
  }

  struct MemoEntry {
    bool in_progress = false;
    std::vector<ParseNode> result;
  };

  const Grammar& grammar_;
  const Chart& chart_;
  const std::vector<Phrase>& phrases_;
  const std::vector<Symbol>& input_;
  std::map<std::tuple<Symbol, int, int>, MemoEntry> memo_;
};

void splice_helpers(const ParseNode& node, std::vector<ParseNode>& out);

ParseNode without_helpers(const ParseNode& node) {
  ParseNode result;
  result.label = node.label;
  result.begin = node.begin;
  result.end = node.end;
  result.surface = node.surface;
  for (const ParseNode& child : node.children)
    splice_helpers(child, result.children);
  return result;
}

void splice_helpers(const ParseNode& node, std::vector<ParseNode>& out) {
  if (node.label == "PhraseSeq") {
    for (const ParseNode& child : node.children) splice_helpers(child, out);
    return;
  }
  out.push_back(without_helpers(node));
}

int double_subj_clause_count(const ParseNode& node) {
  int count = 0;
  if (node.label == "IC") {
    int subj_leaves = 0;
    for (const ParseNode& child : node.children) {
      if (child.is_leaf() && child.label == "Subj") ++subj_leaves;
    }
    if (subj_leaves > 1) ++count;
  }
  for (const ParseNode& child : node.children)
    count += double_subj_clause_count(child);
  return count;
}

int sentence_level_subj_end(const ParseNode& root) {
  if (root.children.size() != 1) return 0;
  const ParseNode& clause = root.children.front();
  if (clause.label != "CS" || clause.children.empty()) return 0;
  const ParseNode& first = clause.children.front();
  if (first.is_leaf() && first.label == "Subj") return first.end;
  return 0;
}

int structural_compare(const ParseNode& a, const ParseNode& b) {
  if (a.label != b.label) return a.label < b.label ? -1 : 1;
  if (a.begin != b.begin) return a.begin < b.begin ? -1 : 1;
  if (a.end != b.end) return a.end < b.end ? -1 : 1;
  std::size_t shared = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < shared; ++i) {
    int order = structural_compare(a.children[i], b.children[i]);
    if (order != 0) return order;
  }
  if (a.children.size() != b.children.size())
    return a.children.size() < b.children.size() ? -1 : 1;
  return 0;
}

bool canonical_less(const ParseNode& a, const ParseNode& b) {
  int doubles_a = double_subj_clause_count(a);
  int doubles_b = double_subj_clause_count(b);
  if (doubles_a != doubles_b) return doubles_a < doubles_b;
  int outer_a = sentence_level_subj_end(a);
  int outer_b = sentence_level_subj_end(b);
  if (outer_a != outer_b) return outer_a < outer_b;
  return structural_compare(a, b) < 0;
}

}  // namespace

std::vector<ParseNode> parse(const std::vector<Phrase>& phrases,
                             const Grammar& grammar) {
  if (phrases.empty()) throw std::invalid_argument("empty phrase sequence");
  std::vector<Symbol> input;
  input.reserve(phrases.size());
  for (const Phrase& phrase : phrases) {
    auto symbol = grammar.symbol(to_string(phrase.label));
    if (!symbol || !grammar.is_terminal(*symbol)) return {};
    input.push_back(*symbol);
  }
  Chart chart(grammar, input);
  if (!chart.accepted()) return {};
  std::vector<ParseNode> raw =
      ForestBuilder(grammar, chart, phrases, input).build();
  std::vector<ParseNode> forest;
  forest.reserve(raw.size());
  for (const ParseNode& tree : raw) forest.push_back(without_helpers(tree));
  std::sort(forest.begin(), forest.end(), canonical_less);
  return forest;
}

bool recognizes(const std::vector<PhraseLabel>& labels,
                const Grammar& grammar) {
  if (labels.empty()) return false;
  std::vector<Symbol> input;
  input.reserve(labels.size());
  for (PhraseLabel label : labels) {
    auto symbol = grammar.symbol(to_string(label));
    if (!symbol || !grammar.is_terminal(*symbol)) return false;
    input.push_back(*symbol);
  }
  return Chart(grammar, input).accepted();
}

const ParseNode& select_canonical(const std::vector<ParseNode>& forest) {
  if (forest.empty()) throw std::runtime_error("no parse");
  return forest.front();
}

}  // namespace funtag
