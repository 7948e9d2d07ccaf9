#include "funtag/eval.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "funtag/grammar.hpp"

namespace funtag {

namespace {

void collect_brackets(const ParseNode& node,
                      std::vector<std::tuple<std::string, int, int>>& out) {
  if (node.is_leaf()) return;
  out.emplace_back(node.label, node.begin, node.end);
  for (const ParseNode& child : node.children) collect_brackets(child, out);
}

// Whether the system tree could have come from the system's own tags: its
// fringe must equal the folded phrase sequence of those tags.
bool fringe_consistent(const ParseNode& tree,
                       const std::vector<FunctionTag>& tags) {
  std::vector<std::pair<FunctionTag, std::string>> tagged;
  tagged.reserve(tags.size());
  for (FunctionTag tag : tags) tagged.emplace_back(tag, "");
  std::vector<Phrase> phrases;
  try {
    phrases = fold_phrases(tagged);
  } catch (const std::exception&) {
    return false;
  }
  std::vector<std::string> leaves = fringe(tree);
  if (leaves.size() != phrases.size()) return false;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i] != to_string(phrases[i].label)) return false;
  }
  return true;
}

Rational tag_accuracy(const std::vector<FunctionTag>& system_tags,
                      const std::vector<FunctionTag>& gold_tags) {
  if (gold_tags.empty()) return Rational(1);
  std::int64_t matches = 0;
  for (std::size_t i = 0; i < gold_tags.size(); ++i)
    matches += system_tags[i] == gold_tags[i];
  return Rational(matches, static_cast<std::int64_t>(gold_tags.size()));
}

}  // namespace

Rational criterion_value(Criterion criterion) {
  switch (criterion) {
    case Criterion::C0:
      return Rational(0);
    case Criterion::C1:
      return Rational(1);
    case Criterion::C15:
      return Rational(3, 2);
    case Criterion::C2:
      return Rational(2);
    case Criterion::C3:
      return Rational(3);
  }
  return Rational(0);
}

std::string_view to_string(Criterion criterion) {
  switch (criterion) {
    case Criterion::C0:
      return "C0";
    case Criterion::C1:
      return "C1";
    case Criterion::C15:
      return "C1.5";
    case Criterion::C2:
      return "C2";
    case Criterion::C3:
      return "C3";
  }
  return "?";
}

Rational SentenceScore::score() const {
  if (criteria.empty()) throw std::logic_error("empty criteria set");
  Rational sum(0);
  for (Criterion criterion : criteria) sum = sum + criterion_value(criterion);
  return sum / Rational(static_cast<std::int64_t>(criteria.size()));
}

Rational bracket_f1(const ParseNode& system, const ParseNode& gold) {
  if (system.end - system.begin != gold.end - gold.begin)
    throw std::invalid_argument("span-length mismatch between trees");
  std::vector<std::tuple<std::string, int, int>> system_brackets;
  std::vector<std::tuple<std::string, int, int>> gold_brackets;
  collect_brackets(system, system_brackets);
  collect_brackets(gold, gold_brackets);
  std::sort(system_brackets.begin(), system_brackets.end());
  std::sort(gold_brackets.begin(), gold_brackets.end());

  std::int64_t match = 0;
  auto s = system_brackets.begin();
  auto g = gold_brackets.begin();
  while (s != system_brackets.end() && g != gold_brackets.end()) {
    if (*s < *g) {
      ++s;
    } else if (*g < *s) {
      ++g;
    } else {
      ++match;
      ++s;
      ++g;
    }
  }
  std::int64_t denom = static_cast<std::int64_t>(system_brackets.size()) +
                       static_cast<std::int64_t>(gold_brackets.size());
  if (denom == 0) return Rational(1);
  return Rational(2 * match, denom);
}

SentenceScore classify(const std::vector<FunctionTag>& system_tags,
                       const ParseNode* system_tree,
                       const std::vector<FunctionTag>& gold_tags,
                       const ParseNode& gold_tree,
                       const ClassifyConfig& config) {
  if (system_tags.size() != gold_tags.size())
    throw std::invalid_argument("misaligned tag lists");

  if (!system_tree || !fringe_consistent(*system_tree, system_tags))
    return {{Criterion::C0}};

  if (system_tags == gold_tags) {
    if (structural_equal(*system_tree, gold_tree)) return {{Criterion::C3}};
    return {{Criterion::C1}};
  }

  Rational accuracy = tag_accuracy(system_tags, gold_tags);
  bool comparable = leaf_count(*system_tree) == leaf_count(gold_tree);

  SentenceScore score;
  if (comparable && skeleton_equal(*system_tree, gold_tree))
    score.criteria.push_back(Criterion::C15);
  if (comparable && accuracy >= config.c2_tag_threshold) {
    Rational f1 = bracket_f1(*system_tree, gold_tree);
    if (f1 >= config.c2_f1_low && f1 < Rational(1))
      score.criteria.push_back(Criterion::C2);
  }
  if (score.criteria.empty()) {
    score.criteria.push_back(accuracy >= config.c2_tag_threshold
                                 ? Criterion::C1
                                 : Criterion::C0);
  }
  return score;
}

const std::vector<std::string>& sentence_type_labels() {
  static const std::vector<std::string> labels = {
      "Simple", "Complex_NounDC", "Complex_AdjDC", "Complex_AdvDC",
      "ComplicatedComplex"};
  return labels;
}

EvalReport score_report(
    const std::vector<std::pair<std::string, SentenceScore>>& scored) {
  if (scored.empty()) throw std::invalid_argument("nothing to report");

  std::vector<std::string> order = sentence_type_labels();
  std::map<std::string, std::pair<std::size_t, Rational>> by_type;
  for (const auto& [type, score] : scored) {
    if (!by_type.count(type)) {
      if (std::find(order.begin(), order.end(), type) == order.end())
        order.push_back(type);
      by_type.emplace(type, std::make_pair(0, Rational(0)));
    }
    auto& [n, total] = by_type.at(type);
    ++n;
    total = total + score.score();
  }

  EvalReport report;
  std::size_t overall_n = 0;
  Rational overall_total(0);
  for (const std::string& type : order) {
    auto it = by_type.find(type);
    if (it == by_type.end()) continue;
    const auto& [n, total] = it->second;
    EvalReport::Row row;
    row.type = type;
    row.n = n;
    row.total = total;
    row.percent =
        total / Rational(3 * static_cast<std::int64_t>(n)) * Rational(100);
    report.rows.push_back(row);
    overall_n += n;
    overall_total = overall_total + total;
  }
  report.overall.type = "Total";
  report.overall.n = overall_n;
  report.overall.total = overall_total;
  report.overall.percent = overall_total /
                           Rational(3 * static_cast<std::int64_t>(overall_n)) *
                           Rational(100);
  return report;
}

ConfusionMatrix confusion(
    const std::vector<std::pair<FunctionTag, FunctionTag>>& pairs) {
  std::map<std::pair<FunctionTag, FunctionTag>, std::size_t> counts;
  for (const auto& [gold, system] : pairs) {
    if (gold == system) continue;
    ++counts[{gold, system}];
  }
  ConfusionMatrix matrix;
  for (const auto& [key, count] : counts)
    matrix.entries.push_back({key.first, key.second, count});
  std::sort(matrix.entries.begin(), matrix.entries.end(),
            [](const ConfusionMatrix::Entry& a, const ConfusionMatrix::Entry& b) {
              if (a.count != b.count) return a.count > b.count;
              if (a.gold != b.gold) return a.gold < b.gold;
              return a.system < b.system;
            });
  return matrix;
}

std::string format_report_tsv(const EvalReport& report) {
  std::string out = "type\tn\ttotal_score\tpercent\n";
  auto row_line = [](const EvalReport::Row& row) {
    return row.type + "\t" + std::to_string(row.n) + "\t" +
           row.total.to_string() + "\t" + row.percent.to_fixed(2) + "\n";
  };
  for (const EvalReport::Row& row : report.rows) out += row_line(row);
  out += row_line(report.overall);
  return out;
}

std::string format_confusion_tsv(const ConfusionMatrix& matrix) {
  std::string out = "gold\tsystem\tcount\n";
  for (const ConfusionMatrix::Entry& entry : matrix.entries) {
    out += std::string(to_string(entry.gold)) + "\t" +
           std::string(to_string(entry.system)) + "\t" +
           std::to_string(entry.count) + "\n";
  }
  return out;
}

}  // namespace funtag
