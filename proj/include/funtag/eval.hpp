#ifndef FUNTAG_EVAL_HPP_
#define FUNTAG_EVAL_HPP_

#include <string>
#include <vector>

#include "funtag/rational.hpp"
#include "funtag/tagset.hpp"
#include "funtag/tree.hpp"

namespace funtag {

// The 0–3 judgment scale.
enum class Criterion { C0, C1, C15, C2, C3 };

Rational criterion_value(Criterion criterion);
std::string_view to_string(Criterion criterion);

// When a sentence falls under several criteria its score is their mean.
struct SentenceScore {
  std::vector<Criterion> criteria;

  Rational score() const;

  friend bool operator==(const SentenceScore&, const SentenceScore&) = default;
};

// Thresholds behind the "quite well tagged, some relation errors" band; the
// scale was applied by human judges, so these are this tool's mechanical
// stand-ins and can be overridden.
struct ClassifyConfig {
  Rational c2_tag_threshold{3, 4};
  Rational c2_f1_low{1, 2};
};

// Labeled-bracket F1 over the internal nodes of the two trees. Exact:
// 2*match / (gold_count + system_count), and 1 when both trees have no
// internal nodes. Throws std::invalid_argument when the trees cover
// different span lengths.
Rational bracket_f1(const ParseNode& system, const ParseNode& gold);

// Scores one sentence:
//   - no system tree, or a tree inconsistent with the system's own tags:
//     completely wrong format, C0;
//   - tags all correct: C3 when the trees match, otherwise C1;
//   - tags imperfect: C15 when the skeletons (clause structure with leaf
//     labels erased) match, C2 when tagging is good enough and bracket F1
//     is in [c2_f1_low, 1) — both together average to 1.75; when neither
//     applies, C1 if tag accuracy clears the threshold, else C0.
// Tag lists are the aligned per-chunk tags with Null stripped.
SentenceScore classify(const std::vector<FunctionTag>& system_tags,
                       const ParseNode* system_tree,
                       const std::vector<FunctionTag>& gold_tags,
                       const ParseNode& gold_tree,
                       const ClassifyConfig& config = {});

struct EvalReport {
  struct Row {
    std::string type;
    std::size_t n = 0;
    Rational total;
    Rational percent;  // total / (3n) * 100
  };

  std::vector<Row> rows;
  Row overall;
};

// Groups scores by sentence type. The five conventional type labels come
// first in their fixed order; any other labels follow in first-appearance
// order. The overall row sums every sentence.
EvalReport score_report(
    const std::vector<std::pair<std::string, SentenceScore>>& scored);

// Off-diagonal (gold, system) tally, ordered by count descending, then by
// gold and system tag order.
struct ConfusionMatrix {
  struct Entry {
    FunctionTag gold;
    FunctionTag system;
    std::size_t count = 0;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  std::vector<Entry> entries;
};

ConfusionMatrix confusion(
    const std::vector<std::pair<FunctionTag, FunctionTag>>& pairs);

// TSV renderings used by the command line. Percent cells carry two decimals.
std::string format_report_tsv(const EvalReport& report);
std::string format_confusion_tsv(const ConfusionMatrix& matrix);

// The five conventional sentence-type labels in report order.
const std::vector<std::string>& sentence_type_labels();

}  // namespace funtag

#endif  // FUNTAG_EVAL_HPP_
