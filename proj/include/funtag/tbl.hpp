#ifndef FUNTAG_TBL_HPP_
#define FUNTAG_TBL_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "funtag/corpus.hpp"

namespace funtag {

// Triggering environments, in tie-break order. Tag-valued kinds carry 1, 1,
// 2 and 3 tag arguments; word kinds carry one chunk surface.
enum class TriggerKind : std::uint8_t {
  NextTag,
  PrevTag,
  TagAt2And4,
  TagAt2And4And5,
  NextWord,
  PrevWord,
};

inline constexpr std::size_t kTriggerKindCount = 6;

std::string_view to_string(TriggerKind kind);
std::optional<TriggerKind> trigger_kind_from(std::string_view name);
std::size_t trigger_arity(TriggerKind kind);

struct Trigger {
  TriggerKind kind = TriggerKind::NextTag;
  std::vector<FunctionTag> tags;  // tag-valued kinds
  std::string word;               // word-valued kinds

  static Trigger next_tag(FunctionTag tag);
  static Trigger prev_tag(FunctionTag tag);
  static Trigger tag_at_2_and_4(FunctionTag second, FunctionTag fourth);
  static Trigger tag_at_2_4_5(FunctionTag second, FunctionTag fourth,
                              FunctionTag fifth);
  static Trigger next_word(std::string surface);
  static Trigger prev_word(std::string surface);

  friend bool operator==(const Trigger&, const Trigger&) = default;
};

// source != target, enforced at construction time of rule files and by the
// learner (rules come from disagreeing positions).
struct TransformationRule {
  FunctionTag source;
  FunctionTag target;
  Trigger trigger;

  friend bool operator==(const TransformationRule&,
                         const TransformationRule&) = default;
};

// Deterministic total order used for candidate tie-breaks and dedup:
// trigger kind, then source, target, then arguments (tags by inventory
// order, words bytewise).
bool rule_order_less(const TransformationRule& a, const TransformationRule& b);

// One sentence's current tags plus the chunk surfaces lexical triggers test.
struct TaggingState {
  std::vector<FunctionTag> tags;
  std::vector<std::string> surfaces;

  friend bool operator==(const TaggingState&, const TaggingState&) = default;
};

TaggingState make_state(const AnnotatedSentence& sentence);

// Environment test at position i; any out-of-range reference is false.
bool trigger_matches(const Trigger& trigger, const TaggingState& state,
                     std::size_t i);

// Simultaneous semantics: triggers are evaluated against the input state,
// then every matching source position is retagged at once.
TaggingState apply_rule(const TransformationRule& rule,
                        const TaggingState& state);

TaggingState apply_rules(const std::vector<TransformationRule>& rules,
                         TaggingState state);

// Every (current -> gold) rewrite instantiated with the actual environment
// values at each disagreeing position, over the given template kinds.
// Result is sorted by rule_order_less and deduplicated.
std::vector<TransformationRule> generate_candidates(
    const std::vector<TaggingState>& states,
    const std::vector<std::vector<FunctionTag>>& gold,
    const std::vector<TriggerKind>& templates);

// Corrections minus regressions when the rule is applied once to every state.
int net_gain(const TransformationRule& rule,
             const std::vector<TaggingState>& states,
             const std::vector<std::vector<FunctionTag>>& gold);

std::vector<TriggerKind> all_trigger_kinds();

using InitialTagger =
    std::function<std::vector<FunctionTag>(const AnnotatedSentence&)>;

// Greedy transformation learning: repeatedly pick the candidate with maximal
// net gain (ties by rule_order_less), apply it everywhere, stop when no
// candidate reaches min_gain. Returns rules in acceptance order; the log, if
// given, records each accepted rule's gain.
std::vector<TransformationRule> learn(
    const Corpus& corpus, const InitialTagger& initial,
    const std::vector<TriggerKind>& templates, int min_gain = 1,
    std::vector<std::pair<TransformationRule, int>>* log = nullptr);

// Rule file codec. One rule per line:
//
//   Cau -> PCau IF NEXT_TAG(CauP)
//
// '#'-prefixed comment lines and blank lines are allowed when parsing.
std::string serialize_rules(const std::vector<TransformationRule>& rules);
std::vector<TransformationRule> parse_rules(std::string_view text);

}  // namespace funtag

#endif  // FUNTAG_TBL_HPP_
