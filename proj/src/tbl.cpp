#include "funtag/tbl.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace funtag {

namespace {

constexpr std::array<std::string_view, kTriggerKindCount> kTriggerKindNames = {
    "NEXT_TAG", "PREV_TAG", "TAG_AT_2_AND_4", "TAG_AT_2_4_5",
    "NEXT_WORD", "PREV_WORD"};

constexpr std::array<std::size_t, kTriggerKindCount> kTriggerArity = {1, 1, 2,
                                                                      3, 1, 1};

bool is_word_kind(TriggerKind kind) {
  return kind == TriggerKind::NextWord || kind == TriggerKind::PrevWord;
}

std::string_view trim(std::string_view text) {
  std::size_t begin = text.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  std::size_t end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

[[noreturn]] void rule_error(int line, const std::string& what) {
  throw std::runtime_error("rule line " + std::to_string(line) + ": " + what);
}

TransformationRule parse_rule_line(std::string_view line, int line_number) {
  std::size_t arrow = line.find("->");
  if (arrow == std::string_view::npos)
    rule_error(line_number, "missing '->'");
  std::size_t if_at = line.find(" IF ", arrow);
  if (if_at == std::string_view::npos)
    rule_error(line_number, "missing 'IF'");

  std::string_view source_name = trim(line.substr(0, arrow));
  std::string_view target_name = trim(line.substr(arrow + 2, if_at - arrow - 2));
  auto source = function_tag_from(source_name);
  if (!source)
    rule_error(line_number, "unknown source tag " + std::string(source_name));
  auto target = function_tag_from(target_name);
  if (!target)
    rule_error(line_number, "unknown target tag " + std::string(target_name));
  if (*source == *target) rule_error(line_number, "source equals target");

  std::string_view trigger_text = trim(line.substr(if_at + 4));
  std::size_t open = trigger_text.find('(');
  if (open == std::string_view::npos || trigger_text.back() != ')')
    rule_error(line_number, "malformed trigger");
  std::string_view kind_name = trim(trigger_text.substr(0, open));
  auto kind = trigger_kind_from(kind_name);
  if (!kind)
    rule_error(line_number, "unknown trigger kind " + std::string(kind_name));
  std::string_view args =
      trigger_text.substr(open + 1, trigger_text.size() - open - 2);

  Trigger trigger;
  trigger.kind = *kind;
  if (is_word_kind(*kind)) {
    trigger.word = std::string(trim(args));
    if (trigger.word.empty()) rule_error(line_number, "empty trigger word");
  } else {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = args.find(',', start);
      std::string_view piece = trim(
          comma == std::string_view::npos ? args.substr(start)
                                          : args.substr(start, comma - start));
      auto tag = function_tag_from(piece);
      if (!tag)
        rule_error(line_number, "unknown trigger tag " + std::string(piece));
      trigger.tags.push_back(*tag);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (trigger.tags.size() != trigger_arity(*kind))
      rule_error(line_number, "wrong argument count for " +
                                  std::string(kind_name));
  }
  return {*source, *target, trigger};
}

}  // namespace

std::string_view to_string(TriggerKind kind) {
  return kTriggerKindNames[static_cast<std::size_t>(kind)];
}

std::optional<TriggerKind> trigger_kind_from(std::string_view name) {
  for (std::size_t i = 0; i < kTriggerKindNames.size(); ++i) {
    if (kTriggerKindNames[i] == name) return static_cast<TriggerKind>(i);
  }
  return std::nullopt;
}

std::size_t trigger_arity(TriggerKind kind) {
  return kTriggerArity[static_cast<std::size_t>(kind)];
}

Trigger Trigger::next_tag(FunctionTag tag) {
  return {TriggerKind::NextTag, {tag}, {}};
}
Trigger Trigger::prev_tag(FunctionTag tag) {
  return {TriggerKind::PrevTag, {tag}, {}};
}
Trigger Trigger::tag_at_2_and_4(FunctionTag second, FunctionTag fourth) {
  return {TriggerKind::TagAt2And4, {second, fourth}, {}};
}
Trigger Trigger::tag_at_2_4_5(FunctionTag second, FunctionTag fourth,
                              FunctionTag fifth) {
  return {TriggerKind::TagAt2And4And5, {second, fourth, fifth}, {}};
}
Trigger Trigger::next_word(std::string surface) {
  return {TriggerKind::NextWord, {}, std::move(surface)};
}
Trigger Trigger::prev_word(std::string surface) {
  return {TriggerKind::PrevWord, {}, std::move(surface)};
}

bool rule_order_less(const TransformationRule& a, const TransformationRule& b) {
  if (a.trigger.kind != b.trigger.kind) return a.trigger.kind < b.trigger.kind;
  if (a.source != b.source) return a.source < b.source;
  if (a.target != b.target) return a.target < b.target;
  if (a.trigger.tags != b.trigger.tags) return a.trigger.tags < b.trigger.tags;
  return a.trigger.word < b.trigger.word;
}

TaggingState make_state(const AnnotatedSentence& sentence) {
  TaggingState state;
  state.tags.reserve(sentence.chunks.size());
  state.surfaces.reserve(sentence.chunks.size());
  for (const Chunk& chunk : sentence.chunks) {
    state.tags.push_back(chunk.tag);
    state.surfaces.push_back(chunk.surface());
  }
  return state;
}

bool trigger_matches(const Trigger& trigger, const TaggingState& state,
                     std::size_t i) {
  const std::size_t n = state.tags.size();
  auto tag_at = [&](std::size_t offset, FunctionTag expected) {
    return i + offset < n && state.tags[i + offset] == expected;
  };
  switch (trigger.kind) {
    case TriggerKind::NextTag:
      return tag_at(1, trigger.tags[0]);
    case TriggerKind::PrevTag:
      return i > 0 && state.tags[i - 1] == trigger.tags[0];
    case TriggerKind::TagAt2And4:
      return tag_at(2, trigger.tags[0]) && tag_at(4, trigger.tags[1]);
    case TriggerKind::TagAt2And4And5:
      return tag_at(2, trigger.tags[0]) && tag_at(4, trigger.tags[1]) &&
             tag_at(5, trigger.tags[2]);
    case TriggerKind::NextWord:
      return i + 1 < n && state.surfaces[i + 1] == trigger.word;
    case TriggerKind::PrevWord:
      return i > 0 && state.surfaces[i - 1] == trigger.word;
  }
  return false;
}

TaggingState apply_rule(const TransformationRule& rule,
                        const TaggingState& state) {
  TaggingState next = state;
  for (std::size_t i = 0; i < state.tags.size(); ++i) {
    if (state.tags[i] == rule.source && trigger_matches(rule.trigger, state, i))
      next.tags[i] = rule.target;
  }
  return next;
}

TaggingState apply_rules(const std::vector<TransformationRule>& rules,
                         TaggingState state) {
  for (const TransformationRule& rule : rules) state = apply_rule(rule, state);
  return state;
}

std::vector<TransformationRule> generate_candidates(
    const std::vector<TaggingState>& states,
    const std::vector<std::vector<FunctionTag>>& gold,
    const std::vector<TriggerKind>& templates) {
  if (states.size() != gold.size())
    throw std::invalid_argument("states and gold are misaligned");
  std::vector<TransformationRule> candidates;
  for (std::size_t s = 0; s < states.size(); ++s) {
    const TaggingState& state = states[s];
    const std::vector<FunctionTag>& truth = gold[s];
    if (state.tags.size() != truth.size())
      throw std::invalid_argument("states and gold are misaligned");
    const std::size_t n = state.tags.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (state.tags[i] == truth[i]) continue;
      for (TriggerKind kind : templates) {
        Trigger trigger;
        switch (kind) {
          case TriggerKind::NextTag:
            if (i + 1 >= n) continue;
            trigger = Trigger::next_tag(state.tags[i + 1]);
            break;
          case TriggerKind::PrevTag:
            if (i == 0) continue;
            trigger = Trigger::prev_tag(state.tags[i - 1]);
            break;
          case TriggerKind::TagAt2And4:
            if (i + 4 >= n) continue;
            trigger = Trigger::tag_at_2_and_4(state.tags[i + 2],
                                              state.tags[i + 4]);
            break;
          case TriggerKind::TagAt2And4And5:
            if (i + 5 >= n) continue;
            trigger = Trigger::tag_at_2_4_5(state.tags[i + 2],
                                            state.tags[i + 4],
                                            state.tags[i + 5]);
            break;
          case TriggerKind::NextWord:
            if (i + 1 >= n) continue;
            trigger = Trigger::next_word(state.surfaces[i + 1]);
            break;
          case TriggerKind::PrevWord:
            if (i == 0) continue;
            trigger = Trigger::prev_word(state.surfaces[i - 1]);
            break;
        }
        candidates.push_back({state.tags[i], truth[i], trigger});
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(), rule_order_less);
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  return candidates;
}

int net_gain(const TransformationRule& rule,
             const std::vector<TaggingState>& states,
             const std::vector<std::vector<FunctionTag>>& gold) {
  int gain = 0;
  for (std::size_t s = 0; s < states.size(); ++s) {
    TaggingState after = apply_rule(rule, states[s]);
    for (std::size_t i = 0; i < after.tags.size(); ++i) {
      bool was_right = states[s].tags[i] == gold[s][i];
      bool now_right = after.tags[i] == gold[s][i];
      gain += static_cast<int>(now_right) - static_cast<int>(was_right);
    }
  }
  return gain;
}

std::vector<TriggerKind> all_trigger_kinds() {
  std::vector<TriggerKind> kinds;
  for (std::size_t i = 0; i < kTriggerKindCount; ++i)
    kinds.push_back(static_cast<TriggerKind>(i));
  return kinds;
}

std::vector<TransformationRule> learn(
    const Corpus& corpus, const InitialTagger& initial,
    const std::vector<TriggerKind>& templates, int min_gain,
    std::vector<std::pair<TransformationRule, int>>* log) {
  if (corpus.sentences.empty()) throw std::invalid_argument("empty corpus");
  if (min_gain < 1) throw std::invalid_argument("min_gain must be positive");

  std::vector<TaggingState> states;
  std::vector<std::vector<FunctionTag>> gold;
  states.reserve(corpus.sentences.size());
  gold.reserve(corpus.sentences.size());
  for (const AnnotatedSentence& sentence : corpus.sentences) {
    TaggingState state = make_state(sentence);
    state.tags = initial(sentence);
    if (state.tags.size() != sentence.chunks.size())
      throw std::invalid_argument("initial tagger changed sentence length");
    states.push_back(std::move(state));
    gold.push_back(function_tag_sequence(sentence, /*include_null=*/true));
  }

  std::vector<TransformationRule> rules;
  while (true) {
    std::vector<TransformationRule> candidates =
        generate_candidates(states, gold, templates);
    if (candidates.empty()) break;
    // Candidates arrive in tie-break order, so the first strict maximum wins.
    int best_gain = 0;
    const TransformationRule* best = nullptr;
    for (const TransformationRule& candidate : candidates) {
      int gain = net_gain(candidate, states, gold);
      if (!best || gain > best_gain) {
        best = &candidate;
        best_gain = gain;
      }
    }
    if (best_gain < min_gain) break;
    for (TaggingState& state : states) state = apply_rule(*best, state);
    rules.push_back(*best);
    if (log) log->emplace_back(*best, best_gain);
  }
  return rules;
}

std::string serialize_rules(const std::vector<TransformationRule>& rules) {
  std::ostringstream out;
  for (const TransformationRule& rule : rules) {
    out << to_string(rule.source) << " -> " << to_string(rule.target) << " IF "
        << to_string(rule.trigger.kind) << "(";
    if (is_word_kind(rule.trigger.kind)) {
      out << rule.trigger.word;
    } else {
      for (std::size_t i = 0; i < rule.trigger.tags.size(); ++i) {
        if (i) out << ",";
        out << to_string(rule.trigger.tags[i]);
      }
    }
    out << ")\n";
  }
  return out.str();
}

std::vector<TransformationRule> parse_rules(std::string_view text) {
  std::vector<TransformationRule> rules;
  int line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t newline = text.find('\n', start);
    std::string_view line = text.substr(
        start, newline == std::string_view::npos ? text.size() - start
                                                 : newline - start);
    ++line_number;
    std::string_view body = trim(line);
    if (!body.empty() && body[0] != '#')
      rules.push_back(parse_rule_line(body, line_number));
    if (newline == std::string_view::npos) break;
    start = newline + 1;
  }
  return rules;
}

}  // namespace funtag
