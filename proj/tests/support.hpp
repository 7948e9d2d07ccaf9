// Shared test fixtures: a seeded generator of valid annotated sentences and
// an independent brute-force greedy rule learner used as the oracle for the
// production learner. Everything here is test-only and deliberately naive.

#ifndef FUNTAG_TESTS_SUPPORT_HPP_
#define FUNTAG_TESTS_SUPPORT_HPP_

#include <cstdio>
#include <deque>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "funtag/corpus.hpp"
#include "funtag/grammar.hpp"
#include "funtag/tbl.hpp"

namespace funtag::testing {

// Scratch file in the working directory, removed on destruction.
struct TempFile {
  std::string path;

  explicit TempFile(const std::string& contents, const char* stem = "scratch") {
    static int counter = 0;
    path = std::string(stem) + "_" + std::to_string(counter++) + ".tmp";
    std::ofstream out(path, std::ios::binary);
    out << contents;
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  ~TempFile() { std::remove(path.c_str()); }
};

inline const std::vector<std::string>& syllables() {
  static const std::vector<std::string> pool = {
      "က",  "ခ",  "ဂ",  "င",  "စ",  "ဆ",  "တ",  "ထ",  "န",
      "ပ",  "မ",  "ယ",  "ရ",  "လ",  "သ",  "ဟ",  "အ",  "သူ",
      "စာ", "ကို", "သည်", "များ", "ကလေး", "ဈေး", "သွား"};
  return pool;
}

inline std::string random_surface(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> length(1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, syllables().size() - 1);
  std::string surface;
  std::size_t n = length(rng);
  for (std::size_t i = 0; i < n; ++i) surface += syllables()[pick(rng)];
  return surface;
}

inline std::string random_category(std::mt19937& rng) {
  static const std::vector<std::string> pool = {
      "common", "person", "animal", "location", "objects",
      "declarative", "manner", "sent", "number", "extra.dotted"};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

// A structurally valid sentence: 1..6 content chunks, optional trailing SFC,
// optional section mark.
inline AnnotatedSentence random_sentence(std::mt19937& rng) {
  std::uniform_int_distribution<int> chunk_count(1, 6);
  std::uniform_int_distribution<int> token_count(1, 3);
  std::uniform_int_distribution<int> chunk_type(0, 5);  // NC..VC, no SFC
  std::uniform_int_distribution<int> tag_pick(
      0, static_cast<int>(kFunctionTagCount) - 2);  // all but Null
  std::uniform_int_distribution<int> pos_pick(0, 8);
  std::uniform_int_distribution<int> coin(0, 1);

  AnnotatedSentence sentence;
  int chunks = chunk_count(rng);
  for (int c = 0; c < chunks; ++c) {
    Chunk chunk;
    chunk.type = static_cast<ChunkType>(chunk_type(rng));
    chunk.tag = static_cast<FunctionTag>(tag_pick(rng));
    int tokens = token_count(rng);
    for (int t = 0; t < tokens; ++t) {
      Token token;
      token.surface = random_surface(rng);
      token.pos.pos = static_cast<Pos>(pos_pick(rng));
      token.pos.category = random_category(rng);
      chunk.tokens.push_back(std::move(token));
    }
    sentence.chunks.push_back(std::move(chunk));
  }
  if (coin(rng)) {
    Chunk sfc;
    sfc.type = ChunkType::SFC;
    sfc.tag = FunctionTag::Null;
    Token token;
    token.surface = "သည်";
    token.pos.pos = Pos::sf;
    token.pos.category = "declarative";
    sfc.tokens.push_back(std::move(token));
    sentence.chunks.push_back(std::move(sfc));
  }
  sentence.terminal_mark = coin(rng);
  return sentence;
}

// Environment test written from the contract, not the implementation.
inline bool oracle_matches(const Trigger& trigger,
                           const std::vector<FunctionTag>& tags,
                           const std::vector<std::string>& surfaces,
                           std::size_t i) {
  std::size_t n = tags.size();
  switch (trigger.kind) {
    case TriggerKind::NextTag:
      return i + 1 < n && tags[i + 1] == trigger.tags[0];
    case TriggerKind::PrevTag:
      return i >= 1 && tags[i - 1] == trigger.tags[0];
    case TriggerKind::TagAt2And4:
      return i + 4 < n && tags[i + 2] == trigger.tags[0] &&
             tags[i + 4] == trigger.tags[1];
    case TriggerKind::TagAt2And4And5:
      return i + 5 < n && tags[i + 2] == trigger.tags[0] &&
             tags[i + 4] == trigger.tags[1] && tags[i + 5] == trigger.tags[2];
    case TriggerKind::NextWord:
      return i + 1 < n && surfaces[i + 1] == trigger.word;
    case TriggerKind::PrevWord:
      return i >= 1 && surfaces[i - 1] == trigger.word;
  }
  return false;
}

// Pre-state evaluation, then all matching positions retagged at once.
inline std::vector<FunctionTag> oracle_apply(
    const TransformationRule& rule, const std::vector<FunctionTag>& tags,
    const std::vector<std::string>& surfaces) {
  std::vector<FunctionTag> next = tags;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (tags[i] == rule.source && oracle_matches(rule.trigger, tags, surfaces, i))
      next[i] = rule.target;
  }
  return next;
}

inline bool oracle_rule_less(const TransformationRule& a,
                             const TransformationRule& b) {
  if (a.trigger.kind != b.trigger.kind) return a.trigger.kind < b.trigger.kind;
  if (a.source != b.source) return a.source < b.source;
  if (a.target != b.target) return a.target < b.target;
  for (std::size_t i = 0; i < a.trigger.tags.size() && i < b.trigger.tags.size();
       ++i) {
    if (a.trigger.tags[i] != b.trigger.tags[i])
      return a.trigger.tags[i] < b.trigger.tags[i];
  }
  if (a.trigger.tags.size() != b.trigger.tags.size())
    return a.trigger.tags.size() < b.trigger.tags.size();
  return a.trigger.word < b.trigger.word;
}

// Brute-force greedy learner: regenerates and rescores every candidate from
// scratch each round with plain loops. Mirrors the documented contract
// (gain first, then trigger kind, source, target, arguments) without
// sharing the production code path.
inline std::vector<TransformationRule> oracle_learn(
    const std::vector<TaggingState>& initial,
    const std::vector<std::vector<FunctionTag>>& gold,
    const std::vector<TriggerKind>& templates, int min_gain) {
  std::vector<TaggingState> states = initial;
  std::vector<TransformationRule> accepted;
  while (true) {
    std::vector<TransformationRule> candidates;
    for (std::size_t s = 0; s < states.size(); ++s) {
      const TaggingState& state = states[s];
      for (std::size_t i = 0; i < state.tags.size(); ++i) {
        if (state.tags[i] == gold[s][i]) continue;
        for (TriggerKind kind : templates) {
          Trigger trigger;
          bool feasible = true;
          std::size_t n = state.tags.size();
          switch (kind) {
            case TriggerKind::NextTag:
              feasible = i + 1 < n;
              if (feasible) trigger = Trigger::next_tag(state.tags[i + 1]);
              break;
            case TriggerKind::PrevTag:
              feasible = i > 0;
              if (feasible) trigger = Trigger::prev_tag(state.tags[i - 1]);
              break;
            case TriggerKind::TagAt2And4:
              feasible = i + 4 < n;
              if (feasible)
                trigger = Trigger::tag_at_2_and_4(state.tags[i + 2],
                                                  state.tags[i + 4]);
              break;
            case TriggerKind::TagAt2And4And5:
              feasible = i + 5 < n;
              if (feasible)
                trigger = Trigger::tag_at_2_4_5(
                    state.tags[i + 2], state.tags[i + 4], state.tags[i + 5]);
              break;
            case TriggerKind::NextWord:
              feasible = i + 1 < n;
              if (feasible) trigger = Trigger::next_word(state.surfaces[i + 1]);
              break;
            case TriggerKind::PrevWord:
              feasible = i > 0;
              if (feasible) trigger = Trigger::prev_word(state.surfaces[i - 1]);
              break;
          }
          if (!feasible) continue;
          TransformationRule rule{state.tags[i], gold[s][i], trigger};
          bool duplicate = false;
          for (const TransformationRule& seen : candidates) {
            if (seen == rule) {
              duplicate = true;
              break;
            }
          }
          if (!duplicate) candidates.push_back(rule);
        }
      }
    }
    if (candidates.empty()) break;

    const TransformationRule* best = nullptr;
    int best_gain = 0;
    for (const TransformationRule& rule : candidates) {
      int gain = 0;
      for (std::size_t s = 0; s < states.size(); ++s) {
        const TaggingState& state = states[s];
        std::vector<FunctionTag> after =
            oracle_apply(rule, state.tags, state.surfaces);
        for (std::size_t i = 0; i < state.tags.size(); ++i)
          gain += (after[i] == gold[s][i]) - (state.tags[i] == gold[s][i]);
      }
      if (!best || gain > best_gain ||
          (gain == best_gain && oracle_rule_less(rule, *best))) {
        best = &rule;
        best_gain = gain;
      }
    }
    if (best_gain < min_gain) break;
    for (TaggingState& state : states)
      state.tags = oracle_apply(*best, state.tags, state.surfaces);
    accepted.push_back(*best);
  }
  return accepted;
}

// Every string of length <= max_len over the given terminal alphabet that
// the grammar derives, found by breadth-first expansion of sentential forms
// (always the leftmost nonterminal). Forms that touch a terminal outside the
// alphabet or whose minimum yield exceeds max_len are pruned, which bounds
// the search. This shares the Grammar data with the parser but none of the
// chart machinery.
inline std::set<std::vector<PhraseLabel>> enumerate_accepted(
    const Grammar& grammar, std::size_t max_len,
    const std::vector<PhraseLabel>& alphabet) {
  using Symbol = Grammar::Symbol;
  std::set<Symbol> allowed;
  for (PhraseLabel label : alphabet) {
    auto symbol = grammar.symbol(to_string(label));
    if (symbol) allowed.insert(*symbol);
  }

  // Minimum terminal yield per symbol, by fixpoint.
  const std::size_t kBig = 1000000;
  std::vector<std::size_t> min_len(grammar.symbol_count(), kBig);
  for (Symbol s = 0; s < static_cast<Symbol>(grammar.symbol_count()); ++s) {
    if (grammar.is_terminal(s)) min_len[s] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Grammar::Production& production : grammar.productions()) {
      std::size_t total = 0;
      for (Symbol s : production.rhs) total += min_len[s];
      if (total < min_len[production.lhs]) {
        min_len[production.lhs] = total;
        changed = true;
      }
    }
  }

  auto form_min = [&](const std::vector<Symbol>& form) {
    std::size_t total = 0;
    for (Symbol s : form) total += min_len[s];
    return total;
  };

  std::set<std::vector<PhraseLabel>> accepted;
  std::set<std::vector<Symbol>> seen;
  std::deque<std::vector<Symbol>> frontier;
  frontier.push_back({grammar.start()});
  while (!frontier.empty()) {
    std::vector<Symbol> form = frontier.front();
    frontier.pop_front();

    std::size_t leftmost = form.size();
    bool viable = form_min(form) <= max_len;
    for (std::size_t i = 0; viable && i < form.size(); ++i) {
      if (!grammar.is_terminal(form[i])) {
        leftmost = i;
        break;
      }
      if (!allowed.count(form[i])) viable = false;
    }
    if (!viable) continue;

    if (leftmost == form.size()) {
      std::vector<PhraseLabel> sentence;
      bool in_alphabet = true;
      for (Symbol s : form) {
        auto label = phrase_label_from(grammar.name(s));
        if (!label || !allowed.count(s)) {
          in_alphabet = false;
          break;
        }
        sentence.push_back(*label);
      }
      if (in_alphabet && !sentence.empty()) accepted.insert(sentence);
      continue;
    }

    for (int production : grammar.productions_of(form[leftmost])) {
      const auto& rhs = grammar.productions()[production].rhs;
      std::vector<Symbol> next;
      next.reserve(form.size() - 1 + rhs.size());
      next.insert(next.end(), form.begin(), form.begin() + leftmost);
      next.insert(next.end(), rhs.begin(), rhs.end());
      next.insert(next.end(), form.begin() + leftmost + 1, form.end());
      if (form_min(next) > max_len) continue;
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return accepted;
}

}  // namespace funtag::testing

#endif  // FUNTAG_TESTS_SUPPORT_HPP_
