#include "funtag/grammar.hpp"

#include <array>

namespace funtag {

namespace {

constexpr std::array<std::string_view, kPhraseLabelCount> kPhraseLabelNames = {
    "Subj", "Obj",  "Iobj", "Pla",     "Tim",     "Ext", "Sim",
    "Com",  "Own",  "Use",  "Cau",     "Aim",     "PcomplS", "PcomplO",
    "Ada",  "Active", "CCS", "CCP",    "CCA",     "CCC", "CCM",
};

struct FoldPair {
  FunctionTag head;
  FunctionTag marker;
  PhraseLabel label;
};

constexpr std::array<FoldPair, 13> kFoldPairs = {{
    {FunctionTag::PSubj, FunctionTag::SubjP, PhraseLabel::Subj},
    {FunctionTag::PObj, FunctionTag::ObjP, PhraseLabel::Obj},
    {FunctionTag::PIobj, FunctionTag::IobjP, PhraseLabel::Iobj},
    {FunctionTag::PPla, FunctionTag::PlaP, PhraseLabel::Pla},
    {FunctionTag::PTim, FunctionTag::TimP, PhraseLabel::Tim},
    {FunctionTag::PExt, FunctionTag::ExtP, PhraseLabel::Ext},
    {FunctionTag::PSim, FunctionTag::SimP, PhraseLabel::Sim},
    {FunctionTag::PCom, FunctionTag::ComP, PhraseLabel::Com},
    {FunctionTag::POwn, FunctionTag::OwnP, PhraseLabel::Own},
    {FunctionTag::PUse, FunctionTag::UseP, PhraseLabel::Use},
    {FunctionTag::PCau, FunctionTag::CauP, PhraseLabel::Cau},
    {FunctionTag::PAim, FunctionTag::AimP, PhraseLabel::Aim},
    {FunctionTag::PPcomplO, FunctionTag::PcomplOP, PhraseLabel::PcomplO},
}};

// Tags that are already phrase labels.
constexpr std::array<std::pair<FunctionTag, PhraseLabel>, 14> kBareTags = {{
    {FunctionTag::Subj, PhraseLabel::Subj},
    {FunctionTag::Obj, PhraseLabel::Obj},
    {FunctionTag::Pla, PhraseLabel::Pla},
    {FunctionTag::Tim, PhraseLabel::Tim},
    {FunctionTag::Cau, PhraseLabel::Cau},
    {FunctionTag::PcomplS, PhraseLabel::PcomplS},
    {FunctionTag::PcomplO, PhraseLabel::PcomplO},
    {FunctionTag::Ada, PhraseLabel::Ada},
    {FunctionTag::Active, PhraseLabel::Active},
    {FunctionTag::CCS, PhraseLabel::CCS},
    {FunctionTag::CCP, PhraseLabel::CCP},
    {FunctionTag::CCA, PhraseLabel::CCA},
    {FunctionTag::CCC, PhraseLabel::CCC},
    {FunctionTag::CCM, PhraseLabel::CCM},
}};

const FoldPair* head_pair(FunctionTag tag) {
  for (const FoldPair& pair : kFoldPairs) {
    if (pair.head == tag) return &pair;
  }
  return nullptr;
}

const FoldPair* marker_pair(FunctionTag tag) {
  for (const FoldPair& pair : kFoldPairs) {
    if (pair.marker == tag) return &pair;
  }
  return nullptr;
}

std::optional<PhraseLabel> bare_label(FunctionTag tag) {
  for (const auto& [bare, label] : kBareTags) {
    if (bare == tag) return label;
  }
  return std::nullopt;
}

// Phrases allowed before the verb inside a clause; markers and the verb
// itself are excluded.
const std::vector<std::string>& clause_phrase_names() {
  static const std::vector<std::string> names = {
      "Subj", "Obj", "Iobj", "Pla", "Tim", "Ext", "Sim", "Com",
      "Own",  "Use", "Cau",  "Aim", "PcomplS", "PcomplO", "Ada"};
  return names;
}

}  // namespace

std::string_view to_string(PhraseLabel label) {
  return kPhraseLabelNames[static_cast<std::size_t>(label)];
}

std::optional<PhraseLabel> phrase_label_from(std::string_view name) {
  for (std::size_t i = 0; i < kPhraseLabelNames.size(); ++i) {
    if (kPhraseLabelNames[i] == name) return static_cast<PhraseLabel>(i);
  }
  return std::nullopt;
}

std::vector<Phrase> fold_phrases(
    const std::vector<std::pair<FunctionTag, std::string>>& tagged) {
  std::vector<Phrase> phrases;
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    FunctionTag tag = tagged[i].first;
    if (tag == FunctionTag::Null)
      throw std::invalid_argument("Null tag reached the folder");
    if (const FoldPair* pair = head_pair(tag)) {
      if (i + 1 >= tagged.size() || tagged[i + 1].first != pair->marker) {
        throw FoldError(std::string(to_string(tag)) + " requires " +
                            std::string(to_string(pair->marker)),
                        i);
      }
      phrases.push_back(
          {pair->label, tagged[i].second + tagged[i + 1].second});
      ++i;
      continue;
    }
    if (const FoldPair* pair = marker_pair(tag)) {
      throw FoldError(std::string(to_string(tag)) + " without preceding " +
                          std::string(to_string(pair->head)),
                      i);
    }
    std::optional<PhraseLabel> label = bare_label(tag);
    if (!label)
      throw FoldError("tag " + std::string(to_string(tag)) +
                          " has no phrase form",
                      i);
    phrases.push_back({*label, tagged[i].second});
  }
  return phrases;
}

Grammar::Symbol Grammar::intern(const std::string& name, bool terminal) {
  auto it = ids_.find(name);
  if (it != ids_.end()) {
    if (terminal_[it->second] != terminal)
      throw std::invalid_argument("symbol " + name + " redeclared");
    return it->second;
  }
  Symbol id = static_cast<Symbol>(names_.size());
  names_.push_back(name);
  terminal_.push_back(terminal);
  nullable_.push_back(false);
  productions_of_.emplace_back();
  ids_.emplace(name, id);
  return id;
}

Grammar::Symbol Grammar::add_terminal(const std::string& name) {
  return intern(name, true);
}

Grammar::Symbol Grammar::add_nonterminal(const std::string& name) {
  return intern(name, false);
}

void Grammar::add_production(const std::string& lhs,
                             const std::vector<std::string>& rhs) {
  auto lhs_id = symbol(lhs);
  if (!lhs_id) throw std::invalid_argument("undeclared symbol " + lhs);
  if (terminal_[*lhs_id])
    throw std::invalid_argument("terminal " + lhs + " cannot have productions");
  Production production;
  production.lhs = *lhs_id;
  for (const std::string& name : rhs) {
    auto id = symbol(name);
    if (!id) throw std::invalid_argument("undeclared symbol " + name);
    production.rhs.push_back(*id);
  }
  productions_of_[*lhs_id].push_back(static_cast<int>(productions_.size()));
  productions_.push_back(std::move(production));
}

void Grammar::set_start(const std::string& name) {
  auto id = symbol(name);
  if (!id || terminal_[*id])
    throw std::invalid_argument("start symbol must be a declared nonterminal");
  start_ = *id;
}

void Grammar::finalize() {
  if (start_ < 0) throw std::invalid_argument("no start symbol");
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Production& production : productions_) {
      if (nullable_[production.lhs]) continue;
      bool all_nullable = true;
      for (Symbol s : production.rhs) {
        if (terminal_[s] || !nullable_[s]) {
          all_nullable = false;
          break;
        }
      }
      if (all_nullable) {
        nullable_[production.lhs] = true;
        changed = true;
      }
    }
  }
}

std::optional<Grammar::Symbol> Grammar::symbol(std::string_view name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Grammar default_grammar() {
  Grammar g;
  for (std::size_t i = 0; i < kPhraseLabelCount; ++i)
    g.add_terminal(std::string(kPhraseLabelNames[i]));
  for (const char* nt : {"S", "SS", "CS", "DC_N", "DC_A", "DC_S", "IC",
                         "PhraseSeq"})
    g.add_nonterminal(nt);

  g.add_production("S", {"SS"});
  g.add_production("S", {"CS"});
  g.add_production("SS", {"IC"});
  // The in-clause subject reading is listed first; the sentence-level
  // subject slot exists only before a noun dependent clause.
  g.add_production("CS", {"DC_N", "IC"});
  g.add_production("CS", {"Subj", "DC_N", "IC"});
  g.add_production("CS", {"DC_A", "IC"});
  g.add_production("CS", {"DC_S", "IC"});
  g.add_production("DC_N", {"IC", "CCP"});
  g.add_production("DC_A", {"IC", "CCA"});
  g.add_production("DC_S", {"IC", "CCS"});
  g.add_production("IC", {"PhraseSeq", "Active"});
  g.add_production("PhraseSeq", {});
  for (const std::string& phrase : clause_phrase_names())
    g.add_production("PhraseSeq", {phrase, "PhraseSeq"});

  g.set_start("S");
  g.finalize();
  return g;
}

}  // namespace funtag
