#ifndef FUNTAG_GRAMMAR_HPP_
#define FUNTAG_GRAMMAR_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "funtag/tagset.hpp"

namespace funtag {

// Labels of folded phrases: the clause-level terminal alphabet.
enum class PhraseLabel : std::uint8_t {
  Subj,
  Obj,
  Iobj,
  Pla,
  Tim,
  Ext,
  Sim,
  Com,
  Own,
  Use,
  Cau,
  Aim,
  PcomplS,
  PcomplO,
  Ada,
  Active,
  CCS,
  CCP,
  CCA,
  CCC,
  CCM,
};

inline constexpr std::size_t kPhraseLabelCount = 21;

std::string_view to_string(PhraseLabel label);
std::optional<PhraseLabel> phrase_label_from(std::string_view name);

struct Phrase {
  PhraseLabel label;
  std::string surface;

  friend bool operator==(const Phrase&, const Phrase&) = default;
};

class FoldError : public std::runtime_error {
 public:
  FoldError(const std::string& message, std::size_t position)
      : std::runtime_error("position " + std::to_string(position) + ": " +
                           message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Folds each P-head tag with its required following postpositional-marker
// tag into a bare phrase label with concatenated surface; bare tags pass
// through. Null tags must already be stripped. Throws FoldError when a head
// lacks its marker or a marker has no head.
std::vector<Phrase> fold_phrases(
    const std::vector<std::pair<FunctionTag, std::string>>& tagged);

// Context-free grammar over interned symbols. Terminals and nonterminals
// share one id space; productions are kept in insertion order, which defines
// the production-index order used by the parser.
class Grammar {
 public:
  using Symbol = int;

  struct Production {
    Symbol lhs;
    std::vector<Symbol> rhs;
  };

  Symbol add_terminal(const std::string& name);
  Symbol add_nonterminal(const std::string& name);

  // All names must already be declared; throws std::invalid_argument on an
  // unknown reference or a terminal on the left side.
  void add_production(const std::string& lhs,
                      const std::vector<std::string>& rhs);

  void set_start(const std::string& name);

  // Computes nullability; must be called after the last production.
  void finalize();

  std::optional<Symbol> symbol(std::string_view name) const;
  const std::string& name(Symbol s) const { return names_[s]; }
  bool is_terminal(Symbol s) const { return terminal_[s]; }
  bool nullable(Symbol s) const { return nullable_[s]; }
  Symbol start() const { return start_; }
  std::size_t symbol_count() const { return names_.size(); }
  const std::vector<Production>& productions() const { return productions_; }
  const std::vector<int>& productions_of(Symbol s) const {
    return productions_of_[s];
  }

 private:
  Symbol intern(const std::string& name, bool terminal);

  std::vector<std::string> names_;
  std::map<std::string, Symbol, std::less<>> ids_;
  std::vector<bool> terminal_;
  std::vector<bool> nullable_;
  std::vector<Production> productions_;
  std::vector<std::vector<int>> productions_of_;
  Symbol start_ = -1;
};

// The clause grammar: a sentence is an independent clause, optionally
// preceded by one dependent clause (an IC plus its clause marker), with a
// sentence-level subject slot for the pattern where a noun dependent clause
// splits the main clause's subject from its verb. Clauses are any phrases
// followed by the verb phrase.
//
//   S   -> SS | CS
//   SS  -> IC
//   CS  -> DC_N IC | Subj DC_N IC | DC_A IC | DC_S IC
//   DC_N -> IC CCP      DC_A -> IC CCA      DC_S -> IC CCS
//   IC  -> PhraseSeq Active
//   PhraseSeq -> (empty) | Phrase PhraseSeq   for each non-marker phrase
Grammar default_grammar();

}  // namespace funtag

#endif  // FUNTAG_GRAMMAR_HPP_
