#ifndef FUNTAG_PARSER_HPP_
#define FUNTAG_PARSER_HPP_

#include <vector>

#include "funtag/grammar.hpp"
#include "funtag/tree.hpp"

namespace funtag {

// Chart-parses the phrase sequence and enumerates every derivation. The
// forest comes back in canonical order:
//   1. derivations with fewer clauses containing more than one Subj first,
//   2. then the reading keeping the leading Subj inside the dependent
//      clause before the sentence-level attachment,
//   3. then a structural comparison as a total tie-break.
// No derivation yields an empty forest, not an error. The helper
// PhraseSeq nonterminal is spliced out, so clause nodes hold their phrase
// leaves directly.
std::vector<ParseNode> parse(const std::vector<Phrase>& phrases,
                             const Grammar& grammar);

// Recognition only; cheaper than building the forest.
bool recognizes(const std::vector<PhraseLabel>& labels,
                const Grammar& grammar);

// First tree of the canonical ordering; throws std::runtime_error("no parse")
// on an empty forest.
const ParseNode& select_canonical(const std::vector<ParseNode>& forest);

}  // namespace funtag

#endif  // FUNTAG_PARSER_HPP_
