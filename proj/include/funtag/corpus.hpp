#ifndef FUNTAG_CORPUS_HPP_
#define FUNTAG_CORPUS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "funtag/tagset.hpp"

namespace funtag {

struct PosTag {
  Pos pos = Pos::n;
  std::string category;  // free-form suffix after the dot, never empty

  friend bool operator==(const PosTag&, const PosTag&) = default;
};

struct Token {
  std::string surface;
  PosTag pos;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Chunk {
  ChunkType type = ChunkType::NC;
  FunctionTag tag = FunctionTag::Null;
  std::vector<Token> tokens;

  // Concatenated token surfaces; the lexical identity of the chunk.
  std::string surface() const;

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

struct AnnotatedSentence {
  std::vector<Chunk> chunks;
  bool terminal_mark = false;  // trailing ။ present

  friend bool operator==(const AnnotatedSentence&,
                         const AnnotatedSentence&) = default;
};

struct Corpus {
  std::vector<AnnotatedSentence> sentences;
  std::vector<int> line_numbers;  // 1-based source line per sentence
};

// Raised on malformed corpus input. offset is the byte offset into the line
// where the problem was detected; line is 1-based when known, 0 otherwise.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(const std::string& message, std::size_t offset, int line = 0);

  const std::string& message() const { return message_; }
  std::size_t offset() const { return offset_; }
  int line() const { return line_; }

 private:
  std::string message_;
  std::size_t offset_;
  int line_;
};

// Non-fatal findings (e.g. categories outside the known list).
struct Diagnostic {
  int line = 0;
  std::size_t offset = 0;
  std::string message;
};

// Parses one corpus line:
//
//   CHUNKTYPE@FTAG[tok/pos.category,tok/pos.category]#...#CHUNKTYPE@FTAG[...]။
//
// Whitespace around separators is ignored; the trailing ။ is optional and
// recorded as terminal_mark. "verb" is normalized to "v". With
// require_tags=false, the "@FTAG" part may be omitted (chunks then carry Null
// placeholders and the SFC/Null pairing is not enforced); that form carries
// chunk boundaries into the tagger.
AnnotatedSentence parse_corpus_line(std::string_view line,
                                    std::vector<Diagnostic>* warnings = nullptr,
                                    bool require_tags = true);

// Canonical inverse of parse_corpus_line: no spaces, '#'-joined chunks,
// ။ appended iff terminal_mark.
std::string serialize_sentence(const AnnotatedSentence& sentence);

// Checks the structural invariants (non-empty chunks and tokens, token
// surface alphabet, SFC ⇔ Null, at most one SFC and only in final position).
// Throws CorpusError on violation.
void validate_sentence(const AnnotatedSentence& sentence);

// Reads a corpus file: one sentence per line, blank lines and '%'-prefixed
// comment lines skipped. Fails on the first malformed line, citing it.
Corpus load_corpus(const std::string& path,
                   std::vector<Diagnostic>* warnings = nullptr,
                   bool require_tags = true);

// One tag per chunk in order; include_null=false drops Null-tagged chunks.
std::vector<FunctionTag> function_tag_sequence(const AnnotatedSentence& s,
                                               bool include_null);

// Every token paired with its enclosing chunk's tag, in reading order.
std::vector<std::pair<std::string, FunctionTag>> word_tag_pairs(
    const AnnotatedSentence& s);

}  // namespace funtag

#endif  // FUNTAG_CORPUS_HPP_
