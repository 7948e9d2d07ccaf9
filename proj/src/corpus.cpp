#include "funtag/corpus.hpp"

#include <cctype>
#include <fstream>

namespace funtag {

namespace {

constexpr std::string_view kSectionMark = "။";  // ။

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

// Scanner over one corpus line. All offsets are byte offsets into the
// original line, so error positions survive multi-byte text.
class LineScanner {
 public:
  LineScanner(std::string_view line, std::vector<Diagnostic>* warnings,
              bool require_tags)
      : line_(line), warnings_(warnings), require_tags_(require_tags) {}

  AnnotatedSentence parse() {
    AnnotatedSentence sentence;
    end_ = line_.size();
    skip_space();
    if (at_end()) throw CorpusError("empty sentence", pos_);

    std::size_t content_end = trimmed_end();
    if (ends_with_section_mark(content_end)) {
      sentence.terminal_mark = true;
      content_end -= kSectionMark.size();
      while (content_end > pos_ && is_space(line_[content_end - 1]))
        --content_end;
    }
    end_ = content_end;
    if (pos_ >= end_) throw CorpusError("empty sentence", pos_);

    while (true) {
      sentence.chunks.push_back(parse_chunk());
      skip_space();
      if (at_end()) break;
      if (line_[pos_] != '#')
        throw CorpusError("expected '#' between chunks", pos_);
      ++pos_;
      skip_space();
      if (at_end()) throw CorpusError("empty chunk after '#'", pos_);
    }
    if (require_tags_) validate_sentence(sentence);
    return sentence;
  }

 private:
  bool at_end() const { return pos_ >= end_; }

  void skip_space() {
    while (pos_ < end_ && is_space(line_[pos_])) ++pos_;
  }

  std::size_t trimmed_end() const {
    std::size_t e = line_.size();
    while (e > pos_ && is_space(line_[e - 1])) --e;
    return e;
  }

  bool ends_with_section_mark(std::size_t content_end) const {
    return content_end >= pos_ + kSectionMark.size() &&
           line_.substr(content_end - kSectionMark.size(), kSectionMark.size()) ==
               kSectionMark;
  }

  std::string_view read_name() {
    std::size_t start = pos_;
    while (pos_ < end_ && (std::isalnum(static_cast<unsigned char>(line_[pos_])) ||
                           line_[pos_] == '_'))
      ++pos_;
    return line_.substr(start, pos_ - start);
  }

  Chunk parse_chunk() {
    Chunk chunk;
    skip_space();
    std::size_t type_at = pos_;
    std::string_view type_name = read_name();
    auto type = chunk_type_from(type_name);
    if (!type)
      throw CorpusError("unknown chunk type " + std::string(type_name), type_at);
    chunk.type = *type;

    skip_space();
    if (!at_end() && line_[pos_] == '@') {
      ++pos_;
      skip_space();
      std::size_t tag_at = pos_;
      std::string_view tag_name = read_name();
      auto tag = function_tag_from(tag_name);
      if (!tag)
        throw CorpusError("unknown function tag " + std::string(tag_name),
                          tag_at);
      chunk.tag = *tag;
    } else if (require_tags_) {
      throw CorpusError("expected '@' and a function tag", pos_);
    } else {
      chunk.tag = FunctionTag::Null;  // placeholder for untagged input
    }

    skip_space();
    if (at_end() || line_[pos_] != '[')
      throw CorpusError("expected '[' to open the token list", pos_);
    ++pos_;
    skip_space();
    if (!at_end() && line_[pos_] == ']')
      throw CorpusError("empty token list", pos_);
    while (true) {
      skip_space();
      chunk.tokens.push_back(parse_token());
      skip_space();
      if (at_end()) throw CorpusError("unterminated token list", pos_);
      if (line_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (line_[pos_] == ']') {
        ++pos_;
        break;
      }
      throw CorpusError("expected ',' or ']' in token list", pos_);
    }
    return chunk;
  }

  Token parse_token() {
    Token token;
    std::size_t surface_at = pos_;
    while (pos_ < end_ && line_[pos_] != '/' && line_[pos_] != ']' &&
           line_[pos_] != ',')
      ++pos_;
    if (at_end() || line_[pos_] != '/')
      throw CorpusError("expected '/' after token surface", pos_);
    std::size_t surface_end = pos_;
    while (surface_end > surface_at && is_space(line_[surface_end - 1]))
      --surface_end;
    token.surface = std::string(line_.substr(surface_at, surface_end - surface_at));
    if (token.surface.empty())
      throw CorpusError("empty token list", surface_at);

    ++pos_;  // '/'
    std::size_t pos_at = pos_;
    while (pos_ < end_ && line_[pos_] != '.' && line_[pos_] != ']' &&
           line_[pos_] != ',')
      ++pos_;
    if (at_end() || line_[pos_] != '.')
      throw CorpusError("expected '.' after POS tag", pos_);
    std::string_view pos_name = line_.substr(pos_at, pos_ - pos_at);
    auto pos = pos_from(pos_name);
    if (!pos)
      throw CorpusError("unknown POS tag " + std::string(pos_name), pos_at);
    token.pos.pos = *pos;

    ++pos_;  // '.'
    std::size_t cat_at = pos_;
    while (pos_ < end_ && line_[pos_] != ']' && line_[pos_] != ',') ++pos_;
    std::size_t cat_end = pos_;
    while (cat_end > cat_at && is_space(line_[cat_end - 1])) --cat_end;
    token.pos.category = std::string(line_.substr(cat_at, cat_end - cat_at));
    if (token.pos.category.empty())
      throw CorpusError("empty POS category", cat_at);

    std::string qualified =
        std::string(to_string(token.pos.pos)) + "." + token.pos.category;
    if (warnings_ && !known_category(qualified))
      warnings_->push_back({0, cat_at, "unknown category " + qualified});
    return token;
  }

  std::string_view line_;
  std::vector<Diagnostic>* warnings_;
  bool require_tags_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
};

bool forbidden_in_surface(char c) {
  return c == '#' || c == '[' || c == ']' || c == '/' || c == ',';
}

}  // namespace

CorpusError::CorpusError(const std::string& message, std::size_t offset,
                         int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", offset " +
                                        std::to_string(offset) + ": " + message
                                  : "offset " + std::to_string(offset) + ": " +
                                        message),
      message_(message),
      offset_(offset),
      line_(line) {}

std::string Chunk::surface() const {
  std::string out;
  for (const Token& token : tokens) out += token.surface;
  return out;
}

AnnotatedSentence parse_corpus_line(std::string_view line,
                                    std::vector<Diagnostic>* warnings,
                                    bool require_tags) {
  return LineScanner(line, warnings, require_tags).parse();
}

void validate_sentence(const AnnotatedSentence& sentence) {
  if (sentence.chunks.empty()) throw CorpusError("sentence has no chunks", 0);
  for (std::size_t i = 0; i < sentence.chunks.size(); ++i) {
    const Chunk& chunk = sentence.chunks[i];
    if (chunk.tokens.empty()) throw CorpusError("empty token list", 0);
    for (const Token& token : chunk.tokens) {
      if (token.surface.empty()) throw CorpusError("empty token surface", 0);
      for (char c : token.surface) {
        if (forbidden_in_surface(c))
          throw CorpusError(std::string("token surface contains '") + c + "'",
                            0);
      }
      if (token.pos.category.empty())
        throw CorpusError("empty POS category", 0);
    }
    bool is_sfc = chunk.type == ChunkType::SFC;
    bool is_null = chunk.tag == FunctionTag::Null;
    if (is_sfc != is_null)
      throw CorpusError(is_sfc ? "SFC chunk must carry the Null tag"
                               : "Null tag is reserved for SFC chunks",
                        0);
    if (is_sfc && i + 1 != sentence.chunks.size())
      throw CorpusError("SFC chunk must be the final chunk", 0);
  }
}

std::string serialize_sentence(const AnnotatedSentence& sentence) {
  std::string out;
  for (std::size_t i = 0; i < sentence.chunks.size(); ++i) {
    if (i) out += '#';
    const Chunk& chunk = sentence.chunks[i];
    out += to_string(chunk.type);
    out += '@';
    out += to_string(chunk.tag);
    out += '[';
    for (std::size_t t = 0; t < chunk.tokens.size(); ++t) {
      if (t) out += ',';
      const Token& token = chunk.tokens[t];
      out += token.surface;
      out += '/';
      out += to_string(token.pos.pos);
      out += '.';
      out += token.pos.category;
    }
    out += ']';
  }
  if (sentence.terminal_mark) out += kSectionMark;
  return out;
}

Corpus load_corpus(const std::string& path, std::vector<Diagnostic>* warnings,
                   bool require_tags) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open " + path, 0);
  Corpus corpus;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view view = line;
    std::size_t first = 0;
    while (first < view.size() && is_space(view[first])) ++first;
    if (first == view.size() || view[first] == '%') continue;
    std::vector<Diagnostic> line_warnings;
    try {
      corpus.sentences.push_back(parse_corpus_line(
          line, warnings ? &line_warnings : nullptr, require_tags));
    } catch (const CorpusError& error) {
      throw CorpusError(error.message(), error.offset(), line_number);
    }
    corpus.line_numbers.push_back(line_number);
    if (warnings) {
      for (Diagnostic& diag : line_warnings) {
        diag.line = line_number;
        warnings->push_back(std::move(diag));
      }
    }
  }
  return corpus;
}

std::vector<FunctionTag> function_tag_sequence(const AnnotatedSentence& s,
                                               bool include_null) {
  std::vector<FunctionTag> tags;
  tags.reserve(s.chunks.size());
  for (const Chunk& chunk : s.chunks) {
    if (!include_null && chunk.tag == FunctionTag::Null) continue;
    tags.push_back(chunk.tag);
  }
  return tags;
}

std::vector<std::pair<std::string, FunctionTag>> word_tag_pairs(
    const AnnotatedSentence& s) {
  std::vector<std::pair<std::string, FunctionTag>> pairs;
  for (const Chunk& chunk : s.chunks) {
    for (const Token& token : chunk.tokens)
      pairs.emplace_back(token.surface, chunk.tag);
  }
  return pairs;
}

}  // namespace funtag
