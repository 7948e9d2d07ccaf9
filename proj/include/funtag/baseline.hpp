#ifndef FUNTAG_BASELINE_HPP_
#define FUNTAG_BASELINE_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>

#include "funtag/corpus.hpp"

namespace funtag {

// Chunk-local features the Bayes model conditions on.
enum class FeatureKind : std::uint8_t { ChunkType, Surface, PosSeq };

inline constexpr std::size_t kFeatureKindCount = 3;

std::string_view to_string(FeatureKind kind);

struct Features {
  std::array<std::string, kFeatureKindCount> values;

  const std::string& operator[](FeatureKind kind) const {
    return values[static_cast<std::size_t>(kind)];
  }
};

// CHUNK_TYPE = chunk type name, SURFACE = concatenated token surfaces,
// POS_SEQ = '+'-joined pos.category strings in token order.
Features extract_features(const Chunk& chunk);

// Naive Bayes over function tags with add-one smoothing. Scores are log
// posteriors up to the shared evidence term:
//
//   score(t) = log P(t) + sum_k log ((count(k,v,t)+1) / (count(t)+|V_k|+1))
//
// Only tags observed in training are scored; argmax ties resolve to the
// earlier tag in inventory order.
class BaselineModel {
 public:
  using CountRow = std::array<std::uint32_t, kFunctionTagCount>;

  static BaselineModel train(const Corpus& corpus);

  // Log-posterior per tag; unobserved tags get -infinity.
  std::array<double, kFunctionTagCount> posterior(const Chunk& chunk) const;

  FunctionTag best_tag(const Chunk& chunk) const;

  // Retags every chunk: SFC chunks get Null structurally, the rest get the
  // argmax posterior. Existing tags on the input are ignored.
  AnnotatedSentence tag_sentence(const AnnotatedSentence& sentence) const;

  void save(std::ostream& out) const;
  static BaselineModel load(std::istream& in);

  std::uint64_t total() const { return total_; }
  std::uint64_t tag_count(FunctionTag tag) const {
    return tag_counts_[static_cast<std::size_t>(tag)];
  }
  std::size_t vocab_size(FeatureKind kind) const {
    return feature_counts_[static_cast<std::size_t>(kind)].size();
  }
  std::uint32_t feature_count(FeatureKind kind, const std::string& value,
                              FunctionTag tag) const;

 private:
  void add_chunk(const Chunk& chunk);

  std::array<std::uint64_t, kFunctionTagCount> tag_counts_{};
  std::uint64_t total_ = 0;
  std::array<std::unordered_map<std::string, CountRow>, kFeatureKindCount>
      feature_counts_;
};

}  // namespace funtag

#endif  // FUNTAG_BASELINE_HPP_
