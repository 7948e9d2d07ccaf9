#include "funtag/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace funtag {

namespace {

constexpr std::array<std::string_view, kFeatureKindCount> kFeatureKindNames = {
    "CHUNK_TYPE", "SURFACE", "POS_SEQ"};

std::optional<FeatureKind> feature_kind_from(std::string_view name) {
  for (std::size_t i = 0; i < kFeatureKindNames.size(); ++i) {
    if (kFeatureKindNames[i] == name) return static_cast<FeatureKind>(i);
  }
  return std::nullopt;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

[[noreturn]] void model_error(int line, const std::string& what) {
  throw std::runtime_error("model line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::string_view to_string(FeatureKind kind) {
  return kFeatureKindNames[static_cast<std::size_t>(kind)];
}

Features extract_features(const Chunk& chunk) {
  Features features;
  features.values[0] = std::string(to_string(chunk.type));
  features.values[1] = chunk.surface();
  std::string pos_seq;
  for (std::size_t i = 0; i < chunk.tokens.size(); ++i) {
    if (i) pos_seq += '+';
    pos_seq += to_string(chunk.tokens[i].pos.pos);
    pos_seq += '.';
    pos_seq += chunk.tokens[i].pos.category;
  }
  features.values[2] = std::move(pos_seq);
  return features;
}

void BaselineModel::add_chunk(const Chunk& chunk) {
  Features features = extract_features(chunk);
  std::size_t tag = static_cast<std::size_t>(chunk.tag);
  ++tag_counts_[tag];
  ++total_;
  for (std::size_t k = 0; k < kFeatureKindCount; ++k)
    ++feature_counts_[k][features.values[k]][tag];
}

BaselineModel BaselineModel::train(const Corpus& corpus) {
  if (corpus.sentences.empty())
    throw std::invalid_argument("empty corpus");
  BaselineModel model;
  for (const AnnotatedSentence& sentence : corpus.sentences) {
    for (const Chunk& chunk : sentence.chunks) model.add_chunk(chunk);
  }
  return model;
}

std::uint32_t BaselineModel::feature_count(FeatureKind kind,
                                           const std::string& value,
                                           FunctionTag tag) const {
  const auto& table = feature_counts_[static_cast<std::size_t>(kind)];
  auto it = table.find(value);
  if (it == table.end()) return 0;
  return it->second[static_cast<std::size_t>(tag)];
}

std::array<double, kFunctionTagCount> BaselineModel::posterior(
    const Chunk& chunk) const {
  if (total_ == 0) throw std::logic_error("untrained model");
  Features features = extract_features(chunk);
  std::array<double, kFunctionTagCount> scores;
  scores.fill(-std::numeric_limits<double>::infinity());
  for (std::size_t t = 0; t < kFunctionTagCount; ++t) {
    if (tag_counts_[t] == 0) continue;
    double score = std::log(static_cast<double>(tag_counts_[t]) /
                            static_cast<double>(total_));
    for (std::size_t k = 0; k < kFeatureKindCount; ++k) {
      const auto& table = feature_counts_[k];
      std::uint32_t count = 0;
      auto it = table.find(features.values[k]);
      if (it != table.end()) count = it->second[t];
      score += std::log(static_cast<double>(count + 1) /
                        static_cast<double>(tag_counts_[t] + table.size() + 1));
    }
    scores[t] = score;
  }
  return scores;
}

FunctionTag BaselineModel::best_tag(const Chunk& chunk) const {
  std::array<double, kFunctionTagCount> scores = posterior(chunk);
  std::size_t best = 0;
  for (std::size_t t = 1; t < kFunctionTagCount; ++t) {
    if (scores[t] > scores[best]) best = t;  // ties keep the earlier tag
  }
  return static_cast<FunctionTag>(best);
}

AnnotatedSentence BaselineModel::tag_sentence(
    const AnnotatedSentence& sentence) const {
  AnnotatedSentence tagged = sentence;
  for (Chunk& chunk : tagged.chunks) {
    chunk.tag = chunk.type == ChunkType::SFC ? FunctionTag::Null
                                             : best_tag(chunk);
  }
  return tagged;
}

void BaselineModel::save(std::ostream& out) const {
  out << "FUNTAG_MODEL\t1\n";
  out << "TOTAL\t" << total_ << "\n";
  for (std::size_t k = 0; k < kFeatureKindCount; ++k) {
    out << "VOCAB\t" << kFeatureKindNames[k] << "\t" << feature_counts_[k].size()
        << "\n";
  }
  for (std::size_t t = 0; t < kFunctionTagCount; ++t) {
    if (tag_counts_[t] == 0) continue;
    out << "TAG\t" << to_string(static_cast<FunctionTag>(t)) << "\t"
        << tag_counts_[t] << "\n";
  }
  for (std::size_t k = 0; k < kFeatureKindCount; ++k) {
    std::vector<const std::string*> values;
    values.reserve(feature_counts_[k].size());
    for (const auto& [value, row] : feature_counts_[k])
      values.push_back(&value);
    std::sort(values.begin(), values.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    for (const std::string* value : values) {
      const CountRow& row = feature_counts_[k].at(*value);
      for (std::size_t t = 0; t < kFunctionTagCount; ++t) {
        if (row[t] == 0) continue;
        out << "COUNT\t" << kFeatureKindNames[k] << "\t" << *value << "\t"
            << to_string(static_cast<FunctionTag>(t)) << "\t" << row[t] << "\n";
      }
    }
  }
}

BaselineModel BaselineModel::load(std::istream& in) {
  BaselineModel model;
  std::string line;
  int line_number = 0;
  std::array<std::size_t, kFeatureKindCount> declared_vocab{};
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::vector<std::string> fields = split_tabs(line);
    const std::string& kind = fields[0];
    if (kind == "FUNTAG_MODEL") {
      if (fields.size() != 2 || fields[1] != "1")
        model_error(line_number, "unsupported model version");
      header_seen = true;
    } else if (kind == "TOTAL") {
      if (fields.size() != 2) model_error(line_number, "malformed TOTAL");
      model.total_ = std::stoull(fields[1]);
    } else if (kind == "VOCAB") {
      if (fields.size() != 3) model_error(line_number, "malformed VOCAB");
      auto feature = feature_kind_from(fields[1]);
      if (!feature) model_error(line_number, "unknown feature kind " + fields[1]);
      declared_vocab[static_cast<std::size_t>(*feature)] = std::stoull(fields[2]);
    } else if (kind == "TAG") {
      if (fields.size() != 3) model_error(line_number, "malformed TAG");
      auto tag = function_tag_from(fields[1]);
      if (!tag) model_error(line_number, "unknown tag " + fields[1]);
      model.tag_counts_[static_cast<std::size_t>(*tag)] = std::stoull(fields[2]);
    } else if (kind == "COUNT") {
      if (fields.size() != 5) model_error(line_number, "malformed COUNT");
      auto feature = feature_kind_from(fields[1]);
      if (!feature) model_error(line_number, "unknown feature kind " + fields[1]);
      auto tag = function_tag_from(fields[3]);
      if (!tag) model_error(line_number, "unknown tag " + fields[3]);
      model.feature_counts_[static_cast<std::size_t>(*feature)][fields[2]]
                           [static_cast<std::size_t>(*tag)] =
          static_cast<std::uint32_t>(std::stoul(fields[4]));
    } else {
      model_error(line_number, "unknown record " + kind);
    }
  }
  if (!header_seen) throw std::runtime_error("not a model file");
  for (std::size_t k = 0; k < kFeatureKindCount; ++k) {
    if (declared_vocab[k] != model.feature_counts_[k].size())
      throw std::runtime_error("model vocab size mismatch for " +
                               std::string(kFeatureKindNames[k]));
  }
  return model;
}

}  // namespace funtag
