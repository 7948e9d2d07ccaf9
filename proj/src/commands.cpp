#include "funtag/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "funtag/baseline.hpp"
#include "funtag/grammar.hpp"
#include "funtag/parser.hpp"

namespace funtag {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes data either to the named file or, for "-", to the fallback stream.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback)
      : fallback_(fallback) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open " + path);
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }
  bool is_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

std::vector<std::pair<FunctionTag, std::string>> content_chunks(
    const AnnotatedSentence& sentence) {
  std::vector<std::pair<FunctionTag, std::string>> tagged;
  for (const Chunk& chunk : sentence.chunks) {
    if (chunk.tag == FunctionTag::Null) continue;
    tagged.emplace_back(chunk.tag, chunk.surface());
  }
  return tagged;
}

std::string display_line(const AnnotatedSentence& sentence) {
  std::string line;
  for (const auto& [word, tag] : word_tag_pairs(sentence)) {
    if (!line.empty()) line += ' ';
    line += word;
    line += '#';
    line += to_string(tag);
  }
  return line;
}

std::vector<std::string> read_label_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> labels;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '%') continue;
    labels.push_back(line);
  }
  return labels;
}

}  // namespace

std::vector<EvalEntry> read_eval_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<EvalEntry> entries;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    while (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '%') continue;
    std::size_t tab = line.find('\t');
    EvalEntry entry;
    try {
      entry.sentence =
          parse_corpus_line(tab == std::string::npos ? line
                                                     : line.substr(0, tab));
      if (tab != std::string::npos) {
        std::string tree_text = line.substr(tab + 1);
        std::size_t begin = tree_text.find_first_not_of(" \t");
        if (begin != std::string::npos) tree_text = tree_text.substr(begin);
        while (!tree_text.empty() &&
               (tree_text.back() == ' ' || tree_text.back() == '\t'))
          tree_text.pop_back();
        if (!tree_text.empty() && tree_text != "-")
          entry.tree = read_tree(tree_text);
      }
    } catch (const std::exception& error) {
      throw std::runtime_error(path + " line " + std::to_string(line_number) +
                               ": " + error.what());
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::string infer_sentence_type(const ParseNode& tree) {
  if (tree.children.size() == 1) {
    const ParseNode& clause = tree.children.front();
    if (clause.label == "SS") return "Simple";
    if (clause.label == "CS" && !clause.children.empty()) {
      const ParseNode& first = clause.children.front();
      if (first.is_leaf() && first.label == "Subj") return "ComplicatedComplex";
      if (first.label == "DC_N") return "Complex_NounDC";
      if (first.label == "DC_A") return "Complex_AdjDC";
      if (first.label == "DC_S") return "Complex_AdvDC";
    }
  }
  return "Other";
}

int cmd_validate(const std::string& corpus_path, std::ostream& err) {
  std::vector<Diagnostic> warnings;
  Corpus corpus;
  try {
    corpus = load_corpus(corpus_path, &warnings);
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return 1;
  }
  for (const Diagnostic& warning : warnings) {
    err << "warning: line " << warning.line << ", offset " << warning.offset
        << ": " << warning.message << "\n";
  }
  if (corpus.sentences.empty()) {
    err << "error: empty corpus\n";
    return 1;
  }
  return 0;
}

int cmd_train(const std::string& corpus_path, const std::string& model_out,
              const std::string& rules_out, const CliConfig& config,
              std::ostream& err) {
  try {
    Corpus corpus = load_corpus(corpus_path);
    if (corpus.sentences.empty()) {
      err << "error: empty corpus\n";
      return 1;
    }
    BaselineModel model = BaselineModel::train(corpus);

    std::vector<std::pair<TransformationRule, int>> log;
    std::vector<TransformationRule> rules = learn(
        corpus,
        [&model](const AnnotatedSentence& sentence) {
          return function_tag_sequence(model.tag_sentence(sentence), true);
        },
        config.templates, config.min_gain, &log);
    for (const auto& [rule, gain] : log) {
      std::string line = serialize_rules({rule});
      if (!line.empty() && line.back() == '\n') line.pop_back();
      err << "accepted " << line << "  net gain " << gain << "\n";
    }

    std::ofstream model_file(model_out, std::ios::binary);
    if (!model_file) throw std::runtime_error("cannot open " + model_out);
    model.save(model_file);
    std::ofstream rules_file(rules_out, std::ios::binary);
    if (!rules_file) throw std::runtime_error("cannot open " + rules_out);
    rules_file << serialize_rules(rules);
    return 0;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return 1;
  }
}

int cmd_tag(const std::string& model_path, const std::string& rules_path,
            const std::string& input_path, const std::string& output_path,
            const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream model_file(model_path);
    if (!model_file) throw std::runtime_error("cannot open " + model_path);
    BaselineModel model = BaselineModel::load(model_file);
    std::vector<TransformationRule> rules = parse_rules(read_file(rules_path));
    Corpus corpus = load_corpus(input_path, nullptr, /*require_tags=*/false);

    OutputTarget target(output_path, out);
    for (const AnnotatedSentence& sentence : corpus.sentences) {
      AnnotatedSentence tagged = model.tag_sentence(sentence);
      TaggingState baseline_state = make_state(tagged);
      TaggingState final_state = apply_rules(rules, baseline_state);
      for (std::size_t i = 0; i < tagged.chunks.size(); ++i)
        tagged.chunks[i].tag = final_state.tags[i];
      if (config.verbose) {
        err << "baseline:";
        for (FunctionTag tag : baseline_state.tags) err << " " << to_string(tag);
        err << "\nfinal   :";
        for (FunctionTag tag : final_state.tags) err << " " << to_string(tag);
        err << "\n";
      }
      target.stream() << serialize_sentence(tagged) << "\n";
      if (target.is_file()) out << display_line(tagged) << "\n";
    }
    return 0;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return 1;
  }
}

int cmd_parse(const std::string& input_path, const std::string& output_path,
              const CliConfig& config, std::ostream& out, std::ostream& err) {
  Corpus corpus;
  try {
    corpus = load_corpus(input_path);
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return 1;
  }
  const Grammar grammar = default_grammar();
  bool any_failure = false;
  try {
    OutputTarget target(output_path, out);
    for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
      const AnnotatedSentence& sentence = corpus.sentences[i];
      std::string failure;
      std::vector<ParseNode> forest;
      try {
        std::vector<Phrase> phrases = fold_phrases(content_chunks(sentence));
        forest = parse(phrases, grammar);
        if (forest.empty()) failure = "no parse";
      } catch (const std::exception& error) {
        failure = std::string("no parse: ") + error.what();
      }
      if (!failure.empty()) {
        any_failure = true;
        err << "sentence " << corpus.line_numbers[i] << ": " << failure << "\n";
        if (config.tsv)
          target.stream() << serialize_sentence(sentence) << "\t-\n";
        else
          target.stream() << failure << "\n";
        continue;
      }
      if (config.tsv) {
        target.stream() << serialize_sentence(sentence) << "\t"
                        << render_tree(forest.front()) << "\n";
        continue;
      }
      if (config.forest) {
        for (const ParseNode& tree : forest)
          target.stream() << render_tree(tree) << "\n";
      } else {
        target.stream() << render_tree(forest.front()) << "\n";
      }
      target.stream() << relations_line(forest.front()) << "\n";
    }
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return 1;
  }
  return any_failure && !config.keep_going ? 1 : 0;
}

int cmd_eval(const std::string& system_path, const std::string& gold_path,
             const std::string& types_path, const CliConfig& config,
             std::ostream& out, std::ostream& err) {
  try {
    std::vector<EvalEntry> system = read_eval_file(system_path);
    std::vector<EvalEntry> gold = read_eval_file(gold_path);
    if (system.size() != gold.size())
      throw std::runtime_error("system and gold sentence counts differ (" +
                               std::to_string(system.size()) + " vs " +
                               std::to_string(gold.size()) + ")");

    std::vector<std::string> types;
    if (config.infer_types) {
      for (const EvalEntry& entry : gold) {
        if (!entry.tree)
          throw std::runtime_error("cannot infer a type without a gold tree");
        types.push_back(infer_sentence_type(*entry.tree));
      }
    } else {
      types = read_label_lines(types_path);
      if (types.size() != gold.size())
        throw std::runtime_error("types file has " +
                                 std::to_string(types.size()) +
                                 " labels for " + std::to_string(gold.size()) +
                                 " sentences");
    }

    std::vector<std::pair<std::string, SentenceScore>> scored;
    std::vector<std::pair<FunctionTag, FunctionTag>> tag_pairs;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      if (!gold[i].tree)
        throw std::runtime_error("gold sentence " + std::to_string(i + 1) +
                                 " has no tree");
      std::vector<FunctionTag> system_tags =
          function_tag_sequence(system[i].sentence, false);
      std::vector<FunctionTag> gold_tags =
          function_tag_sequence(gold[i].sentence, false);
      if (system_tags.size() != gold_tags.size())
        throw std::runtime_error("sentence " + std::to_string(i + 1) +
                                 ": tag lists are misaligned");
      const ParseNode* system_tree =
          system[i].tree ? &*system[i].tree : nullptr;
      scored.emplace_back(types[i],
                          classify(system_tags, system_tree, gold_tags,
                                   *gold[i].tree, config.classify));
      for (std::size_t t = 0; t < gold_tags.size(); ++t)
        tag_pairs.emplace_back(gold_tags[t], system_tags[t]);
    }

    out << format_report_tsv(score_report(scored));
    out << "\n";
    out << format_confusion_tsv(confusion(tag_pairs));
    return 0;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return 1;
  }
}

int cmd_confusion(const std::string& system_path, const std::string& gold_path,
                  std::ostream& out, std::ostream& err) {
  try {
    Corpus system = load_corpus(system_path);
    Corpus gold = load_corpus(gold_path);
    if (system.sentences.size() != gold.sentences.size())
      throw std::runtime_error("system and gold sentence counts differ");
    std::vector<std::pair<FunctionTag, FunctionTag>> pairs;
    for (std::size_t i = 0; i < gold.sentences.size(); ++i) {
      std::vector<FunctionTag> system_tags =
          function_tag_sequence(system.sentences[i], true);
      std::vector<FunctionTag> gold_tags =
          function_tag_sequence(gold.sentences[i], true);
      if (system_tags.size() != gold_tags.size())
        throw std::runtime_error("sentence " + std::to_string(i + 1) +
                                 ": tag lists are misaligned");
      for (std::size_t t = 0; t < gold_tags.size(); ++t)
        pairs.emplace_back(gold_tags[t], system_tags[t]);
    }
    out << format_confusion_tsv(confusion(pairs));
    return 0;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return 1;
  }
}

}  // namespace funtag
