#ifndef FUNTAG_COMMANDS_HPP_
#define FUNTAG_COMMANDS_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "funtag/corpus.hpp"
#include "funtag/eval.hpp"
#include "funtag/tbl.hpp"
#include "funtag/tree.hpp"

namespace funtag {

// Flag bundle shared by the subcommands. Everything is explicit; there is no
// environment or random state, so identical inputs give identical bytes.
struct CliConfig {
  int min_gain = 1;
  std::vector<TriggerKind> templates = all_trigger_kinds();
  ClassifyConfig classify;
  bool forest = false;
  bool keep_going = false;
  bool verbose = false;
  bool infer_types = false;
  bool tsv = false;  // parse: emit "corpus-line<TAB>tree" for eval input
};

// One evaluated sentence: its annotation and, when present, its tree.
struct EvalEntry {
  AnnotatedSentence sentence;
  std::optional<ParseNode> tree;
};

// Reads an eval file: per line "corpus-line<TAB>tree-bracket-text", where the
// tree cell may be "-" for a missing parse; '%' comments and blank lines are
// skipped.
std::vector<EvalEntry> read_eval_file(const std::string& path);

// Derives the report label from a parse shape (Simple, Complex_*DC, or
// ComplicatedComplex for a sentence-level subject before a noun DC).
std::string infer_sentence_type(const ParseNode& tree);

// Exit status 0 on success, 1 on any failure. Diagnostics go to err; data
// goes to out or to the named output file ("-" selects out).
int cmd_validate(const std::string& corpus_path, std::ostream& err);
int cmd_train(const std::string& corpus_path, const std::string& model_out,
              const std::string& rules_out, const CliConfig& config,
              std::ostream& err);
int cmd_tag(const std::string& model_path, const std::string& rules_path,
            const std::string& input_path, const std::string& output_path,
            const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_parse(const std::string& input_path, const std::string& output_path,
              const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_eval(const std::string& system_path, const std::string& gold_path,
             const std::string& types_path, const CliConfig& config,
             std::ostream& out, std::ostream& err);
int cmd_confusion(const std::string& system_path, const std::string& gold_path,
                  std::ostream& out, std::ostream& err);

}  // namespace funtag

#endif  // FUNTAG_COMMANDS_HPP_
