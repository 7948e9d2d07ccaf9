// funtag — function tagging and clause-level grammatical relations for
// chunked Myanmar text: corpus validation, Bayes + transformation-rule
// training, tagging, parsing, and scored evaluation.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "funtag/commands.hpp"

namespace {

bool parse_templates(const std::string& spec,
                     std::vector<funtag::TriggerKind>& kinds) {
  kinds.clear();
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    std::string name = spec.substr(
        start, comma == std::string::npos ? spec.size() - start : comma - start);
    auto kind = funtag::trigger_kind_from(name);
    if (!kind) return false;
    kinds.push_back(*kind);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return !kinds.empty();
}

bool parse_threshold(const std::string& text, funtag::Rational& value) {
  auto parsed = funtag::Rational::from_decimal(text);
  if (!parsed || *parsed <= funtag::Rational(0) ||
      *parsed > funtag::Rational(1))
    return false;
  value = *parsed;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Function tagging and grammatical relations for chunked "
               "Myanmar sentences"};
  app.require_subcommand(1);

  funtag::CliConfig config;
  std::string templates_spec;
  std::string tag_threshold_spec;
  std::string f1_low_spec;

  auto* validate = app.add_subcommand("validate", "Check a corpus file");
  std::string validate_corpus;
  validate->add_option("corpus", validate_corpus, "Corpus file")->required();

  auto* train = app.add_subcommand(
      "train", "Train the Bayes baseline and learn transformation rules");
  std::string train_corpus, model_out, rules_out;
  train->add_option("corpus", train_corpus, "Training corpus")->required();
  train->add_option("model", model_out, "Model file to write")->required();
  train->add_option("rules", rules_out, "Rule file to write")->required();
  train->add_option("--min-gain", config.min_gain,
                    "Minimum net gain for accepting a rule");
  train->add_option("--templates", templates_spec,
                    "Comma-separated trigger kinds");

  auto* tag = app.add_subcommand("tag", "Tag chunked sentences");
  std::string tag_model, tag_rules, tag_input, tag_output;
  tag->add_option("model", tag_model, "Model file")->required();
  tag->add_option("rules", tag_rules, "Rule file")->required();
  tag->add_option("input", tag_input, "Chunked input file")->required();
  tag->add_option("output", tag_output, "Tagged output file, '-' for stdout")
      ->required();
  tag->add_flag("--verbose", config.verbose,
                "Log baseline and post-rule tags to stderr");

  auto* parse = app.add_subcommand("parse", "Parse tagged sentences");
  std::string parse_input, parse_output;
  parse->add_option("input", parse_input, "Tagged corpus file")->required();
  parse->add_option("output", parse_output, "Output file, '-' for stdout")
      ->required();
  parse->add_flag("--forest", config.forest, "Print every derivation");
  parse->add_flag("--keep-going", config.keep_going,
                  "Exit 0 even when sentences fail to parse");
  parse->add_flag("--tsv", config.tsv,
                  "Emit 'corpus-line<TAB>tree' lines for eval input");

  auto* eval = app.add_subcommand("eval", "Score system output against gold");
  std::string eval_system, eval_gold, eval_types;
  eval->add_option("system", eval_system, "System TSV file")->required();
  eval->add_option("gold", eval_gold, "Gold TSV file")->required();
  eval->add_option("types", eval_types, "Sentence-type sidecar file");
  eval->add_flag("--infer-types", config.infer_types,
                 "Derive types from the gold parse shapes");
  eval->add_option("--c2-tag-threshold", tag_threshold_spec,
                   "Tag accuracy floor for criterion 2 (default 0.75)");
  eval->add_option("--c2-f1-low", f1_low_spec,
                   "Bracket F1 floor for criterion 2 (default 0.5)");

  auto* confusion =
      app.add_subcommand("confusion", "Tag confusion between two corpora");
  std::string confusion_system, confusion_gold;
  confusion->add_option("system", confusion_system, "System corpus")
      ->required();
  confusion->add_option("gold", confusion_gold, "Gold corpus")->required();

  CLI11_PARSE(app, argc, argv);

  if (!templates_spec.empty() &&
      !parse_templates(templates_spec, config.templates)) {
    std::cerr << "error: bad --templates\n";
    return 2;
  }
  if (!tag_threshold_spec.empty() &&
      !parse_threshold(tag_threshold_spec, config.classify.c2_tag_threshold)) {
    std::cerr << "error: bad --c2-tag-threshold\n";
    return 2;
  }
  if (!f1_low_spec.empty() &&
      !parse_threshold(f1_low_spec, config.classify.c2_f1_low)) {
    std::cerr << "error: bad --c2-f1-low\n";
    return 2;
  }
  if (config.min_gain < 1) {
    std::cerr << "error: --min-gain must be positive\n";
    return 2;
  }

  if (validate->parsed())
    return funtag::cmd_validate(validate_corpus, std::cerr);
  if (train->parsed())
    return funtag::cmd_train(train_corpus, model_out, rules_out, config,
                             std::cerr);
  if (tag->parsed())
    return funtag::cmd_tag(tag_model, tag_rules, tag_input, tag_output, config,
                           std::cout, std::cerr);
  if (parse->parsed())
    return funtag::cmd_parse(parse_input, parse_output, config, std::cout,
                             std::cerr);
  if (eval->parsed()) {
    if (!config.infer_types && eval_types.empty()) {
      std::cerr << "error: provide a types file or --infer-types\n";
      return 2;
    }
    return funtag::cmd_eval(eval_system, eval_gold, eval_types, config,
                            std::cout, std::cerr);
  }
  if (confusion->parsed())
    return funtag::cmd_confusion(confusion_system, confusion_gold, std::cout,
                                 std::cerr);
  return 2;
}
