#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "funtag/parser.hpp"
#include "support.hpp"

using namespace funtag;
using FT = FunctionTag;
using PL = PhraseLabel;

namespace {

std::vector<Phrase> phrases_of(const std::vector<PL>& labels) {
  std::vector<Phrase> phrases;
  for (std::size_t i = 0; i < labels.size(); ++i)
    phrases.push_back({labels[i], "w" + std::to_string(i)});
  return phrases;
}

// Random sentence in the clause language, built directly from the sentence
// patterns rather than from the Grammar object.
std::vector<PL> sample_accepted(std::mt19937& rng) {
  static const std::vector<PL> clause_phrases = {
      PL::Subj, PL::Obj,  PL::Iobj, PL::Pla, PL::Tim,
      PL::Ext,  PL::Sim,  PL::Com,  PL::Own, PL::Use,
      PL::Cau,  PL::Aim,  PL::PcomplS, PL::PcomplO, PL::Ada};
  std::uniform_int_distribution<int> phrase_count(0, 4);
  std::uniform_int_distribution<std::size_t> phrase_pick(
      0, clause_phrases.size() - 1);
  std::uniform_int_distribution<int> shape(0, 4);

  auto clause = [&](std::vector<PL>& out) {
    int n = phrase_count(rng);
    for (int i = 0; i < n; ++i) out.push_back(clause_phrases[phrase_pick(rng)]);
    out.push_back(PL::Active);
  };

  std::vector<PL> sentence;
  switch (shape(rng)) {
    case 0:
      clause(sentence);
      break;
    case 1:
      clause(sentence);
      sentence.push_back(PL::CCP);
      clause(sentence);
      break;
    case 2:
      clause(sentence);
      sentence.push_back(PL::CCA);
      clause(sentence);
      break;
    case 3:
      clause(sentence);
      sentence.push_back(PL::CCS);
      clause(sentence);
      break;
    default:
      sentence.push_back(PL::Subj);
      clause(sentence);
      sentence.push_back(PL::CCP);
      clause(sentence);
      break;
  }
  return sentence;
}

}  // namespace

TEST_CASE("phrase folding merges head and marker pairs") {
  std::vector<std::pair<FT, std::string>> tagged = {
      {FT::PSubj, "သူ"},    {FT::SubjP, "သည်"},  {FT::PObj, "စာအုပ်"},
      {FT::ObjP, "ကို"},     {FT::PIobj, "ဆရာ့"}, {FT::IobjP, "အား"},
      {FT::Active, "ပေးသည်"}};
  std::vector<Phrase> folded = fold_phrases(tagged);
  REQUIRE(folded.size() == 4);
  CHECK(folded[0] == Phrase{PL::Subj, "သူသည်"});
  CHECK(folded[1] == Phrase{PL::Obj, "စာအုပ်ကို"});
  CHECK(folded[2] == Phrase{PL::Iobj, "ဆရာ့အား"});
  CHECK(folded[3] == Phrase{PL::Active, "ပေးသည်"});
}

TEST_CASE("bare tags pass through unchanged") {
  std::vector<std::pair<FT, std::string>> tagged = {{FT::Subj, "a"},
                                                    {FT::Active, "b"}};
  std::vector<Phrase> folded = fold_phrases(tagged);
  REQUIRE(folded.size() == 2);
  CHECK(folded[0].label == PL::Subj);
  CHECK(folded[1].label == PL::Active);
}

TEST_CASE("every head/marker pair folds") {
  std::vector<std::pair<FT, FT>> pairs = {
      {FT::PSubj, FT::SubjP},   {FT::PObj, FT::ObjP},
      {FT::PIobj, FT::IobjP},   {FT::PPla, FT::PlaP},
      {FT::PTim, FT::TimP},     {FT::PExt, FT::ExtP},
      {FT::PSim, FT::SimP},     {FT::PCom, FT::ComP},
      {FT::POwn, FT::OwnP},     {FT::PUse, FT::UseP},
      {FT::PCau, FT::CauP},     {FT::PAim, FT::AimP},
      {FT::PPcomplO, FT::PcomplOP}};
  for (const auto& [head, marker] : pairs) {
    std::vector<Phrase> folded = fold_phrases({{head, "x"}, {marker, "y"}});
    REQUIRE(folded.size() == 1);
    CHECK(folded[0].surface == "xy");
  }
}

TEST_CASE("fold errors") {
  CHECK_THROWS_WITH_AS(fold_phrases({{FT::PCau, "x"}, {FT::ObjP, "y"}}),
                       doctest::Contains("PCau requires CauP"), FoldError);
  CHECK_THROWS_WITH_AS(fold_phrases({{FT::PCau, "x"}}),
                       doctest::Contains("PCau requires CauP"), FoldError);
  CHECK_THROWS_WITH_AS(fold_phrases({{FT::SubjP, "x"}}),
                       doctest::Contains("SubjP without preceding PSubj"),
                       FoldError);
  CHECK_THROWS_AS(fold_phrases({{FT::Null, "x"}}), std::invalid_argument);
}

TEST_CASE("grammar membership basics") {
  Grammar grammar = default_grammar();
  CHECK(recognizes({PL::Subj, PL::Active}, grammar));
  CHECK(recognizes({PL::Subj, PL::Obj, PL::Pla, PL::Active}, grammar));
  CHECK(recognizes({PL::Active}, grammar));
  CHECK_FALSE(recognizes({PL::Active, PL::Subj}, grammar));
  CHECK_FALSE(recognizes({PL::Subj}, grammar));
  CHECK_FALSE(recognizes({PL::Subj, PL::Active, PL::CCM}, grammar));
}

TEST_CASE("simple sentence parses to a single flat clause") {
  Grammar grammar = default_grammar();
  auto forest = parse(
      {{PL::Subj, "သူသည်"}, {PL::Obj, "စာအုပ်ကို"}, {PL::Iobj, "ဆရာ့အား"},
       {PL::Active, "ပေးသည်"}},
      grammar);
  REQUIRE(forest.size() == 1);
  CHECK(render_tree(forest[0]) ==
        "(S (SS (IC Subj[သူသည်] Obj[စာအုပ်ကို] Iobj[ဆရာ့အား] Active[ပေးသည်])))");
}

TEST_CASE("adverb dependent clause parses uniquely") {
  Grammar grammar = default_grammar();
  auto forest = parse({{PL::Subj, "မောင်မောင်"},
                       {PL::Active, "ကြိုးစား"},
                       {PL::CCS, "သောကြောင့်"},
                       {PL::Obj, "ဂုဏ်ထူး"},
                       {PL::Active, "ရသည်"}},
                      grammar);
  REQUIRE(forest.size() == 1);
  CHECK(render_tree(forest[0]) ==
        "(S (CS (DC_S (IC Subj[မောင်မောင်] Active[ကြိုးစား]) CCS[သောကြောင့်]) "
        "(IC Obj[ဂုဏ်ထူး] Active[ရသည်])))");
}

TEST_CASE("noun dependent clause keeps its subject inside the clause") {
  Grammar grammar = default_grammar();
  auto forest = parse({{PL::Subj, "ကလေးများ"},
                       {PL::Pla, "သစ်ပင်အောက်တွင်"},
                       {PL::Active, "ကစားနေသည်"},
                       {PL::CCP, "ကို"},
                       {PL::Subj, "ကျွန်တော်"},
                       {PL::Active, "မြင်သည်"}},
                      grammar);
  REQUIRE(forest.size() == 2);
  CHECK(render_tree(forest[0]) ==
        "(S (CS (DC_N (IC Subj[ကလေးများ] Pla[သစ်ပင်အောက်တွင်] Active[ကစားနေသည်]) "
        "CCP[ကို]) (IC Subj[ကျွန်တော်] Active[မြင်သည်])))");
}

TEST_CASE("split main clause attaches its subject at sentence level") {
  Grammar grammar = default_grammar();
  auto forest = parse({{PL::Subj, "မောင်ဘက"},
                       {PL::Subj, "ကျွန်တော်"},
                       {PL::Active, "စာကျက်နေသည်"},
                       {PL::CCP, "ဟု"},
                       {PL::Active, "ပြောသည်"}},
                      grammar);
  REQUIRE(forest.size() == 2);
  CHECK(render_tree(forest[0]) ==
        "(S (CS Subj[မောင်ဘက] (DC_N (IC Subj[ကျွန်တော်] Active[စာကျက်နေသည်]) "
        "CCP[ဟု]) (IC Active[ပြောသည်])))");
  CHECK(render_tree(forest[1]) ==
        "(S (CS (DC_N (IC Subj[မောင်ဘက] Subj[ကျွန်တော်] Active[စာကျက်နေသည်]) "
        "CCP[ဟု]) (IC Active[ပြောသည်])))");
}

TEST_CASE("select_canonical takes the first tree and rejects empty forests") {
  Grammar grammar = default_grammar();
  auto forest = parse({{PL::Subj, "a"}, {PL::Active, "b"}}, grammar);
  CHECK(structural_equal(select_canonical(forest), forest[0]));

  auto empty = parse({{PL::Active, "a"}, {PL::Subj, "b"}}, grammar);
  CHECK(empty.empty());
  CHECK_THROWS_WITH_AS(select_canonical(empty), "no parse", std::runtime_error);

  CHECK_THROWS_AS(parse({}, grammar), std::invalid_argument);
}

TEST_CASE("single-phrase sentence renders as a one-leaf clause") {
  Grammar grammar = default_grammar();
  auto forest = parse({{PL::Active, "စားပါ"}}, grammar);
  REQUIRE(forest.size() == 1);
  CHECK(render_tree(forest[0]) == "(S (SS (IC Active[စားပါ])))");
}

TEST_CASE("rendered trees read back structurally identical") {
  Grammar grammar = default_grammar();
  std::mt19937 rng(99);
  int parsed = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<PL> labels = sample_accepted(rng);
    auto forest = parse(phrases_of(labels), grammar);
    REQUIRE(!forest.empty());
    for (const ParseNode& tree : forest) {
      ParseNode reread = read_tree(render_tree(tree));
      CHECK(structural_equal(reread, tree));
    }
    ++parsed;
  }
  CHECK(parsed == 100);
}

TEST_CASE("tree reader rejects malformed text") {
  CHECK_THROWS_AS(read_tree("(S"), std::runtime_error);
  CHECK_THROWS_AS(read_tree("(S (IC))"), std::runtime_error);
  CHECK_THROWS_AS(read_tree("Subj"), std::runtime_error);
  CHECK_THROWS_AS(read_tree("Subj[x"), std::runtime_error);
  CHECK_THROWS_AS(read_tree("(S Subj[x]) extra"), std::runtime_error);
  CHECK_THROWS_AS(read_tree(""), std::runtime_error);
}

TEST_CASE("fringe identity holds for every tree in every forest") {
  Grammar grammar = default_grammar();
  std::mt19937 rng(123);
  for (int i = 0; i < 150; ++i) {
    std::vector<PL> labels = sample_accepted(rng);
    std::vector<Phrase> input = phrases_of(labels);
    for (const ParseNode& tree : parse(input, grammar)) {
      std::vector<std::string> leaves = fringe(tree);
      REQUIRE(leaves.size() == labels.size());
      for (std::size_t p = 0; p < labels.size(); ++p)
        CHECK(leaves[p] == to_string(labels[p]));
      CHECK(tree.begin == 0);
      CHECK(tree.end == static_cast<int>(labels.size()));
    }
  }
}

TEST_CASE("accepted sequences are verb-final") {
  Grammar grammar = default_grammar();
  std::mt19937 rng(321);
  for (int i = 0; i < 150; ++i) {
    std::vector<PL> labels = sample_accepted(rng);
    CHECK(recognizes(labels, grammar));
    CHECK(labels.back() == PL::Active);
  }
}

TEST_CASE("acceptance matches brute-force enumeration on short strings") {
  Grammar grammar = default_grammar();
  std::vector<PL> alphabet = {PL::Subj, PL::Obj, PL::Active, PL::CCS, PL::CCP};
  std::set<std::vector<PL>> derivable =
      testing::enumerate_accepted(grammar, 4, alphabet);

  // Exhaustive comparison over every sequence of length 1..4.
  std::vector<std::vector<PL>> queue = {{}};
  for (int length = 1; length <= 4; ++length) {
    std::vector<std::vector<PL>> next;
    for (const auto& prefix : queue) {
      for (PL symbol : alphabet) {
        std::vector<PL> sequence = prefix;
        sequence.push_back(symbol);
        CHECK(recognizes(sequence, grammar) == derivable.count(sequence));
        next.push_back(std::move(sequence));
      }
    }
    queue = std::move(next);
  }
}

TEST_CASE("relations list the leaf phrases in reading order") {
  Grammar grammar = default_grammar();
  auto simple = parse(
      {{PL::Subj, "သူသည်"}, {PL::Pla, "ကျောင်းသို့"}, {PL::Active, "သွားသည်"}},
      grammar);
  REQUIRE(simple.size() == 1);
  auto pairs = relations(simple[0]);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == std::pair<std::string, std::string>{"သူသည်", "Subj"});
  CHECK(pairs[1] == std::pair<std::string, std::string>{"ကျောင်းသို့", "Pla"});
  CHECK(pairs[2] == std::pair<std::string, std::string>{"သွားသည်", "Active"});
  CHECK(relations_line(simple[0]) ==
        "သူသည်#Subj ကျောင်းသို့#Pla သွားသည်#Active");

  auto adv = parse({{PL::Subj, "မောင်မောင်"},
                    {PL::Active, "ကြိုးစား"},
                    {PL::CCS, "သောကြောင့်"},
                    {PL::Obj, "ဂုဏ်ထူး"},
                    {PL::Active, "ရသည်"}},
                   grammar);
  auto adv_pairs = relations(select_canonical(adv));
  REQUIRE(adv_pairs.size() == 5);
  CHECK(adv_pairs[2] ==
        std::pair<std::string, std::string>{"သောကြောင့်", "CCS"});
  CHECK(adv_pairs[3] == std::pair<std::string, std::string>{"ဂုဏ်ထူး", "Obj"});

  ParseNode leaf;
  leaf.label = "Active";
  leaf.begin = 0;
  leaf.end = 1;
  leaf.surface = "x";
  CHECK(relations(leaf).size() == 1);
}

TEST_CASE("grammar construction validates references") {
  Grammar grammar;
  grammar.add_terminal("a");
  grammar.add_nonterminal("X");
  CHECK_THROWS_AS(grammar.add_production("X", {"missing"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(grammar.add_production("a", {"X"}), std::invalid_argument);
  CHECK_THROWS_AS(grammar.set_start("a"), std::invalid_argument);
  grammar.add_production("X", {"a"});
  grammar.set_start("X");
  grammar.finalize();
  CHECK(grammar.symbol("X").has_value());
  CHECK_FALSE(grammar.nullable(*grammar.symbol("X")));
}
