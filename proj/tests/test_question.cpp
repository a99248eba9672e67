#include <doctest.h>

#include "ruleqa/errors.hpp"
#include "ruleqa/question.hpp"
#include "test_util.hpp"

using namespace ruleqa;

TEST_CASE("answer type names round-trip") {
  for (auto t : {ExpectedAnswerType::Person, ExpectedAnswerType::Location,
                 ExpectedAnswerType::Organization, ExpectedAnswerType::DateTime,
                 ExpectedAnswerType::Numeric, ExpectedAnswerType::Duration,
                 ExpectedAnswerType::Reason, ExpectedAnswerType::Method,
                 ExpectedAnswerType::EntityOther}) {
    CHECK(answer_type_from_string(to_string(t)) == t);
  }
  CHECK_THROWS_AS(answer_type_from_string("BOGUS"), FormatError);
}

TEST_CASE("classification rule table") {
  const auto& trig = testutil::pack().type_triggers;
  CHECK(classify_answer_type("who", "", trig) == ExpectedAnswerType::Person);
  CHECK(classify_answer_type("whom", "", trig) == ExpectedAnswerType::Person);
  CHECK(classify_answer_type("whose", "", trig) == ExpectedAnswerType::Person);
  CHECK(classify_answer_type("where", "", trig) == ExpectedAnswerType::Location);
  CHECK(classify_answer_type("when", "", trig) == ExpectedAnswerType::DateTime);
  CHECK(classify_answer_type("how many", "", trig) == ExpectedAnswerType::Numeric);
  CHECK(classify_answer_type("how much", "", trig) == ExpectedAnswerType::Numeric);
  CHECK(classify_answer_type("how long", "", trig) == ExpectedAnswerType::Duration);
  CHECK(classify_answer_type("why", "", trig) == ExpectedAnswerType::Reason);
  CHECK(classify_answer_type("how", "", trig) == ExpectedAnswerType::Method);
  CHECK(classify_answer_type("what", "artist", trig) == ExpectedAnswerType::Person);
  CHECK(classify_answer_type("which", "city", trig) == ExpectedAnswerType::Location);
  // "album" is deliberately not in the shipped trigger lexicon
  CHECK(classify_answer_type("what", "album", trig) == ExpectedAnswerType::EntityOther);
  CHECK(classify_answer_type("what", "", trig) == ExpectedAnswerType::EntityOther);
}

TEST_CASE("sentence-level types") {
  CHECK(is_sentence_level(ExpectedAnswerType::Reason));
  CHECK(is_sentence_level(ExpectedAnswerType::Method));
  CHECK_FALSE(is_sentence_level(ExpectedAnswerType::Person));
}

TEST_CASE("type trigger lexicon loads from TSV") {
  testutil::TempFile f("artist\tPERSON\ncity\tLOCATION\n", ".tsv");
  auto lex = TypeTriggerLexicon::load(f.path);
  CHECK(lex.size() == 2);
  CHECK(lex.lookup("artist") == ExpectedAnswerType::Person);
  CHECK(lex.lookup("ARTIST") == ExpectedAnswerType::Person);
  CHECK_FALSE(lex.lookup("album").has_value());
  testutil::TempFile bad("artist PERSON\n", ".tsv");
  CHECK_THROWS_AS(TypeTriggerLexicon::load(bad.path), FormatError);
}

TEST_CASE("degenerate non-question") {
  auto qa = analyze_question("Beyonce.", testutil::pack());
  CHECK(qa.wh_word.empty());
  CHECK(qa.expected_type == ExpectedAnswerType::EntityOther);
}

TEST_CASE("empty question rejected") {
  CHECK_THROWS_AS(analyze_question("", testutil::pack()), EmptyQuestion);
  CHECK_THROWS_AS(analyze_question("   \n", testutil::pack()), EmptyQuestion);
}

TEST_CASE("keyword extraction drops wh-words, auxiliaries, stopwords, punctuation") {
  auto qa = analyze_question("Who managed the Destiny's Child group?", testutil::pack());
  CHECK(qa.wh_word == "who");
  CHECK(qa.keywords == std::vector<std::string>{"manage", "destiny", "child", "group"});
  CHECK(qa.expected_type == ExpectedAnswerType::Person);
  // base keywords always probe for themselves
  for (const auto& k : qa.keywords) CHECK(qa.probe_base.at(k) == k);
}

TEST_CASE("compound wh unit and head noun") {
  auto qa = analyze_question("How many awards did the album win?", testutil::pack());
  CHECK(qa.wh_word == "how many");
  CHECK(qa.expected_type == ExpectedAnswerType::Numeric);
  CHECK(qa.head_noun == "award");

  auto qb = analyze_question("Which artist did Beyonce marry?", testutil::pack());
  CHECK(qb.wh_word == "which");
  CHECK(qb.head_noun == "artist");
  CHECK(qb.expected_type == ExpectedAnswerType::Person);
}

TEST_CASE("paraphrase: truncation at zero") {
  CHECK(paraphrase("Who managed the group?", testutil::pack(), 0).empty());
}

TEST_CASE("paraphrase: synonym substitution splices raw text") {
  // one-entry lexicon, no embeddings, so rule (c) output is fully pinned
  ResourcePack p;
  p.stopwords = testutil::pack().stopwords;
  p.annotator = testutil::pack().annotator;
  p.type_triggers = testutil::pack().type_triggers;
  p.synonyms.add("manage", 'v', {"run"});

  auto variants = paraphrase("Who managed the Destiny's Child group?", p, 10);
  bool has_sub = std::find(variants.begin(), variants.end(),
                           "Who run the Destiny's Child group?") != variants.end();
  CHECK(has_sub);
  // the original is never one of its own variants
  for (const auto& v : variants) CHECK(v != "Who managed the Destiny's Child group?");
}

TEST_CASE("paraphrase: declarative reorder and wh-in-situ") {
  const auto& p = testutil::pack();
  auto variants = paraphrase("Who managed the Destiny's Child group?", p, 10);
  REQUIRE(!variants.empty());
  bool reorder = std::find(variants.begin(), variants.end(),
                           "the Destiny's Child group was managed by who") != variants.end();
  CHECK(reorder);

  // no auxiliary, first post-wh token not a verb: only the in-situ rule fires
  auto only_b = paraphrase("Which planet glows?", p, 10);
  CHECK(only_b == std::vector<std::string>{"planet glows which"});
}

TEST_CASE("paraphrase: auxiliary deletion") {
  auto variants = paraphrase("Which artist did Beyonce marry?", testutil::pack(), 10);
  bool in_situ = std::find(variants.begin(), variants.end(),
                           "Beyonce marry which artist") != variants.end();
  CHECK(in_situ);
}

TEST_CASE("paraphrase: variant count bounded and duplicate-free") {
  auto variants = paraphrase("Who managed the Destiny's Child group?", testutil::pack(), 2);
  CHECK(variants.size() <= 2);
  auto all = paraphrase("Who managed the Destiny's Child group?", testutil::pack(), 50);
  std::set<std::string> uniq(all.begin(), all.end());
  CHECK(uniq.size() == all.size());
}

TEST_CASE("expansion: substituted synonyms probe for their base keyword") {
  auto qa = analyze_question("Who managed the Destiny's Child group?", testutil::pack());
  // shipped lexicon: manage -> run, supervise, oversee, direct (first wins)
  REQUIRE(std::find(qa.expanded_keywords.begin(), qa.expanded_keywords.end(), "run") !=
          qa.expanded_keywords.end());
  CHECK(qa.probe_base.at("run") == "manage");
  // base set unchanged by expansion
  CHECK(qa.keywords == std::vector<std::string>{"manage", "destiny", "child", "group"});
  // every base keyword has a synonym_map row (possibly empty)
  for (const auto& k : qa.expanded_keywords) CHECK(qa.synonym_map.count(k) == 1);
}

TEST_CASE("is_content_tag") {
  CHECK(is_content_tag("NN"));
  CHECK(is_content_tag("NNPS"));
  CHECK(is_content_tag("VBG"));
  CHECK(is_content_tag("JJ"));
  CHECK(is_content_tag("CD"));
  CHECK(is_content_tag("FW"));
  CHECK_FALSE(is_content_tag("DT"));
  CHECK_FALSE(is_content_tag("IN"));
  CHECK_FALSE(is_content_tag("."));
}
