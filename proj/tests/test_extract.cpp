#include <doctest.h>

#include <random>

#include "ruleqa/extract.hpp"
#include "test_util.hpp"

using namespace ruleqa;

namespace {

AnnotatedText annotated(const std::string& text) {
  auto doc = tokenize_and_split(text);
  testutil::pack().annotator.annotate(doc);
  return doc;
}

ResourcePack lexical_only_pack() {
  ResourcePack p;
  p.stopwords = testutil::pack().stopwords;
  p.annotator = testutil::pack().annotator;
  p.type_triggers = testutil::pack().type_triggers;
  return p;
}

}  // namespace

TEST_CASE("ner label to expected type mapping") {
  CHECK(ner_matches_type("PERSON", ExpectedAnswerType::Person));
  CHECK(ner_matches_type("LOCATION", ExpectedAnswerType::Location));
  CHECK(ner_matches_type("ORGANIZATION", ExpectedAnswerType::Organization));
  CHECK(ner_matches_type("DATE", ExpectedAnswerType::DateTime));
  CHECK(ner_matches_type("TIME", ExpectedAnswerType::DateTime));
  CHECK(ner_matches_type("NUMBER", ExpectedAnswerType::Numeric));
  CHECK(ner_matches_type("MONEY", ExpectedAnswerType::Numeric));
  CHECK(ner_matches_type("PERCENT", ExpectedAnswerType::Numeric));
  CHECK(ner_matches_type("DURATION", ExpectedAnswerType::Duration));
  CHECK(ner_matches_type("NUMBER", ExpectedAnswerType::Duration));
  CHECK_FALSE(ner_matches_type("LOCATION", ExpectedAnswerType::Person));
  CHECK_FALSE(ner_matches_type("O", ExpectedAnswerType::Person));
}

TEST_CASE("spotting: absent label gives no candidates") {
  const auto& p = testutil::pack();
  auto qa = analyze_question("Who sang it?", p);
  auto doc = annotated("The weather stayed calm all week.");
  CHECK(spot_candidates(ExpectedAnswerType::Person, doc, 0, qa).empty());
}

TEST_CASE("spotting: person run in the corpus") {
  const auto& p = testutil::pack();
  auto qa = analyze_question("Who managed the Destiny's Child group?", p);
  auto doc = annotated(testutil::ctx1());
  REQUIRE(doc.sentences.size() == 4);
  auto cands = spot_candidates(ExpectedAnswerType::Person, doc, 2, qa);
  REQUIRE(cands.size() == 1);
  CHECK(cands[0].surface == "Mathew Knowles");
  CHECK(cands[0].type_label == "PERSON");
  // span is token-aligned with the original text
  CHECK(doc.tokens[cands[0].span_first].surface == "Mathew");
  CHECK(doc.tokens[cands[0].span_last - 1].surface == "Knowles");
}

TEST_CASE("window scoring: hand trace of the corpus person candidate") {
  // hand-computed trace: window 5 covers "Managed by her father," and
  // ", the group became one"; EXACT manage + EXACT group over |K| = 4
  auto p = lexical_only_pack();
  auto qa = analyze_question("Who managed the Destiny's Child group?", p);
  auto doc = tokenize_and_split(testutil::ctx1());
  p.annotator.annotate(doc);

  auto cands = spot_candidates(ExpectedAnswerType::Person, doc, 2, qa);
  REQUIRE(cands.size() == 1);
  ScoringConfig cfg;

  auto window = candidate_window(cands[0], doc, cfg.window);
  REQUIRE(window.size() == 10);
  std::vector<std::string> words;
  for (auto i : window) words.push_back(doc.tokens[i].surface);
  CHECK(words == std::vector<std::string>{"Managed", "by", "her", "father", ",", ",", "the",
                                          "group", "became", "one"});

  score_candidate(cands[0], doc, qa, p, cfg);
  CHECK(cands[0].score == doctest::Approx(0.45));
  CHECK(cands[0].exact_count == 2);
  CHECK(cands[0].breakdown.at("manage").level == MatchLevel::Exact);
  CHECK(cands[0].breakdown.at("group").level == MatchLevel::Exact);
}

TEST_CASE("window scoring: empty window and |K| = 1") {
  const auto& p = testutil::pack();
  auto qa = analyze_question("Where did she go?", p);
  auto doc = annotated("Paris");
  REQUIRE(doc.tokens.size() == 1);
  auto cands = spot_candidates(ExpectedAnswerType::Location, doc, 0, qa);
  REQUIRE(cands.size() == 1);
  ScoringConfig cfg;
  CHECK(candidate_window(cands[0], doc, cfg.window).empty());
  score_candidate(cands[0], doc, qa, p, cfg);
  CHECK(cands[0].score == 0.0);

  auto qb = analyze_question("Who managed?", p);
  REQUIRE(qb.keywords.size() == 1);
  auto doc2 = annotated(testutil::ctx1());
  auto people = spot_candidates(ExpectedAnswerType::Person, doc2, 2, qb);
  REQUIRE(people.size() == 1);
  score_candidate(people[0], doc2, qb, p, cfg);
  CHECK(people[0].score == doctest::Approx(cfg.w_exact));
}

TEST_CASE("entity-other chunks: keyword-free noun phrases only") {
  const auto& p = testutil::pack();
  auto qa =
      analyze_question("What was the first album Beyonce released as a solo artist?", p);
  auto doc = annotated(testutil::ctx1());
  auto cands = spot_candidates(ExpectedAnswerType::EntityOther, doc, 3, qa);
  std::vector<std::string> got;
  for (const auto& c : cands) got.push_back(c.surface);
  CHECK(std::find(got.begin(), got.end(), "Dangerously in Love") != got.end());
  // chunks containing a base keyword are skipped entirely
  for (const auto& c : cands) {
    for (std::size_t i = c.span_first; i < c.span_last; ++i) {
      CHECK(std::find(qa.keywords.begin(), qa.keywords.end(), doc.tokens[i].lemma) ==
            qa.keywords.end());
    }
    CHECK(c.type_label == "NOUN_PHRASE");
    // chunk ends in a noun
    CHECK(doc.tokens[c.span_last - 1].pos.rfind("NN", 0) == 0);
  }
}

TEST_CASE("property: candidate score never exceeds sentence relevance") {
  const auto& p = testutil::pack();
  ScoringConfig cfg;
  const char* questions[] = {
      "Who managed the Destiny's Child group?",
      "When did Beyonce rise to fame?",
      "What was the first album Beyonce released as a solo artist?",
      "Which artist did Beyonce marry?",
  };
  for (const std::string& ctx : {testutil::ctx1(), testutil::ctx2()}) {
    auto doc = annotated(ctx);
    for (const char* q : questions) {
      auto qa = analyze_question(q, p);
      for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
        double rel = relevance_score(qa, doc, s, p, cfg).relevance;
        for (auto type : {qa.expected_type, ExpectedAnswerType::EntityOther}) {
          for (auto cand : spot_candidates(type, doc, s, qa)) {
            score_candidate(cand, doc, qa, p, cfg);
            CHECK(cand.score <= rel + 1e-12);
            CHECK(cand.score >= 0.0);
          }
        }
      }
    }
  }
}

TEST_CASE("property: window growth 3 -> 5 never lowers the score") {
  const auto& p = testutil::pack();
  auto doc = annotated(testutil::ctx1() + " " + testutil::ctx2());
  const char* questions[] = {
      "Who managed the Destiny's Child group?",
      "What was the first album Beyonce released as a solo artist?",
      "Which artist did Beyonce marry?",
  };
  std::mt19937 rng(424242);
  int tested = 0;
  while (tested < 200) {
    const char* q = questions[rng() % 3];
    auto qa = analyze_question(q, p);
    std::size_t s = rng() % doc.sentences.size();
    auto cands = spot_candidates(
        (rng() % 2) ? qa.expected_type : ExpectedAnswerType::EntityOther, doc, s, qa);
    if (cands.empty()) continue;
    auto cand = cands[rng() % cands.size()];
    ScoringConfig small, big;
    small.window = 3;
    big.window = 5;
    auto c3 = cand, c5 = cand;
    score_candidate(c3, doc, qa, p, small);
    score_candidate(c5, doc, qa, p, big);
    CHECK(c5.score >= c3.score - 1e-12);
    ++tested;
  }
}

TEST_CASE("property: score_candidate equals the brute-force oracle on the corpus") {
  const auto& p = testutil::pack();
  ScoringConfig cfg;
  const char* questions[] = {
      "Who managed the Destiny's Child group?",
      "When did Beyonce rise to fame?",
      "Which artist did Beyonce marry?",
      "What was the first album Beyonce released as a solo artist?",
  };
  for (const std::string& ctx : {testutil::ctx1(), testutil::ctx2()}) {
    auto doc = annotated(ctx);
    for (const char* q : questions) {
      auto qa = analyze_question(q, p);
      for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
        if (doc.sentences[s].last - doc.sentences[s].first > 30) continue;
        for (auto type : {qa.expected_type, ExpectedAnswerType::EntityOther}) {
          for (auto cand : spot_candidates(type, doc, s, qa)) {
            score_candidate(cand, doc, qa, p, cfg);
            double want = testutil::oracle_candidate_score(cand, qa, doc, p, cfg);
            CHECK(cand.score == doctest::Approx(want).epsilon(1e-12));
          }
        }
      }
    }
  }
}
