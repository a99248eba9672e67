#ifndef RULEQA_ANSWER_HPP
#define RULEQA_ANSWER_HPP

#include <optional>

#include <json.hpp>

#include "ruleqa/extract.hpp"

namespace ruleqa {

inline constexpr const char* kNoAnswerMessage =
    "answer not found — please rephrase the question";

struct AnswerResult {
  enum class Variant { Extracted, SentenceFallback, NoAnswer };

  Variant variant = Variant::NoAnswer;
  std::string text;  // span surface, sentence text, or the no-answer message
  double score = 0.0;
  std::optional<std::size_t> sentence_index;
  std::optional<CandidateAnswer> candidate;
  double sentence_relevance = 0.0;
  std::vector<std::string> trace;
};

/// Ranking: REASON/METHOD take the top sentence; otherwise the best-scoring
/// candidate by (score, exact_count, sentence relevance, sentence index,
/// span start); otherwise the top sentence; otherwise no answer.
AnswerResult rank_and_select(const std::vector<CandidateAnswer>& candidates,
                             const std::vector<SentenceMatch>& sentence_matches,
                             ExpectedAnswerType expected_type, const AnnotatedText& context);

/// End-to-end pipeline: question analysis, context annotation, sentence
/// retrieval, candidate spotting and scoring, ranking.
AnswerResult answer_question(std::string_view question, std::string_view context,
                             const ResourcePack& pack, const ScoringConfig& cfg,
                             std::size_t max_paraphrases = 10);

nlohmann::json to_json(const AnswerResult& result, bool include_trace = false);

/// The original text of one sentence.
std::string sentence_text(const AnnotatedText& doc, std::size_t sentence_index);

}  // namespace ruleqa

#endif
