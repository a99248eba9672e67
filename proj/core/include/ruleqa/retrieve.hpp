#ifndef RULEQA_RETRIEVE_HPP
#define RULEQA_RETRIEVE_HPP

#include <map>
#include <string>
#include <vector>

#include "ruleqa/question.hpp"

namespace ruleqa {

enum class MatchLevel { None, Exact, Synonym, Embedding };

std::string_view to_string(MatchLevel level);

struct KeywordMatch {
  MatchLevel level = MatchLevel::None;
  long matched_token = -1;  // document token index, -1 when unmatched
  double similarity = 0.0;  // embedding similarity when level == Embedding
};

struct SentenceMatch {
  std::size_t sentence_index = 0;
  double relevance = 0.0;  // sum of level weights over base keywords / |K|
  std::map<std::string, KeywordMatch> matches;
  int exact_count = 0;
  int synonym_count = 0;
  double max_similarity = 0.0;
};

/// Weights and thresholds for the three match criteria.
struct ScoringConfig {
  double w_exact = 0.9;
  double w_synonym = 0.7;
  double w_embedding = 0.6;
  double cosine_threshold = 0.6;
  int window = 5;  // token window around a candidate, legal range 3-5
  int top_k = 3;   // sentences kept per criterion
  bool allow_window_override = false;

  double weight(MatchLevel level) const;

  /// Throws ConfigError when an invariant is violated.
  void validate() const;
};

/// Per-keyword three-level matching over an explicit token index set.
/// Shared by sentence relevance and candidate window scoring.
std::map<std::string, KeywordMatch> match_keywords(const QuestionAnalysis& qa,
                                                   const AnnotatedText& doc,
                                                   const std::vector<std::size_t>& token_indices,
                                                   const ResourcePack& pack,
                                                   const ScoringConfig& cfg);

/// Three-level keyword matching against one sentence: exact lemma match
/// (expanded keywords probe for their base keyword), then synonym overlap,
/// then best embedding similarity against content tokens.
SentenceMatch relevance_score(const QuestionAnalysis& qa, const AnnotatedText& doc,
                              std::size_t sentence_index, const ResourcePack& pack,
                              const ScoringConfig& cfg);

/// Union of the per-criterion top_k sentences, sorted by
/// (relevance desc, sentence index asc). Empty iff no sentence has any signal.
/// Throws EmptyContext when the document has no sentences.
std::vector<SentenceMatch> match_sentences(const QuestionAnalysis& qa, const AnnotatedText& doc,
                                           const ResourcePack& pack, const ScoringConfig& cfg);

}  // namespace ruleqa

#endif
