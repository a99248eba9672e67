#ifndef RULEQA_EXTRACT_HPP
#define RULEQA_EXTRACT_HPP

#include "ruleqa/retrieve.hpp"

namespace ruleqa {

struct CandidateAnswer {
  std::size_t sentence_index = 0;
  std::size_t span_first = 0;  // document token index
  std::size_t span_last = 0;   // exclusive
  std::string surface;         // original text slice
  std::string type_label;      // NER label or NOUN_PHRASE
  double score = 0.0;
  std::map<std::string, KeywordMatch> breakdown;  // window-scoped
  int exact_count = 0;
};

/// Maximal typed token runs (NER label mapped from the expected type), or
/// keyword-free noun-phrase chunks for ENTITY_OTHER. Candidates come back in
/// token order, unscored.
std::vector<CandidateAnswer> spot_candidates(ExpectedAnswerType expected_type,
                                             const AnnotatedText& doc,
                                             std::size_t sentence_index,
                                             const QuestionAnalysis& qa);

/// Scores the window of cfg.window tokens on each side of the span (span
/// excluded, clipped at sentence bounds) with the same three-level criterion
/// as sentence relevance.
void score_candidate(CandidateAnswer& cand, const AnnotatedText& doc, const QuestionAnalysis& qa,
                     const ResourcePack& pack, const ScoringConfig& cfg);

/// The window token indices for a candidate; exposed for verification.
std::vector<std::size_t> candidate_window(const CandidateAnswer& cand, const AnnotatedText& doc,
                                          int window);

bool ner_matches_type(std::string_view ner, ExpectedAnswerType type);

}  // namespace ruleqa

#endif
