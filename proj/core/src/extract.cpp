#include "ruleqa/extract.hpp"

#include <algorithm>

namespace ruleqa {

bool ner_matches_type(std::string_view ner, ExpectedAnswerType type) {
  switch (type) {
    case ExpectedAnswerType::Person: return ner == "PERSON";
    case ExpectedAnswerType::Location: return ner == "LOCATION";
    case ExpectedAnswerType::Organization: return ner == "ORGANIZATION";
    case ExpectedAnswerType::DateTime: return ner == "DATE" || ner == "TIME";
    case ExpectedAnswerType::Numeric:
      return ner == "NUMBER" || ner == "MONEY" || ner == "PERCENT";
    case ExpectedAnswerType::Duration: return ner == "DURATION" || ner == "NUMBER";
    default: return false;
  }
}

namespace {

CandidateAnswer make_candidate(const AnnotatedText& doc, std::size_t sentence_index,
                               std::size_t first, std::size_t last, std::string label) {
  CandidateAnswer c;
  c.sentence_index = sentence_index;
  c.span_first = first;
  c.span_last = last;
  c.type_label = std::move(label);
  c.surface = doc.text.substr(doc.tokens[first].start,
                              doc.tokens[last - 1].end - doc.tokens[first].start);
  return c;
}

bool is_chunk_tag(std::string_view pos) {
  return pos.rfind("JJ", 0) == 0 || pos.rfind("NN", 0) == 0 || pos == "CD";
}

}  // namespace

std::vector<CandidateAnswer> spot_candidates(ExpectedAnswerType expected_type,
                                             const AnnotatedText& doc,
                                             std::size_t sentence_index,
                                             const QuestionAnalysis& qa) {
  std::vector<CandidateAnswer> out;
  const SentenceSpan& sent = doc.sentences.at(sentence_index);

  if (expected_type != ExpectedAnswerType::EntityOther) {
    std::size_t k = sent.first;
    while (k < sent.last) {
      if (!ner_matches_type(doc.tokens[k].ner, expected_type)) {
        ++k;
        continue;
      }
      std::size_t first = k;
      std::string label = doc.tokens[k].ner;
      while (k < sent.last && ner_matches_type(doc.tokens[k].ner, expected_type)) ++k;
      out.push_back(make_candidate(doc, sentence_index, first, k, label));
    }
    return out;
  }

  // ENTITY_OTHER: maximal JJ*/NN*/CD chunks ending in NN*, free of base keywords
  std::size_t k = sent.first;
  while (k < sent.last) {
    if (!is_chunk_tag(doc.tokens[k].pos)) {
      ++k;
      continue;
    }
    std::size_t first = k;
    while (k < sent.last && is_chunk_tag(doc.tokens[k].pos)) ++k;
    std::size_t last = k;
    while (last > first && doc.tokens[last - 1].pos.rfind("NN", 0) != 0) --last;
    if (last == first) continue;

    bool has_keyword = false;
    for (std::size_t i = first; i < last && !has_keyword; ++i) {
      has_keyword = std::find(qa.keywords.begin(), qa.keywords.end(), doc.tokens[i].lemma) !=
                    qa.keywords.end();
    }
    if (has_keyword) continue;
    out.push_back(make_candidate(doc, sentence_index, first, last, "NOUN_PHRASE"));
  }
  return out;
}

std::vector<std::size_t> candidate_window(const CandidateAnswer& cand, const AnnotatedText& doc,
                                          int window) {
  const SentenceSpan& sent = doc.sentences.at(cand.sentence_index);
  std::vector<std::size_t> out;
  std::size_t lo = cand.span_first;
  for (int i = 0; i < window && lo > sent.first; ++i) out.push_back(--lo);
  std::reverse(out.begin(), out.end());
  std::size_t hi = cand.span_last;
  for (int i = 0; i < window && hi < sent.last; ++i) out.push_back(hi++);
  return out;
}

void score_candidate(CandidateAnswer& cand, const AnnotatedText& doc, const QuestionAnalysis& qa,
                     const ResourcePack& pack, const ScoringConfig& cfg) {
  auto window = candidate_window(cand, doc, cfg.window);
  cand.breakdown = match_keywords(qa, doc, window, pack, cfg);
  double sum = 0.0;
  cand.exact_count = 0;
  for (const auto& [kw, m] : cand.breakdown) {
    sum += cfg.weight(m.level);
    if (m.level == MatchLevel::Exact) ++cand.exact_count;
  }
  cand.score = qa.keywords.empty() ? 0.0 : sum / static_cast<double>(qa.keywords.size());
}

}  // namespace ruleqa
