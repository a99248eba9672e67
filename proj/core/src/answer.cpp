#include "ruleqa/answer.hpp"
#include "ruleqa/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ruleqa {

std::string sentence_text(const AnnotatedText& doc, std::size_t sentence_index) {
  const SentenceSpan& sent = doc.sentences.at(sentence_index);
  if (sent.first == sent.last) return "";
  return doc.text.substr(doc.tokens[sent.first].start,
                         doc.tokens[sent.last - 1].end - doc.tokens[sent.first].start);
}

AnswerResult rank_and_select(const std::vector<CandidateAnswer>& candidates,
                             const std::vector<SentenceMatch>& sentence_matches,
                             ExpectedAnswerType expected_type, const AnnotatedText& context) {
  AnswerResult r;

  auto fallback = [&](const SentenceMatch& sm) {
    r.variant = AnswerResult::Variant::SentenceFallback;
    r.sentence_index = sm.sentence_index;
    r.text = sentence_text(context, sm.sentence_index);
    r.score = sm.relevance;
    r.sentence_relevance = sm.relevance;
  };

  if (is_sentence_level(expected_type) && !sentence_matches.empty()) {
    fallback(sentence_matches.front());
    return r;
  }

  auto relevance_of = [&](std::size_t sentence_index) {
    for (const auto& sm : sentence_matches) {
      if (sm.sentence_index == sentence_index) return sm.relevance;
    }
    return 0.0;
  };

  const CandidateAnswer* best = nullptr;
  for (const CandidateAnswer& c : candidates) {
    if (c.score <= 0.0) continue;
    if (!best) {
      best = &c;
      continue;
    }
    if (c.score != best->score) {
      if (c.score > best->score) best = &c;
      continue;
    }
    if (c.exact_count != best->exact_count) {
      if (c.exact_count > best->exact_count) best = &c;
      continue;
    }
    double rc = relevance_of(c.sentence_index), rb = relevance_of(best->sentence_index);
    if (rc != rb) {
      if (rc > rb) best = &c;
      continue;
    }
    if (c.sentence_index != best->sentence_index) {
      if (c.sentence_index < best->sentence_index) best = &c;
      continue;
    }
    if (c.span_first < best->span_first) best = &c;
  }

  if (best) {
    r.variant = AnswerResult::Variant::Extracted;
    r.candidate = *best;
    r.text = best->surface;
    r.score = best->score;
    r.sentence_index = best->sentence_index;
    r.sentence_relevance = relevance_of(best->sentence_index);
    return r;
  }
  if (!sentence_matches.empty()) {
    fallback(sentence_matches.front());
    return r;
  }
  r.variant = AnswerResult::Variant::NoAnswer;
  r.text = kNoAnswerMessage;
  return r;
}

AnswerResult answer_question(std::string_view question, std::string_view context,
                             const ResourcePack& pack, const ScoringConfig& cfg,
                             std::size_t max_paraphrases) {
  std::string ctx(context);
  if (ctx.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw EmptyContext("context is empty");
  }

  QuestionAnalysis qa = analyze_question(question, pack, max_paraphrases);

  AnnotatedText doc = tokenize_and_split(context);
  pack.annotator.annotate(doc);

  std::vector<SentenceMatch> matched = match_sentences(qa, doc, pack, cfg);

  std::vector<std::string> trace;
  {
    std::ostringstream os;
    os << "question: wh=" << (qa.wh_word.empty() ? "-" : qa.wh_word)
       << " type=" << to_string(qa.expected_type) << " keywords=";
    for (std::size_t i = 0; i < qa.keywords.size(); ++i) {
      os << (i ? "," : "") << qa.keywords[i];
    }
    trace.push_back(os.str());
  }
  for (const SentenceMatch& sm : matched) {
    std::ostringstream os;
    os << "sentence " << sm.sentence_index << ": relevance=" << sm.relevance
       << " exact=" << sm.exact_count << " synonym=" << sm.synonym_count;
    trace.push_back(os.str());
  }

  std::vector<CandidateAnswer> candidates;
  if (!is_sentence_level(qa.expected_type)) {
    for (const SentenceMatch& sm : matched) {
      for (CandidateAnswer& c : spot_candidates(qa.expected_type, doc, sm.sentence_index, qa)) {
        score_candidate(c, doc, qa, pack, cfg);
        candidates.push_back(std::move(c));
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const CandidateAnswer& a, const CandidateAnswer& b) {
                       if (a.sentence_index != b.sentence_index) {
                         return a.sentence_index < b.sentence_index;
                       }
                       return a.span_first < b.span_first;
                     });
    for (const CandidateAnswer& c : candidates) {
      std::ostringstream os;
      os << "candidate \"" << c.surface << "\" [" << c.type_label << "] sentence "
         << c.sentence_index << ": score=" << c.score << " exact=" << c.exact_count;
      trace.push_back(os.str());
    }
  }

  AnswerResult r = rank_and_select(candidates, matched, qa.expected_type, doc);
  {
    std::ostringstream os;
    switch (r.variant) {
      case AnswerResult::Variant::Extracted: os << "selected: extracted \"" << r.text << "\""; break;
      case AnswerResult::Variant::SentenceFallback:
        os << "selected: sentence " << *r.sentence_index;
        break;
      case AnswerResult::Variant::NoAnswer: os << "selected: no answer"; break;
    }
    trace.push_back(os.str());
  }
  r.trace = std::move(trace);
  return r;
}

nlohmann::json to_json(const AnswerResult& r, bool include_trace) {
  nlohmann::json j;
  switch (r.variant) {
    case AnswerResult::Variant::Extracted: j["variant"] = "extracted"; break;
    case AnswerResult::Variant::SentenceFallback: j["variant"] = "sentence"; break;
    case AnswerResult::Variant::NoAnswer: j["variant"] = "no_answer"; break;
  }
  j["text"] = r.text;
  j["score"] = r.score;
  if (r.sentence_index) {
    j["sentence_index"] = *r.sentence_index;
  } else {
    j["sentence_index"] = nullptr;
  }
  if (include_trace) j["trace"] = r.trace;
  return j;
}

}  // namespace ruleqa
