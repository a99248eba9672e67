#include "ruleqa/retrieve.hpp"
#include "ruleqa/errors.hpp"

#include <algorithm>

namespace ruleqa {

std::string_view to_string(MatchLevel level) {
  switch (level) {
    case MatchLevel::None: return "NONE";
    case MatchLevel::Exact: return "EXACT";
    case MatchLevel::Synonym: return "SYNONYM";
    case MatchLevel::Embedding: return "EMBEDDING";
  }
  return "NONE";
}

double ScoringConfig::weight(MatchLevel level) const {
  switch (level) {
    case MatchLevel::Exact: return w_exact;
    case MatchLevel::Synonym: return w_synonym;
    case MatchLevel::Embedding: return w_embedding;
    case MatchLevel::None: return 0.0;
  }
  return 0.0;
}

void ScoringConfig::validate() const {
  if (!(w_embedding > 0 && w_embedding <= w_synonym && w_synonym <= w_exact && w_exact <= 1.0)) {
    throw ConfigError("weights must satisfy 0 < w_embedding <= w_synonym <= w_exact <= 1");
  }
  if (!(cosine_threshold > 0 && cosine_threshold <= 1.0)) {
    throw ConfigError("cosine_threshold must be in (0, 1]");
  }
  if (!allow_window_override && (window < 3 || window > 5)) {
    throw ConfigError("window must be between 3 and 5 (use the override flag to relax)");
  }
  if (window < 1) throw ConfigError("window must be positive");
  if (top_k < 1) throw ConfigError("top_k must be positive");
}

std::map<std::string, KeywordMatch> match_keywords(const QuestionAnalysis& qa,
                                                   const AnnotatedText& doc,
                                                   const std::vector<std::size_t>& token_indices,
                                                   const ResourcePack& pack,
                                                   const ScoringConfig& cfg) {
  std::map<std::string, KeywordMatch> out;
  for (const std::string& k : qa.keywords) {
    KeywordMatch m;

    // exact: the base keyword or any probe derived from it
    for (std::size_t idx : token_indices) {
      const std::string& lemma = doc.tokens[idx].lemma;
      if (lemma == k) {
        m = {MatchLevel::Exact, static_cast<long>(idx), 0.0};
        break;
      }
      auto pb = qa.probe_base.find(lemma);
      if (pb != qa.probe_base.end() && pb->second == k && lemma != k) {
        m = {MatchLevel::Exact, static_cast<long>(idx), 0.0};
        break;
      }
    }

    if (m.level == MatchLevel::None) {
      auto syn_it = qa.synonym_map.find(k);
      if (syn_it != qa.synonym_map.end() && !syn_it->second.empty()) {
        for (std::size_t idx : token_indices) {
          const std::string& lemma = doc.tokens[idx].lemma;
          if (std::find(syn_it->second.begin(), syn_it->second.end(), lemma) !=
              syn_it->second.end()) {
            m = {MatchLevel::Synonym, static_cast<long>(idx), 0.0};
            break;
          }
        }
      }
    }

    if (m.level == MatchLevel::None) {
      auto kv = pack.embeddings.lookup(k);
      if (!kv.empty()) {
        double best = 0.0;
        long best_idx = -1;
        for (std::size_t idx : token_indices) {
          const Token& t = doc.tokens[idx];
          if (!is_content_tag(t.pos) || pack.stopwords.contains(t.lemma)) continue;
          auto tv = pack.embeddings.lookup(t.lemma);
          if (tv.empty()) continue;
          double sim = cosine(kv, tv);
          if (sim > best) {
            best = sim;
            best_idx = static_cast<long>(idx);
          }
        }
        if (best >= cfg.cosine_threshold) {
          m = {MatchLevel::Embedding, best_idx, best};
        }
      }
    }
    out.emplace(k, m);
  }
  return out;
}

SentenceMatch relevance_score(const QuestionAnalysis& qa, const AnnotatedText& doc,
                              std::size_t sentence_index, const ResourcePack& pack,
                              const ScoringConfig& cfg) {
  SentenceMatch sm;
  sm.sentence_index = sentence_index;
  const SentenceSpan& sent = doc.sentences.at(sentence_index);
  std::vector<std::size_t> indices;
  indices.reserve(sent.last - sent.first);
  for (std::size_t k = sent.first; k < sent.last; ++k) indices.push_back(k);

  sm.matches = match_keywords(qa, doc, indices, pack, cfg);
  double sum = 0.0;
  for (const auto& [kw, m] : sm.matches) {
    sum += cfg.weight(m.level);
    if (m.level == MatchLevel::Exact) ++sm.exact_count;
    if (m.level == MatchLevel::Synonym) ++sm.synonym_count;
    if (m.level == MatchLevel::Embedding) sm.max_similarity = std::max(sm.max_similarity, m.similarity);
  }
  sm.relevance = qa.keywords.empty() ? 0.0 : sum / static_cast<double>(qa.keywords.size());
  return sm;
}

std::vector<SentenceMatch> match_sentences(const QuestionAnalysis& qa, const AnnotatedText& doc,
                                           const ResourcePack& pack, const ScoringConfig& cfg) {
  if (doc.sentences.empty()) throw EmptyContext("context has no sentences");

  std::vector<SentenceMatch> scored;
  scored.reserve(doc.sentences.size());
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    scored.push_back(relevance_score(qa, doc, s, pack, cfg));
  }

  // per-criterion top_k; zero signal on a criterion never selects
  std::vector<bool> selected(scored.size(), false);
  auto pick = [&](auto signal) {
    std::vector<std::size_t> order;
    for (std::size_t s = 0; s < scored.size(); ++s) {
      if (signal(scored[s]) > 0) order.push_back(s);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (signal(scored[a]) != signal(scored[b])) return signal(scored[a]) > signal(scored[b]);
      return a < b;
    });
    for (std::size_t i = 0; i < order.size() && i < static_cast<std::size_t>(cfg.top_k); ++i) {
      selected[order[i]] = true;
    }
  };
  pick([](const SentenceMatch& m) { return static_cast<double>(m.exact_count); });
  pick([](const SentenceMatch& m) { return static_cast<double>(m.synonym_count); });
  pick([](const SentenceMatch& m) { return m.max_similarity; });

  std::vector<SentenceMatch> out;
  for (std::size_t s = 0; s < scored.size(); ++s) {
    if (selected[s]) out.push_back(std::move(scored[s]));
  }
  std::stable_sort(out.begin(), out.end(), [](const SentenceMatch& a, const SentenceMatch& b) {
    if (a.relevance != b.relevance) return a.relevance > b.relevance;
    return a.sentence_index < b.sentence_index;
  });
  return out;
}

}  // namespace ruleqa
