#ifndef RULEQA_QUESTION_HPP
#define RULEQA_QUESTION_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ruleqa/annotate.hpp"
#include "ruleqa/resources.hpp"

namespace ruleqa {

enum class ExpectedAnswerType {
  Person,
  Location,
  Organization,
  DateTime,
  Numeric,
  Duration,
  Reason,   // sentence-level answer
  Method,   // sentence-level answer
  EntityOther,
};

std::string_view to_string(ExpectedAnswerType t);
ExpectedAnswerType answer_type_from_string(std::string_view s);

/// Returns true for the types answered by a whole sentence rather than a span.
inline bool is_sentence_level(ExpectedAnswerType t) {
  return t == ExpectedAnswerType::Reason || t == ExpectedAnswerType::Method;
}

/// head-noun -> answer type, from a TSV resource (noun<TAB>TYPE).
class TypeTriggerLexicon {
public:
  TypeTriggerLexicon() = default;
  static TypeTriggerLexicon load(const std::filesystem::path& path);

  std::optional<ExpectedAnswerType> lookup(std::string_view noun) const;
  void add(std::string noun, ExpectedAnswerType type);
  std::size_t size() const { return entries_.size(); }

private:
  std::map<std::string, ExpectedAnswerType> entries_;
};

/// Everything the pipeline reads at runtime; immutable after load.
struct ResourcePack {
  StopwordList stopwords;
  SynonymLexicon synonyms;
  EmbeddingStore embeddings;
  Annotator annotator;
  TypeTriggerLexicon type_triggers;
};

struct QuestionAnalysis {
  std::string wh_word;  // empty when the input has no wh-word
  std::vector<std::string> keywords;           // base set K, document order
  std::vector<std::string> expanded_keywords;  // K plus paraphrase-derived lemmas
  std::map<std::string, std::vector<std::string>> synonym_map;
  // every expanded keyword maps back to the base keyword it widens;
  // base keywords map to themselves
  std::map<std::string, std::string> probe_base;
  ExpectedAnswerType expected_type = ExpectedAnswerType::EntityOther;
  std::string head_noun;  // first noun after the wh-word, empty if none
  AnnotatedText annotated;
};

/// Content-word test used for keyword extraction and embedding matching.
bool is_content_tag(std::string_view ptb_tag);

/// Rule table over the wh-word; what/which consult the head noun in the
/// type-trigger lexicon.
ExpectedAnswerType classify_answer_type(std::string_view wh_word, std::string_view head_noun,
                                        const TypeTriggerLexicon& triggers);

/// Deterministic paraphrase variants: (a) auxiliary deletion + declarative
/// reorder, (b) wh-in-situ, (c) one-synonym substitution per keyword.
/// Duplicates removed, original never included, truncated at max_variants.
std::vector<std::string> paraphrase(std::string_view question, const ResourcePack& pack,
                                    std::size_t max_variants);

QuestionAnalysis analyze_question(std::string_view question, const ResourcePack& pack,
                                  std::size_t max_paraphrases = 10);

}  // namespace ruleqa

#endif
