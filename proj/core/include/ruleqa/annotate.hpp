#ifndef RULEQA_ANNOTATE_HPP
#define RULEQA_ANNOTATE_HPP

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

namespace ruleqa {

/// A single token with character offsets into the source text.
/// surface always equals text[start, end); lemma is lowercase.
struct Token {
  std::string surface;
  std::string lemma;
  std::string pos;
  std::string ner = "O";
  std::size_t start = 0;
  std::size_t end = 0;    // exclusive
  std::size_t index = 0;  // position in the document token sequence
};

struct SentenceSpan {
  std::size_t first = 0;  // first token index
  std::size_t last = 0;   // one past the last token index
};

struct AnnotatedText {
  std::string text;
  std::vector<Token> tokens;
  std::vector<SentenceSpan> sentences;

  std::size_t sentence_of(std::size_t token_index) const;
};

std::set<std::string> default_abbreviations();

/// One lowercase entry per line, '#' comments allowed.
std::set<std::string> load_abbreviations(const std::filesystem::path& path);

/// Rule tokenizer + sentence splitter. Hyphenated words stay single tokens,
/// possessive 's splits off, sentence boundaries at ./?/! followed by
/// whitespace and a capital, guarded by an abbreviation list.
class Tokenizer {
public:
  Tokenizer() : abbreviations_(default_abbreviations()) {}
  explicit Tokenizer(std::set<std::string> abbreviations)
      : abbreviations_(std::move(abbreviations)) {}

  AnnotatedText run(std::string_view text) const;

private:
  std::set<std::string> abbreviations_;
};

/// Convenience wrapper with the default abbreviation guard list.
AnnotatedText tokenize_and_split(std::string_view text);

struct AnnotatorLexicons {
  std::unordered_map<std::string, std::string> pos_lexicon;      // lowercase word -> PTB tag
  std::unordered_map<std::string, std::string> lemma_exceptions; // lowercase word -> lemma
  std::unordered_set<std::string> first_names;                   // lowercase
  std::unordered_set<std::string> places;
  std::unordered_set<std::string> organizations;
  std::unordered_set<std::string> person_triggers;

  /// Loads pos_lexicon.tsv, lemma_exceptions.tsv, first_names.txt, places.txt,
  /// organizations.txt, person_triggers.txt from a directory.
  static AnnotatorLexicons load(const std::filesystem::path& dir);
};

/// Deterministic PoS/NER tagger and lemmatizer over lexicons, gazetteers and
/// suffix rules. Immutable after construction; safe for concurrent use.
class Annotator {
public:
  Annotator() = default;
  explicit Annotator(AnnotatorLexicons lexicons)
      : lex_(std::move(lexicons)), loaded_(true) {}

  bool loaded() const { return loaded_; }

  /// Fills lemma, pos and ner on every token. Token boundaries never change.
  /// Throws MissingLexicon if constructed without lexicons.
  void annotate(AnnotatedText& doc) const;

  /// Lemma via exception lexicon, then suffix rules, else lowercase surface.
  std::string lemmatize(std::string_view surface, std::string_view pos) const;

  bool is_auxiliary(std::string_view lower_surface) const;

private:
  AnnotatorLexicons lex_;
  bool loaded_ = false;
};

/// Interchange format (one JSON document, see export_annotations for shape).
/// Validates all token offsets against the text.
AnnotatedText import_annotations(const nlohmann::json& doc);

nlohmann::json export_annotations(const AnnotatedText& doc);

std::string to_lower(std::string_view s);
bool is_punctuation_token(const Token& t);

}  // namespace ruleqa

#endif
