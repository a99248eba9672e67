#ifndef RULEQA_RESOURCES_HPP
#define RULEQA_RESOURCES_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ruleqa/annotate.hpp"

namespace ruleqa {

/// Dense word vectors, dimension inferred from the first line of the file.
/// Vectors are stored in single precision; similarity math runs in double.
class EmbeddingStore {
public:
  static EmbeddingStore load(const std::filesystem::path& path);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }

  /// Case-insensitive lookup; empty span when out of vocabulary.
  std::span<const float> lookup(std::string_view token) const;

private:
  std::size_t dimension_ = 0;
  std::unordered_map<std::string, std::vector<float>> vectors_;
};

/// Cosine similarity in double precision. Zero-norm inputs give 0.
/// Throws DimensionMismatch on unequal lengths.
double cosine(std::span<const float> a, std::span<const float> b);

/// lemma + pos class (n/v/a/r or '*') -> synonym lemmas, file order preserved.
class SynonymLexicon {
public:
  SynonymLexicon() = default;
  static SynonymLexicon load(const std::filesystem::path& path);

  /// pos_class '*' unions all classes for the lemma. The query lemma itself
  /// is never in the result.
  std::vector<std::string> synonyms(std::string_view lemma, char pos_class) const;

  void add(std::string lemma, char pos_class, std::vector<std::string> syns);
  std::size_t size() const { return entries_.size(); }

private:
  std::map<std::pair<std::string, char>, std::vector<std::string>> entries_;
};

class StopwordList {
public:
  StopwordList() = default;
  static StopwordList load(const std::filesystem::path& path);

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }
  void add(std::string word) { words_.insert(to_lower(word)); }

private:
  std::unordered_set<std::string> words_;
};

/// Coarse pos class for synonym lookup from a Penn Treebank tag.
char pos_class_of(std::string_view ptb_tag);

}  // namespace ruleqa

#endif
