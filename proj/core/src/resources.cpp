#include "ruleqa/resources.hpp"
#include "ruleqa/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ruleqa {

EmbeddingStore EmbeddingStore::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open embedding file: " + path.string());

  EmbeddingStore store;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::istringstream ss(line);
    std::string token;
    ss >> token;
    std::vector<float> vec;
    std::string field;
    while (ss >> field) {
      float v = 0.f;
      auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || p != field.data() + field.size()) {
        throw FormatError(path.string() + ":" + std::to_string(lineno) +
                          ": non-numeric field '" + field + "'");
      }
      vec.push_back(v);
    }
    if (vec.empty()) {
      throw FormatError(path.string() + ":" + std::to_string(lineno) + ": no vector values");
    }
    if (store.dimension_ == 0) {
      store.dimension_ = vec.size();
    } else if (vec.size() != store.dimension_) {
      throw FormatError(path.string() + ":" + std::to_string(lineno) + ": expected " +
                        std::to_string(store.dimension_) + " values, got " +
                        std::to_string(vec.size()));
    }
    store.vectors_.try_emplace(to_lower(token), std::move(vec));  // first occurrence wins
  }
  if (store.vectors_.empty()) throw EmptyFile("embedding file is empty: " + path.string());
  return store;
}

std::span<const float> EmbeddingStore::lookup(std::string_view token) const {
  auto it = vectors_.find(to_lower(token));
  if (it == vectors_.end()) return {};
  return it->second;
}

double cosine(std::span<const float> a, std::span<const float> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("vector lengths differ: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += static_cast<double>(a[i]) * b[i];
    na += static_cast<double>(a[i]) * a[i];
    nb += static_cast<double>(b[i]) * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

SynonymLexicon SynonymLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open synonym lexicon: " + path.string());
  SynonymLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) {
      throw FormatError(path.string() + ":" + std::to_string(lineno) +
                        ": expected lemma<TAB>pos_class<TAB>synonyms");
    }
    std::string lemma = to_lower(line.substr(0, t1));
    std::string cls = line.substr(t1 + 1, t2 - t1 - 1);
    if (cls.size() != 1 || std::string_view("nvar*").find(cls[0]) == std::string_view::npos) {
      throw FormatError(path.string() + ":" + std::to_string(lineno) +
                        ": pos_class must be one of n, v, a, r, *");
    }
    std::vector<std::string> syns;
    std::stringstream ss(line.substr(t2 + 1));
    std::string syn;
    while (std::getline(ss, syn, ',')) {
      syn = to_lower(syn);
      if (!syn.empty() && syn != lemma) syns.push_back(syn);
    }
    lex.add(std::move(lemma), cls[0], std::move(syns));
  }
  return lex;
}

void SynonymLexicon::add(std::string lemma, char pos_class, std::vector<std::string> syns) {
  std::erase(syns, lemma);
  auto& slot = entries_[{std::move(lemma), pos_class}];
  for (auto& s : syns) {
    if (std::find(slot.begin(), slot.end(), s) == slot.end()) slot.push_back(std::move(s));
  }
}

std::vector<std::string> SynonymLexicon::synonyms(std::string_view lemma, char pos_class) const {
  const std::string key = to_lower(lemma);
  std::vector<std::string> out;
  auto collect = [&](char cls) {
    auto it = entries_.find({key, cls});
    if (it == entries_.end()) return;
    for (const auto& s : it->second) {
      if (s != key && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
  };
  if (pos_class == '*') {
    for (char cls : {'n', 'v', 'a', 'r', '*'}) collect(cls);
  } else {
    collect(pos_class);
    collect('*');
  }
  return out;
}

StopwordList StopwordList::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open stopword list: " + path.string());
  StopwordList list;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    list.add(line);
  }
  if (list.size() == 0) throw EmptyFile("stopword list is empty: " + path.string());
  return list;
}

bool StopwordList::contains(std::string_view word) const {
  return words_.count(to_lower(word)) > 0;
}

char pos_class_of(std::string_view tag) {
  if (tag.rfind("NN", 0) == 0) return 'n';
  if (tag.rfind("VB", 0) == 0) return 'v';
  if (tag.rfind("JJ", 0) == 0) return 'a';
  if (tag.rfind("RB", 0) == 0) return 'r';
  return '*';
}

}  // namespace ruleqa
