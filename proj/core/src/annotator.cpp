#include "ruleqa/annotate.hpp"
#include "ruleqa/errors.hpp"

#include <array>
#include <cctype>
#include <fstream>

namespace ruleqa {

namespace {

const std::unordered_set<std::string>& month_names() {
  static const std::unordered_set<std::string> m = {
      "january", "february", "march",     "april",   "may",      "june",
      "july",    "august",   "september", "october", "november", "december",
      "jan",     "feb",      "mar",       "apr",     "jun",      "jul",
      "aug",     "sep",      "sept",      "oct",     "nov",      "dec"};
  return m;
}

const std::unordered_set<std::string>& number_words() {
  static const std::unordered_set<std::string> n = {
      "zero",    "one",     "two",      "three",   "four",    "five",
      "six",     "seven",   "eight",    "nine",    "ten",     "eleven",
      "twelve",  "thirteen", "fourteen", "fifteen", "sixteen", "seventeen",
      "eighteen", "nineteen", "twenty",  "thirty",  "forty",   "fifty",
      "sixty",   "seventy", "eighty",   "ninety",  "hundred", "thousand",
      "million", "billion", "dozen"};
  return n;
}

const std::unordered_set<std::string>& duration_units() {
  static const std::unordered_set<std::string> d = {
      "year",   "years",   "month",  "months",  "week",    "weeks",
      "day",    "days",    "hour",   "hours",   "minute",  "minutes",
      "second", "seconds", "decade", "decades", "century", "centuries"};
  return d;
}

const std::unordered_set<std::string>& auxiliaries() {
  static const std::unordered_set<std::string> a = {
      "be",   "is",    "are",  "was",  "were", "am",   "been",  "being",
      "do",   "does",  "did",  "have", "has",  "had",  "having", "will",
      "would", "shall", "should", "can", "could", "may", "might", "must"};
  return a;
}

const std::unordered_set<std::string>& entity_linkwords() {
  static const std::unordered_set<std::string> w = {"of",  "in",  "the", "and",
                                                    "for", "de",  "la",  "van",
                                                    "von", "del"};
  return w;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool is_numeric_token(std::string_view s) {
  bool digit = false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c != ',' && c != '.' && c != ':') {
      return false;
    }
  }
  return digit;
}

bool is_year(std::string_view s) {
  if (s.size() != 4 || !all_digits(s)) return false;
  int y = (s[0] - '0') * 1000 + (s[1] - '0') * 100 + (s[2] - '0') * 10 + (s[3] - '0');
  return y >= 1000 && y <= 2199;
}

// "1990s", "1800s"
bool is_decade(std::string_view s) {
  return s.size() == 5 && (s.back() == 's' || s.back() == 'S') &&
         is_year(s.substr(0, 4));
}

bool is_ordinal_day(std::string_view s) {
  if (s.size() < 3) return false;
  std::string_view suf = s.substr(s.size() - 2);
  if (suf != "st" && suf != "nd" && suf != "rd" && suf != "th") return false;
  return all_digits(s.substr(0, s.size() - 2));
}

bool is_cap_word(const Token& t) {
  return !t.surface.empty() && t.surface.front() >= 'A' && t.surface.front() <= 'Z';
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool has_vowel(std::string_view s) {
  for (char c : s) {
    if (is_vowel(c) || c == 'y') return true;
  }
  return false;
}

std::string fix_verb_stem(std::string s) {
  if (s.size() >= 3 && s[s.size() - 1] == s[s.size() - 2] &&
      std::string_view("bdgmnprtl").find(s.back()) != std::string_view::npos) {
    s.pop_back();  // planned -> plan
  } else if (s.back() == 'v') {
    s.push_back('e');  // believ -> believe
  }
  return s;
}

std::unordered_set<std::string> load_word_set(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw MissingLexicon("cannot open lexicon file: " + p.string());
  std::unordered_set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.insert(to_lower(line));
  }
  return out;
}

std::unordered_map<std::string, std::string> load_tsv_map(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw MissingLexicon("cannot open lexicon file: " + p.string());
  std::unordered_map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw FormatError("expected TAB in " + p.string() + ": " + line);
    out.emplace(to_lower(line.substr(0, tab)), line.substr(tab + 1));
  }
  return out;
}

}  // namespace

AnnotatorLexicons AnnotatorLexicons::load(const std::filesystem::path& dir) {
  AnnotatorLexicons lex;
  lex.pos_lexicon = load_tsv_map(dir / "pos_lexicon.tsv");
  lex.lemma_exceptions = load_tsv_map(dir / "lemma_exceptions.tsv");
  lex.first_names = load_word_set(dir / "first_names.txt");
  lex.places = load_word_set(dir / "places.txt");
  lex.organizations = load_word_set(dir / "organizations.txt");
  lex.person_triggers = load_word_set(dir / "person_triggers.txt");
  return lex;
}

bool Annotator::is_auxiliary(std::string_view lower_surface) const {
  return auxiliaries().count(std::string(lower_surface)) > 0;
}

std::string Annotator::lemmatize(std::string_view surface, std::string_view pos) const {
  std::string low = to_lower(surface);
  if (auto it = lex_.lemma_exceptions.find(low); it != lex_.lemma_exceptions.end()) {
    return it->second;
  }
  auto starts = [&](const char* p) { return pos.rfind(p, 0) == 0; };

  if (starts("VB")) {
    if (low.size() > 4 && low.ends_with("ied")) {
      return low.substr(0, low.size() - 3) + "y";  // married -> marry
    }
    if (low.ends_with("eed")) return low;
    if (low.size() > 3 && low.ends_with("ed")) {
      return fix_verb_stem(low.substr(0, low.size() - 2));
    }
    if (low.size() > 4 && low.ends_with("ing")) {
      std::string stem = low.substr(0, low.size() - 3);
      if (!has_vowel(stem)) return low;  // bring, sing
      return fix_verb_stem(stem);
    }
    if (low.size() > 4 && low.ends_with("ies")) {
      return low.substr(0, low.size() - 3) + "y";
    }
    if (low.size() > 3 && low.ends_with("es") &&
        (low.ends_with("ses") || low.ends_with("xes") || low.ends_with("zes") ||
         low.ends_with("ches") || low.ends_with("shes") || low.ends_with("oes"))) {
      return low.substr(0, low.size() - 2);
    }
    if (low.size() > 3 && low.ends_with("s") && !low.ends_with("ss") &&
        !low.ends_with("us") && !low.ends_with("is")) {
      return low.substr(0, low.size() - 1);
    }
    return low;
  }
  if (pos == "NNS") {
    if (low.size() > 4 && low.ends_with("ies")) {
      return low.substr(0, low.size() - 3) + "y";  // countries -> country
    }
    if (low.size() > 3 && low.ends_with("es") &&
        (low.ends_with("ses") || low.ends_with("xes") || low.ends_with("zes") ||
         low.ends_with("ches") || low.ends_with("shes"))) {
      return low.substr(0, low.size() - 2);
    }
    if (low.size() > 3 && low.ends_with("s") && !low.ends_with("ss") &&
        !low.ends_with("us") && !low.ends_with("is")) {
      return low.substr(0, low.size() - 1);
    }
    return low;
  }
  return low;
}

void Annotator::annotate(AnnotatedText& doc) const {
  if (!loaded_) throw MissingLexicon("annotator lexicons not loaded");

  // pass 1: part of speech
  for (const SentenceSpan& sent : doc.sentences) {
    for (std::size_t k = sent.first; k < sent.last; ++k) {
      Token& t = doc.tokens[k];
      const std::string low = to_lower(t.surface);
      const bool sentence_initial = (k == sent.first);

      if (is_punctuation_token(t)) {
        if (t.surface == "." || t.surface == "?" || t.surface == "!") t.pos = ".";
        else if (t.surface == ",") t.pos = ",";
        else if (t.surface == ":" || t.surface == ";") t.pos = ":";
        else if (t.surface == "(") t.pos = "-LRB-";
        else if (t.surface == ")") t.pos = "-RRB-";
        else if (t.surface == "$") t.pos = "$";
        else t.pos = "SYM";
      } else if (low == "'s") {
        t.pos = "POS";
      } else if (!low.empty() && low.front() == '\'') {
        t.pos = "VBP";  // 're, 've and friends
      } else if (is_numeric_token(low) || is_decade(low) || is_ordinal_day(low) ||
                 number_words().count(low)) {
        t.pos = "CD";
      } else if (auto it = lex_.pos_lexicon.find(low); it != lex_.pos_lexicon.end()) {
        t.pos = it->second;
      } else if (is_cap_word(t) && !sentence_initial) {
        t.pos = "NNP";
      } else if (low.size() > 4 && low.ends_with("ly")) {
        t.pos = "RB";
      } else if (low.size() > 4 && low.ends_with("ing")) {
        t.pos = "VBG";
      } else if (low.size() > 3 && low.ends_with("ed")) {
        t.pos = "VBD";
      } else if (low.size() > 4 && low.ends_with("est")) {
        t.pos = "JJS";
      } else if (low.size() > 3 && low.ends_with("s") && !low.ends_with("ss") &&
                 !low.ends_with("us") && !low.ends_with("is")) {
        t.pos = "NNS";
      } else if (is_cap_word(t)) {
        t.pos = "NNP";
      } else {
        t.pos = "NN";
      }
    }
  }

  // pass 2: lemmas
  for (Token& t : doc.tokens) {
    t.lemma = lemmatize(t.surface, t.pos);
    if (t.lemma.empty()) t.lemma = to_lower(t.surface);
  }

  // pass 3: numeric / date / time entities
  for (const SentenceSpan& sent : doc.sentences) {
    for (std::size_t k = sent.first; k < sent.last; ++k) {
      Token& t = doc.tokens[k];
      const std::string low = to_lower(t.surface);
      if (is_year(low) || is_decade(low) || is_ordinal_day(low) || month_names().count(low)) {
        t.ner = "DATE";
      } else if (is_numeric_token(low) || number_words().count(low)) {
        t.ner = "NUMBER";
      }
    }
    for (std::size_t k = sent.first; k < sent.last; ++k) {
      Token& t = doc.tokens[k];
      const std::string low = to_lower(t.surface);
      Token* next = (k + 1 < sent.last) ? &doc.tokens[k + 1] : nullptr;
      Token* prev = (k > sent.first) ? &doc.tokens[k - 1] : nullptr;

      if (t.ner == "NUMBER") {
        std::string nlow = next ? to_lower(next->surface) : "";
        if (prev && month_names().count(to_lower(prev->surface))) {
          t.ner = "DATE";  // September 4
        } else if (next && month_names().count(nlow)) {
          t.ner = "DATE";  // 4 September
        } else if (next && (nlow == "%" || nlow == "percent" || nlow == "percentage")) {
          t.ner = "PERCENT";
          next->ner = "PERCENT";
        } else if (prev && (prev->surface == "$" || prev->surface == "£" || prev->surface == "€")) {
          t.ner = "MONEY";
          prev->ner = "MONEY";
        } else if (next && (nlow == "dollars" || nlow == "dollar" || nlow == "cents" ||
                            nlow == "euros" || nlow == "pounds")) {
          t.ner = "MONEY";
          next->ner = "MONEY";
        } else if (next && duration_units().count(nlow)) {
          t.ner = "DURATION";
          next->ner = "DURATION";
        } else if (next && (nlow == "am" || nlow == "pm" || nlow == "a.m" || nlow == "p.m" ||
                            nlow == "a.m." || nlow == "p.m.")) {
          t.ner = "TIME";
          next->ner = "TIME";
        } else if (low.find(':') != std::string::npos) {
          t.ner = "TIME";
        }
      }
      if ((low == "early" || low == "mid" || low == "late") && next && next->ner == "DATE") {
        t.ner = "DATE";
      }
    }
  }

  // pass 4: gazetteers and capitalized runs
  for (const SentenceSpan& sent : doc.sentences) {
    std::size_t k = sent.first;
    while (k < sent.last) {
      const Token& t = doc.tokens[k];
      if (!(is_cap_word(t) && t.ner == "O")) {
        ++k;
        continue;
      }
      // collect the run, allowing internal linkwords between capitalized words
      std::vector<std::size_t> run;
      std::size_t j = k;
      while (j < sent.last) {
        const Token& u = doc.tokens[j];
        if (is_cap_word(u) && u.ner == "O") {
          run.push_back(j);
          ++j;
          continue;
        }
        if (!run.empty() && entity_linkwords().count(to_lower(u.surface)) &&
            j + 1 < sent.last && is_cap_word(doc.tokens[j + 1]) &&
            doc.tokens[j + 1].ner == "O") {
          run.push_back(j);
          ++j;
          continue;
        }
        break;
      }
      std::size_t resume = j;

      // a sentence-initial capital is uninformative unless a gazetteer knows it
      if (!run.empty() && run.front() == sent.first) {
        const std::string low = to_lower(doc.tokens[run.front()].surface);
        if (!lex_.first_names.count(low) && !lex_.places.count(low) &&
            !lex_.organizations.count(low)) {
          run.erase(run.begin());
          while (!run.empty() && !is_cap_word(doc.tokens[run.front()])) run.erase(run.begin());
        }
      }
      if (run.empty() || (run.size() == 1 && doc.tokens[run.front()].surface == "I")) {
        k = resume > k ? resume : k + 1;
        continue;
      }

      std::string label;
      for (std::size_t idx : run) {
        const std::string low = to_lower(doc.tokens[idx].surface);
        if (lex_.first_names.count(low)) {
          label = "PERSON";
          break;
        }
        if (lex_.places.count(low) && label.empty()) label = "LOCATION";
        if (lex_.organizations.count(low) && label.empty()) label = "ORGANIZATION";
      }
      if (label.empty()) {
        // person-trigger adjacency, looking left past up to two punctuation tokens
        std::size_t back = run.front();
        int skipped = 0;
        label = "MISC";
        while (back > sent.first && skipped <= 2) {
          --back;
          if (is_punctuation_token(doc.tokens[back])) {
            ++skipped;
            continue;
          }
          if (lex_.person_triggers.count(doc.tokens[back].lemma) ||
              lex_.person_triggers.count(to_lower(doc.tokens[back].surface))) {
            label = "PERSON";
          }
          break;
        }
      }
      for (std::size_t idx : run) {
        Token& u = doc.tokens[idx];
        u.ner = label;
        u.pos = "NNP";
        u.lemma = to_lower(u.surface);
      }
      k = resume > k ? resume : k + 1;
    }
  }
}

AnnotatedText import_annotations(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("text") || !j.contains("sentences")) {
    throw SchemaError("interchange document requires 'text' and 'sentences'");
  }
  AnnotatedText doc;
  doc.text = j.at("text").get<std::string>();
  if (!j.at("sentences").is_array()) throw SchemaError("'sentences' must be an array");

  for (const auto& sent : j.at("sentences")) {
    if (!sent.is_array()) throw SchemaError("each sentence must be an array of tokens");
    SentenceSpan span;
    span.first = doc.tokens.size();
    for (const auto& tj : sent) {
      for (const char* field : {"surface", "lemma", "pos", "ner", "start", "end"}) {
        if (!tj.contains(field)) throw SchemaError(std::string("token missing field '") + field + "'");
      }
      Token t;
      t.surface = tj.at("surface").get<std::string>();
      t.lemma = tj.at("lemma").get<std::string>();
      t.pos = tj.at("pos").get<std::string>();
      t.ner = tj.at("ner").get<std::string>();
      t.start = tj.at("start").get<std::size_t>();
      t.end = tj.at("end").get<std::size_t>();
      t.index = doc.tokens.size();
      if (t.start >= t.end || t.end > doc.text.size()) {
        throw OffsetError("token offsets out of range: [" + std::to_string(t.start) + ", " +
                          std::to_string(t.end) + ")");
      }
      if (doc.text.substr(t.start, t.end - t.start) != t.surface) {
        throw OffsetError("surface does not match text slice at offset " + std::to_string(t.start));
      }
      if (!doc.tokens.empty() && t.start < doc.tokens.back().end) {
        throw OffsetError("tokens overlap or are out of order at offset " + std::to_string(t.start));
      }
      if (t.lemma.empty()) throw SchemaError("token lemma must be non-empty");
      doc.tokens.push_back(std::move(t));
    }
    span.last = doc.tokens.size();
    doc.sentences.push_back(span);
  }
  return doc;
}

nlohmann::json export_annotations(const AnnotatedText& doc) {
  nlohmann::json sentences = nlohmann::json::array();
  for (const SentenceSpan& sent : doc.sentences) {
    nlohmann::json toks = nlohmann::json::array();
    for (std::size_t k = sent.first; k < sent.last; ++k) {
      const Token& t = doc.tokens[k];
      toks.push_back({{"surface", t.surface},
                      {"lemma", t.lemma},
                      {"pos", t.pos},
                      {"ner", t.ner},
                      {"start", t.start},
                      {"end", t.end}});
    }
    sentences.push_back(std::move(toks));
  }
  return {{"text", doc.text}, {"sentences", std::move(sentences)}};
}

}  // namespace ruleqa
