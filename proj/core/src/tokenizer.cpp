#include "ruleqa/annotate.hpp"
#include "ruleqa/errors.hpp"

#include <cctype>
#include <fstream>

namespace ruleqa {

std::set<std::string> load_abbreviations(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingLexicon("cannot open abbreviation list: " + path.string());
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.insert(to_lower(line));
  }
  return out;
}

namespace {

bool is_ascii_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)); }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

// Unicode punctuation we must not glue into words: curly quotes, dashes,
// ellipsis. Everything else non-ASCII is treated as a word character.
bool is_unicode_punct(std::string_view s, std::size_t i, std::size_t& len) {
  if (i + 2 >= s.size()) return false;
  unsigned char a = s[i], b = s[i + 1], c = s[i + 2];
  if (a == 0xE2 && b == 0x80 &&
      (c == 0x98 || c == 0x99 || c == 0x9C || c == 0x9D ||  // quotes
       c == 0x93 || c == 0x94 ||                            // en/em dash
       c == 0xA6)) {                                        // ellipsis
    len = 3;
    return true;
  }
  return false;
}

bool is_apostrophe(std::string_view s, std::size_t i, std::size_t& len) {
  if (s[i] == '\'') {
    len = 1;
    return true;
  }
  if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
      static_cast<unsigned char>(s[i + 1]) == 0x80 &&
      static_cast<unsigned char>(s[i + 2]) == 0x99) {
    len = 3;
    return true;
  }
  return false;
}

bool is_word_char(std::string_view s, std::size_t i) {
  char c = s[i];
  if (is_alnum(c)) return true;
  if (static_cast<unsigned char>(c) >= 0x80) {
    std::size_t len = 0;
    return !is_unicode_punct(s, i, len);
  }
  return false;
}

bool starts_with_capital(std::string_view s) {
  if (s.empty()) return false;
  char c = s.front();
  if (c >= 'A' && c <= 'Z') return true;
  return is_digit(c);
}

// "U.S." / "e.g." style: short letter groups separated by periods.
bool dotted_abbreviation_at(std::string_view s, std::size_t i, std::size_t& end) {
  std::size_t p = i;
  int groups = 0;
  while (p < s.size() && is_ascii_letter(s[p])) {
    std::size_t g = p;
    while (g < s.size() && is_ascii_letter(s[g])) ++g;
    if (g - p > 2 || g >= s.size() || s[g] != '.') break;
    ++groups;
    p = g + 1;
  }
  if (groups >= 2) {
    end = p;
    return true;
  }
  return false;
}

}  // namespace

std::set<std::string> default_abbreviations() {
  return {"mr",  "mrs", "ms",  "dr",   "prof", "st",  "mt",  "jr",  "sr",
          "co",  "inc", "ltd", "corp", "vs",   "etc", "no",  "gen", "col",
          "jan", "feb", "mar", "apr",  "jun",  "jul", "aug", "sep", "sept",
          "oct", "nov", "dec", "fig",  "al",   "approx"};
}

std::size_t AnnotatedText::sentence_of(std::size_t token_index) const {
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    if (token_index >= sentences[s].first && token_index < sentences[s].last) return s;
  }
  return sentences.size();
}

AnnotatedText Tokenizer::run(std::string_view text) const {
  AnnotatedText doc;
  doc.text.assign(text);

  const std::string_view s = doc.text;
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_space(s[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;

    std::size_t abbr_end = 0;
    if (is_ascii_letter(s[i]) && dotted_abbreviation_at(s, i, abbr_end)) {
      i = abbr_end;
    } else if (is_word_char(s, i)) {
      while (i < s.size()) {
        if (is_word_char(s, i)) {
          ++i;
          continue;
        }
        // hyphen, ampersand, and digit-internal ,/./: stay inside a token
        char c = s[i];
        if ((c == '-' || c == '&') && i + 1 < s.size() && i > start &&
            is_word_char(s, i + 1)) {
          ++i;
          continue;
        }
        if ((c == ',' || c == '.' || c == ':') && i > start && is_digit(s[i - 1]) &&
            i + 1 < s.size() && is_digit(s[i + 1])) {
          ++i;
          continue;
        }
        break;
      }
      // possessive / contraction: split at the apostrophe
    } else {
      std::size_t len = 1;
      if (is_apostrophe(s, i, len)) {
        // apostrophe followed by letters forms one token ('s, 't, 're)
        std::size_t j = i + len;
        if (j < s.size() && is_ascii_letter(s[j]) && i > 0 && is_word_char(s, i - 1)) {
          while (j < s.size() && is_ascii_letter(s[j])) ++j;
          i = j;
        } else {
          i += len;
        }
      } else if (is_unicode_punct(s, i, len)) {
        i += len;
      } else {
        ++i;  // single punctuation character
      }
    }

    Token t;
    t.start = start;
    t.end = i;
    t.surface.assign(s.substr(start, i - start));
    t.index = doc.tokens.size();
    doc.tokens.push_back(std::move(t));
  }

  // sentence boundaries
  std::size_t sent_first = 0;
  for (std::size_t k = 0; k < doc.tokens.size(); ++k) {
    const Token& t = doc.tokens[k];
    bool terminal = t.surface == "." || t.surface == "?" || t.surface == "!";
    if (!terminal) continue;
    if (t.surface == ".") {
      // abbreviation guard on the preceding token
      if (k > sent_first) {
        const Token& prev = doc.tokens[k - 1];
        std::string low = to_lower(prev.surface);
        if (abbreviations_.count(low)) continue;
      }
    }
    if (k + 1 >= doc.tokens.size()) continue;  // handled by final flush
    const Token& next = doc.tokens[k + 1];
    bool gap_ws = false;
    for (std::size_t p = t.end; p < next.start; ++p) {
      if (is_space(s[p])) gap_ws = true;
    }
    if (!gap_ws) continue;
    std::string_view nxt = next.surface;
    bool cap = starts_with_capital(nxt);
    if (!cap && k + 2 < doc.tokens.size() && is_punctuation_token(next)) {
      cap = starts_with_capital(doc.tokens[k + 2].surface);
    }
    if (!cap) continue;
    doc.sentences.push_back({sent_first, k + 1});
    sent_first = k + 1;
  }
  if (sent_first < doc.tokens.size()) {
    doc.sentences.push_back({sent_first, doc.tokens.size()});
  }
  return doc;
}

AnnotatedText tokenize_and_split(std::string_view text) {
  static const Tokenizer tok;
  return tok.run(text);
}

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

bool is_punctuation_token(const Token& t) {
  for (char c : t.surface) {
    if (is_alnum(c)) return false;
  }
  return true;
}

}  // namespace ruleqa
