#include "ruleqa/question.hpp"
#include "ruleqa/errors.hpp"

#include <algorithm>
#include <fstream>

namespace ruleqa {

namespace {

const std::vector<std::string>& wh_words() {
  static const std::vector<std::string> w = {"who",   "whom", "whose", "what", "which",
                                             "where", "when", "why",   "how"};
  return w;
}

struct Variant {
  std::string text;
  std::string substituted_base;     // rule (c): base keyword that was replaced
  std::string substituted_synonym;  // rule (c): the synonym that replaced it
};

std::string slice(const AnnotatedText& doc, std::size_t first_tok, std::size_t last_tok) {
  if (first_tok > last_tok || last_tok >= doc.tokens.size()) return "";
  return doc.text.substr(doc.tokens[first_tok].start,
                         doc.tokens[last_tok].end - doc.tokens[first_tok].start);
}

}  // namespace

bool is_content_tag(std::string_view pos) {
  return pos.rfind("NN", 0) == 0 || pos.rfind("VB", 0) == 0 || pos.rfind("JJ", 0) == 0 ||
         pos == "CD" || pos == "FW";
}

std::string_view to_string(ExpectedAnswerType t) {
  switch (t) {
    case ExpectedAnswerType::Person: return "PERSON";
    case ExpectedAnswerType::Location: return "LOCATION";
    case ExpectedAnswerType::Organization: return "ORGANIZATION";
    case ExpectedAnswerType::DateTime: return "DATE_TIME";
    case ExpectedAnswerType::Numeric: return "NUMERIC";
    case ExpectedAnswerType::Duration: return "DURATION";
    case ExpectedAnswerType::Reason: return "REASON";
    case ExpectedAnswerType::Method: return "METHOD";
    case ExpectedAnswerType::EntityOther: return "ENTITY_OTHER";
  }
  return "ENTITY_OTHER";
}

ExpectedAnswerType answer_type_from_string(std::string_view s) {
  for (auto t : {ExpectedAnswerType::Person, ExpectedAnswerType::Location,
                 ExpectedAnswerType::Organization, ExpectedAnswerType::DateTime,
                 ExpectedAnswerType::Numeric, ExpectedAnswerType::Duration,
                 ExpectedAnswerType::Reason, ExpectedAnswerType::Method,
                 ExpectedAnswerType::EntityOther}) {
    if (to_string(t) == s) return t;
  }
  throw FormatError("unknown answer type: " + std::string(s));
}

TypeTriggerLexicon TypeTriggerLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open type-trigger lexicon: " + path.string());
  TypeTriggerLexicon lex;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw FormatError("expected noun<TAB>TYPE: " + line);
    lex.add(to_lower(line.substr(0, tab)), answer_type_from_string(line.substr(tab + 1)));
  }
  return lex;
}

std::optional<ExpectedAnswerType> TypeTriggerLexicon::lookup(std::string_view noun) const {
  auto it = entries_.find(to_lower(noun));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void TypeTriggerLexicon::add(std::string noun, ExpectedAnswerType type) {
  entries_[std::move(noun)] = type;
}

ExpectedAnswerType classify_answer_type(std::string_view wh_word, std::string_view head_noun,
                                        const TypeTriggerLexicon& triggers) {
  if (wh_word == "who" || wh_word == "whom" || wh_word == "whose") {
    return ExpectedAnswerType::Person;
  }
  if (wh_word == "where") return ExpectedAnswerType::Location;
  if (wh_word == "when") return ExpectedAnswerType::DateTime;
  if (wh_word == "how many" || wh_word == "how much") return ExpectedAnswerType::Numeric;
  if (wh_word == "how long") return ExpectedAnswerType::Duration;
  if (wh_word == "why") return ExpectedAnswerType::Reason;
  if (wh_word == "how") return ExpectedAnswerType::Method;
  if (wh_word == "what" || wh_word == "which") {
    if (!head_noun.empty()) {
      if (auto t = triggers.lookup(head_noun)) return *t;
    }
    return ExpectedAnswerType::EntityOther;
  }
  return ExpectedAnswerType::EntityOther;
}

namespace {

// Shared by paraphrase() and analyze_question(): all rule applications in
// fixed order, before dedup/truncation.
std::vector<Variant> generate_variants(const AnnotatedText& qdoc,
                                       const std::vector<std::string>& base_keywords,
                                       const ResourcePack& pack) {
  std::vector<Variant> out;
  if (qdoc.tokens.empty()) return out;

  // word tokens only, trailing punctuation dropped
  std::size_t last = qdoc.tokens.size();
  while (last > 0 && is_punctuation_token(qdoc.tokens[last - 1])) --last;
  if (last == 0) return out;

  std::size_t wh_idx = last;
  std::string wh;
  for (std::size_t k = 0; k < last; ++k) {
    std::string low = to_lower(qdoc.tokens[k].surface);
    if (std::find(wh_words().begin(), wh_words().end(), low) != wh_words().end()) {
      wh_idx = k;
      wh = low;
      break;
    }
  }

  std::size_t aux_idx = last;
  for (std::size_t k = (wh_idx < last ? wh_idx + 1 : 0); k < last; ++k) {
    if (pack.annotator.is_auxiliary(to_lower(qdoc.tokens[k].surface))) {
      aux_idx = k;
      break;
    }
  }

  // (a) wh + main verb: "Who managed X" -> "X was managed by who"
  if (wh_idx == 0 && last >= 3) {
    const Token& v = qdoc.tokens[1];
    if (v.pos.rfind("VB", 0) == 0 && !pack.annotator.is_auxiliary(to_lower(v.surface))) {
      out.push_back({slice(qdoc, 2, last - 1) + " was " + to_lower(v.surface) + " by " + wh,
                     "", ""});
    }
  }

  // (b) wh-in-situ with auxiliary deletion:
  // "Which artist did Beyonce marry" -> "Beyonce marry which artist"
  if (wh_idx == 0 && aux_idx < last && aux_idx + 1 < last) {
    std::string wh_phrase = to_lower(slice(qdoc, 0, aux_idx > 0 ? aux_idx - 1 : 0));
    out.push_back({slice(qdoc, aux_idx + 1, last - 1) + " " + wh_phrase, "", ""});
  } else if (wh_idx == 0 && last >= 2) {
    out.push_back({slice(qdoc, 1, last - 1) + " " + wh, "", ""});
  }

  // (c) single-synonym substitution, one variant per base keyword
  for (const std::string& k : base_keywords) {
    const Token* tok = nullptr;
    for (std::size_t i = 0; i < last; ++i) {
      if (qdoc.tokens[i].lemma == k) {
        tok = &qdoc.tokens[i];
        break;
      }
    }
    if (!tok) continue;
    auto syns = pack.synonyms.synonyms(k, pos_class_of(tok->pos));
    if (syns.empty()) continue;
    std::string text = qdoc.text.substr(0, tok->start) + syns.front() +
                       qdoc.text.substr(tok->end);
    out.push_back({std::move(text), k, syns.front()});
  }
  return out;
}

std::vector<std::string> extract_keywords(const AnnotatedText& doc, const ResourcePack& pack,
                                          std::size_t wh_idx, std::size_t wh_len) {
  std::vector<std::string> out;
  for (const Token& t : doc.tokens) {
    if (t.index >= wh_idx && t.index < wh_idx + wh_len) continue;
    if (is_punctuation_token(t)) continue;
    if (!is_content_tag(t.pos)) continue;
    std::string low = to_lower(t.surface);
    if (pack.annotator.is_auxiliary(low)) continue;
    if (pack.stopwords.contains(t.lemma) || pack.stopwords.contains(low)) continue;
    if (std::find(wh_words().begin(), wh_words().end(), t.lemma) != wh_words().end()) continue;
    if (std::find(out.begin(), out.end(), t.lemma) == out.end()) out.push_back(t.lemma);
  }
  return out;
}

}  // namespace

std::vector<std::string> paraphrase(std::string_view question, const ResourcePack& pack,
                                    std::size_t max_variants) {
  QuestionAnalysis qa = analyze_question(question, pack, 0);
  auto variants = generate_variants(qa.annotated, qa.keywords, pack);

  std::vector<std::string> out;
  const std::string original(question);
  for (auto& v : variants) {
    if (out.size() >= max_variants) break;
    if (v.text == original) continue;
    if (std::find(out.begin(), out.end(), v.text) != out.end()) continue;
    out.push_back(std::move(v.text));
  }
  return out;
}

QuestionAnalysis analyze_question(std::string_view question, const ResourcePack& pack,
                                  std::size_t max_paraphrases) {
  std::string trimmed(question);
  if (trimmed.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw EmptyQuestion("question is empty");
  }

  QuestionAnalysis qa;
  qa.annotated = tokenize_and_split(question);
  pack.annotator.annotate(qa.annotated);
  const AnnotatedText& doc = qa.annotated;

  // wh-word: first token from the wh set; "how many/much/long" is a unit
  std::size_t wh_idx = doc.tokens.size();
  std::size_t wh_len = 0;
  for (const Token& t : doc.tokens) {
    std::string low = to_lower(t.surface);
    if (std::find(wh_words().begin(), wh_words().end(), low) != wh_words().end()) {
      wh_idx = t.index;
      wh_len = 1;
      qa.wh_word = low;
      if (low == "how" && t.index + 1 < doc.tokens.size()) {
        std::string nxt = to_lower(doc.tokens[t.index + 1].surface);
        if (nxt == "many" || nxt == "much" || nxt == "long") {
          qa.wh_word = "how " + nxt;
          wh_len = 2;
        }
      }
      break;
    }
  }

  // head noun: first noun after the wh-word
  if (wh_idx < doc.tokens.size()) {
    for (std::size_t k = wh_idx + wh_len; k < doc.tokens.size(); ++k) {
      if (doc.tokens[k].pos.rfind("NN", 0) == 0) {
        qa.head_noun = doc.tokens[k].lemma;
        break;
      }
    }
  }

  qa.keywords = extract_keywords(doc, pack, wh_idx, wh_len);
  qa.expanded_keywords = qa.keywords;
  for (const auto& k : qa.keywords) qa.probe_base[k] = k;

  qa.expected_type = classify_answer_type(qa.wh_word, qa.head_noun, pack.type_triggers);

  if (max_paraphrases > 0) {
    auto variants = generate_variants(doc, qa.keywords, pack);
    std::size_t used = 0;
    std::vector<std::string> seen;
    for (const Variant& v : variants) {
      if (used >= max_paraphrases) break;
      if (v.text == std::string(question)) continue;
      if (std::find(seen.begin(), seen.end(), v.text) != seen.end()) continue;
      seen.push_back(v.text);
      ++used;

      AnnotatedText vdoc = tokenize_and_split(v.text);
      pack.annotator.annotate(vdoc);
      for (const std::string& lemma : extract_keywords(vdoc, pack, vdoc.tokens.size(), 0)) {
        if (std::find(qa.expanded_keywords.begin(), qa.expanded_keywords.end(), lemma) !=
            qa.expanded_keywords.end()) {
          continue;
        }
        qa.expanded_keywords.push_back(lemma);
        if (!v.substituted_base.empty() && lemma == v.substituted_synonym) {
          qa.probe_base[lemma] = v.substituted_base;
        }
      }
    }
  }

  // synonym map over every expanded keyword, pos class from the question
  // annotation when the lemma occurs there
  for (const std::string& k : qa.expanded_keywords) {
    char cls = '*';
    for (const Token& t : doc.tokens) {
      if (t.lemma == k) {
        cls = pos_class_of(t.pos);
        break;
      }
    }
    qa.synonym_map[k] = pack.synonyms.synonyms(k, cls);
  }
  return qa;
}

}  // namespace ruleqa
