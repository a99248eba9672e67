#include "ruleqa/squad_eval.hpp"
#include "ruleqa/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <thread>

namespace ruleqa {

std::vector<SquadRecord> load_squad(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open dataset: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed JSON in " + path.string() + ": " + e.what());
  }
  if (!j.contains("data") || !j.at("data").is_array()) {
    throw SchemaError("missing 'data' array");
  }

  std::vector<SquadRecord> out;
  for (const auto& article : j.at("data")) {
    if (!article.contains("paragraphs")) throw SchemaError("article missing 'paragraphs'");
    for (const auto& para : article.at("paragraphs")) {
      if (!para.contains("context") || !para.contains("qas")) {
        throw SchemaError("paragraph missing 'context' or 'qas'");
      }
      const std::string context = para.at("context").get<std::string>();
      for (const auto& qa : para.at("qas")) {
        SquadRecord rec;
        rec.context = context;
        if (!qa.contains("id") || !qa.contains("question")) {
          throw SchemaError("qas entry missing 'id' or 'question'");
        }
        rec.id = qa.at("id").get<std::string>();
        rec.question = qa.at("question").get<std::string>();
        rec.is_impossible = qa.value("is_impossible", false);
        if (qa.contains("answers")) {
          for (const auto& ans : qa.at("answers")) {
            std::string text = ans.value("text", "");
            if (std::find(rec.gold_answers.begin(), rec.gold_answers.end(), text) ==
                rec.gold_answers.end()) {
              rec.gold_answers.push_back(std::move(text));
            }
          }
        }
        if (rec.gold_answers.empty()) rec.is_impossible = true;
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

std::string normalize_answer(std::string_view text) {
  std::string lowered;
  lowered.reserve(text.size());
  for (char c : text) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 0x80 && std::ispunct(u)) continue;
    if (u >= 0x80) continue;  // non-ASCII treated as punctuation
    lowered.push_back(static_cast<char>(std::tolower(u)));
  }
  std::string out;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    if (word != "a" && word != "an" && word != "the") {
      if (!out.empty()) out.push_back(' ');
      out += word;
    }
    word.clear();
  };
  for (char c : lowered) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      word.push_back(c);
    }
  }
  flush();
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Correct: return "CORRECT";
    case Verdict::Incorrect: return "INCORRECT";
    case Verdict::NoAnswer: return "NO_ANSWER";
  }
  return "INCORRECT";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "CORRECT") return Verdict::Correct;
  if (s == "INCORRECT") return Verdict::Incorrect;
  if (s == "NO_ANSWER") return Verdict::NoAnswer;
  throw FormatError("unknown verdict: " + std::string(s));
}

Verdict judge(const AnswerResult& result, const SquadRecord& record, EvalMode mode) {
  if (result.variant == AnswerResult::Variant::NoAnswer) {
    if (record.is_impossible && mode == EvalMode::StrictV2) return Verdict::Correct;
    return Verdict::NoAnswer;
  }
  const std::string pred = normalize_answer(result.text);
  for (const std::string& gold : record.gold_answers) {
    const std::string g = normalize_answer(gold);
    if (!g.empty() && pred.find(g) != std::string::npos) return Verdict::Correct;
  }
  return Verdict::Incorrect;
}

namespace {

double round2(double pct) { return std::round(pct * 100.0) / 100.0; }

}  // namespace

Metrics compute_metrics(long correct, long incorrect, long no_answer, RecallVariant f1_recall) {
  if (correct < 0 || incorrect < 0 || no_answer < 0) {
    throw AllZeroCounts("counts must be non-negative");
  }
  const long total = correct + incorrect + no_answer;
  if (total == 0) throw AllZeroCounts("all verdict counts are zero");

  Metrics m;
  const double c = static_cast<double>(correct);
  m.accuracy = 100.0 * c / total;
  m.precision = (correct + incorrect) > 0 ? 100.0 * c / (correct + incorrect) : 0.0;
  m.recall_paper30 = (correct + no_answer) > 0 ? 100.0 * c / (correct + no_answer) : 0.0;
  m.recall_paper1000 = 100.0 * c / total;
  const double recall =
      f1_recall == RecallVariant::Paper30 ? m.recall_paper30 : m.recall_paper1000;
  m.f1 = (m.precision + recall) > 0 ? 2.0 * m.precision * recall / (m.precision + recall) : 0.0;

  m.accuracy = round2(m.accuracy);
  m.precision = round2(m.precision);
  m.recall_paper30 = round2(m.recall_paper30);
  m.recall_paper1000 = round2(m.recall_paper1000);
  m.f1 = round2(m.f1);
  return m;
}

std::vector<std::size_t> sample_indices(std::size_t available, std::size_t limit, unsigned seed) {
  const std::size_t n = std::min(available, limit);
  std::vector<std::size_t> all(available);
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (seed != 0) {
    std::mt19937 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
  }
  all.resize(n);
  std::sort(all.begin(), all.end());  // evaluation order is input order
  return all;
}

EvalReport run_eval(const std::vector<SquadRecord>& records, const ResourcePack& pack,
                    const ScoringConfig& cfg, const EvalOptions& options) {
  std::vector<std::size_t> picked;
  if (options.mode == EvalMode::Paper) {
    // paper mode scores answerable records only
    std::vector<std::size_t> answerable;
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (!records[i].is_impossible) answerable.push_back(i);
    }
    for (std::size_t i : sample_indices(answerable.size(), options.limit, options.seed)) {
      picked.push_back(answerable[i]);
    }
  } else {
    picked = sample_indices(records.size(), options.limit, options.seed);
  }

  std::vector<PerQuestion> results(picked.size());
  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const SquadRecord& rec = records[picked[i]];
      PerQuestion pq;
      pq.id = rec.id;
      AnswerResult ans;
      try {
        ans = answer_question(rec.question, rec.context, pack, cfg, options.max_paraphrases);
      } catch (const Error&) {
        ans.variant = AnswerResult::Variant::NoAnswer;
        ans.text = kNoAnswerMessage;
      }
      pq.prediction = ans.text;
      pq.verdict = judge(ans, rec, options.mode);
      if (ans.variant != AnswerResult::Variant::NoAnswer) {
        const std::string pred = normalize_answer(ans.text);
        for (const std::string& gold : rec.gold_answers) {
          if (normalize_answer(gold) == pred && !pred.empty()) {
            pq.exact_match = true;
            break;
          }
        }
      }
      results[i] = std::move(pq);
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || results.size() < 2) {
    worker(0, results.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (results.size() + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      std::size_t b = static_cast<std::size_t>(t) * chunk;
      std::size_t e = std::min(results.size(), b + chunk);
      if (b >= e) break;
      pool.emplace_back(worker, b, e);
    }
    for (auto& th : pool) th.join();
  }

  EvalReport report;
  report.per_question = std::move(results);
  report.total = static_cast<long>(report.per_question.size());
  for (const PerQuestion& pq : report.per_question) {
    switch (pq.verdict) {
      case Verdict::Correct: ++report.correct; break;
      case Verdict::Incorrect: ++report.incorrect; break;
      case Verdict::NoAnswer: ++report.no_answer; break;
    }
    if (pq.exact_match) ++report.correct_strict;
  }
  if (report.total > 0) {
    report.metrics =
        compute_metrics(report.correct, report.incorrect, report.no_answer, options.recall);
  }
  return report;
}

EvalReport replay_report(const nlohmann::json& saved, RecallVariant recall) {
  const nlohmann::json* per = nullptr;
  if (saved.is_array()) {
    per = &saved;
  } else if (saved.contains("per_question")) {
    per = &saved.at("per_question");
  } else {
    throw SchemaError("replay input needs a 'per_question' array");
  }
  EvalReport report;
  for (const auto& e : *per) {
    PerQuestion pq;
    pq.id = e.value("id", "");
    pq.verdict = verdict_from_string(e.at("verdict").get<std::string>());
    pq.prediction = e.value("prediction", "");
    pq.exact_match = e.value("exact_match", false);
    switch (pq.verdict) {
      case Verdict::Correct: ++report.correct; break;
      case Verdict::Incorrect: ++report.incorrect; break;
      case Verdict::NoAnswer: ++report.no_answer; break;
    }
    if (pq.exact_match) ++report.correct_strict;
    report.per_question.push_back(std::move(pq));
  }
  report.total = static_cast<long>(report.per_question.size());
  report.metrics = compute_metrics(report.correct, report.incorrect, report.no_answer, recall);
  return report;
}

nlohmann::json to_json(const EvalReport& r) {
  nlohmann::json per = nlohmann::json::array();
  for (const PerQuestion& pq : r.per_question) {
    per.push_back({{"id", pq.id},
                   {"verdict", std::string(to_string(pq.verdict))},
                   {"prediction", pq.prediction},
                   {"exact_match", pq.exact_match}});
  }
  return {{"total", r.total},
          {"correct", r.correct},
          {"incorrect", r.incorrect},
          {"no_answer", r.no_answer},
          {"correct_strict", r.correct_strict},
          {"accuracy", r.metrics.accuracy},
          {"precision", r.metrics.precision},
          {"recall_paper30", r.metrics.recall_paper30},
          {"recall_paper1000", r.metrics.recall_paper1000},
          {"f1", r.metrics.f1},
          {"per_question", std::move(per)}};
}

}  // namespace ruleqa
