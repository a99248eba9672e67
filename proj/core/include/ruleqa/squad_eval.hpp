#ifndef RULEQA_SQUAD_EVAL_HPP
#define RULEQA_SQUAD_EVAL_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ruleqa/answer.hpp"

namespace ruleqa {

struct SquadRecord {
  std::string id;
  std::string question;
  std::string context;
  std::vector<std::string> gold_answers;  // empty iff unanswerable
  bool is_impossible = false;
};

/// Reads SQuAD v2.0 JSON; one record per qas entry, context replicated,
/// gold answers deduplicated with order preserved.
std::vector<SquadRecord> load_squad(const std::filesystem::path& path);

/// Lowercase, strip punctuation, drop whole-word articles (a/an/the),
/// collapse whitespace. Idempotent.
std::string normalize_answer(std::string_view text);

enum class Verdict { Correct, Incorrect, NoAnswer };
std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

enum class EvalMode { Paper, StrictV2 };
enum class RecallVariant { Paper30, Paper1000 };

/// Lenient containment judging: correct when a normalized gold answer is a
/// non-empty substring of the normalized prediction.
Verdict judge(const AnswerResult& result, const SquadRecord& record,
              EvalMode mode = EvalMode::Paper);

struct Metrics {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall_paper30 = 0.0;    // correct / (correct + no_answer)
  double recall_paper1000 = 0.0;  // correct / total
  double f1 = 0.0;
};

/// Percentages rounded to 2 decimals. Throws AllZeroCounts when all counts
/// are zero.
Metrics compute_metrics(long correct, long incorrect, long no_answer,
                        RecallVariant f1_recall = RecallVariant::Paper1000);

struct PerQuestion {
  std::string id;
  Verdict verdict = Verdict::Incorrect;
  std::string prediction;
  bool exact_match = false;
};

struct EvalReport {
  long total = 0;
  long correct = 0;
  long incorrect = 0;
  long no_answer = 0;
  long correct_strict = 0;  // strict exact-match count, reported side by side
  Metrics metrics;
  std::vector<PerQuestion> per_question;
};

struct EvalOptions {
  std::size_t limit = SIZE_MAX;
  unsigned seed = 0;  // seed 0 = first N in file order
  int jobs = 1;
  EvalMode mode = EvalMode::Paper;
  RecallVariant recall = RecallVariant::Paper1000;
  std::size_t max_paraphrases = 10;
};

/// Selects min(limit, available) records with the seeded sampler (evaluated
/// in input order), runs the pipeline on each, aggregates deterministically.
EvalReport run_eval(const std::vector<SquadRecord>& records, const ResourcePack& pack,
                    const ScoringConfig& cfg, const EvalOptions& options);

/// Recomputes a report's counts and metrics from saved per-question verdicts.
EvalReport replay_report(const nlohmann::json& saved, RecallVariant recall);

nlohmann::json to_json(const EvalReport& report);

/// The seeded sample of record indices, sorted ascending. Seed 0 keeps file
/// order (first N).
std::vector<std::size_t> sample_indices(std::size_t available, std::size_t limit, unsigned seed);

}  // namespace ruleqa

#endif
