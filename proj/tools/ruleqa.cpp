// ruleqa command line front end: ask / eval / repl / resources check.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ruleqa/config.hpp"
#include "ruleqa/errors.hpp"

namespace {

using namespace ruleqa;

std::string read_context(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open context file: " + path);
    buf << in.rdbuf();
  }
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

struct CommonOpts {
  std::string config_path;
  std::string resource_dir;
  int window = 0;      // 0 = keep config value
  int top_k = 0;
  std::string eval_mode;
};

RunConfig resolve_config(const CommonOpts& opts) {
  RunConfig rc;
  if (!opts.config_path.empty()) {
    rc = RunConfig::load(opts.config_path);
  } else if (const char* env = std::getenv("RULEQA_CONFIG"); env && *env) {
    rc = RunConfig::load(env);
  } else if (opts.resource_dir.empty()) {
    throw ConfigError("no configuration: pass --config, --resources, or set RULEQA_CONFIG");
  }
  if (!opts.resource_dir.empty()) rc.use_resource_dir(opts.resource_dir);
  if (opts.window != 0) rc.scoring.window = opts.window;
  if (opts.top_k != 0) rc.scoring.top_k = opts.top_k;
  if (!opts.eval_mode.empty()) rc.eval_mode = eval_mode_from_string(opts.eval_mode);
  rc.scoring.validate();
  rc.validate_paths();
  return rc;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "JSON config file (env RULEQA_CONFIG)");
  cmd->add_option("--resources", opts.resource_dir, "resource pack directory");
  cmd->add_option("--window", opts.window, "candidate window size (3-5)");
  cmd->add_option("--top-k", opts.top_k, "sentences kept per match criterion");
  cmd->add_option("--eval-mode", opts.eval_mode, "paper | strict-v2");
}

int run_ask(const CommonOpts& opts, const std::string& context_path,
            const std::string& question, bool trace) {
  RunConfig rc = resolve_config(opts);
  ResourcePack pack = rc.load_resources();
  std::string context = read_context(context_path);
  AnswerResult result = answer_question(question, context, pack, rc.scoring, rc.max_paraphrases);
  std::cout << to_json(result, trace).dump(2) << "\n";
  return result.variant == AnswerResult::Variant::NoAnswer ? 2 : 0;
}

void print_summary(const EvalReport& r) {
  std::cout << "total        " << r.total << "\n"
            << "correct      " << r.correct << "\n"
            << "incorrect    " << r.incorrect << "\n"
            << "no_answer    " << r.no_answer << "\n"
            << "exact match  " << r.correct_strict << "\n"
            << "accuracy     " << r.metrics.accuracy << "\n"
            << "precision    " << r.metrics.precision << "\n"
            << "recall (30)  " << r.metrics.recall_paper30 << "\n"
            << "recall (1k)  " << r.metrics.recall_paper1000 << "\n"
            << "f1           " << r.metrics.f1 << "\n";
}

int run_eval(const CommonOpts& opts, const std::string& dataset, long limit, unsigned seed,
             const std::string& report_path, int jobs, const std::string& replay_path,
             const std::string& recall) {
  RecallVariant recall_variant = RecallVariant::Paper1000;
  EvalReport report;
  if (!replay_path.empty()) {
    if (!recall.empty()) recall_variant = recall_variant_from_string(recall);
    std::ifstream in(replay_path);
    if (!in) throw ConfigError("cannot open replay file: " + replay_path);
    nlohmann::json saved = nlohmann::json::parse(in);
    report = replay_report(saved, recall_variant);
  } else {
    RunConfig rc = resolve_config(opts);
    if (!recall.empty()) rc.recall_variant = recall_variant_from_string(recall);
    ResourcePack pack = rc.load_resources();
    std::vector<SquadRecord> records = load_squad(dataset);
    EvalOptions eo;
    eo.limit = static_cast<std::size_t>(limit);
    eo.seed = seed;
    eo.jobs = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    eo.mode = rc.eval_mode;
    eo.recall = rc.recall_variant;
    eo.max_paraphrases = rc.max_paraphrases;
    report = run_eval(records, pack, rc.scoring, eo);
  }
  print_summary(report);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw ConfigError("cannot write report: " + report_path);
    out << to_json(report).dump(2) << "\n";
  }
  return 0;
}

int run_repl(const CommonOpts& opts, const std::string& context_path, bool trace) {
  RunConfig rc = resolve_config(opts);
  ResourcePack pack = rc.load_resources();
  std::string context = read_context(context_path);
  std::string line;
  while (true) {
    std::cout << "? " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line.empty()) continue;
    if (line == "quit" || line == "exit") break;
    try {
      AnswerResult result = answer_question(line, context, pack, rc.scoring, rc.max_paraphrases);
      if (trace) {
        for (const auto& t : result.trace) std::cout << "  # " << t << "\n";
      }
      std::cout << result.text << "\n";
    } catch (const Error& e) {
      std::cout << "error: " << e.what() << "\n";
    }
  }
  return 0;
}

int run_resources_check(const CommonOpts& opts) {
  RunConfig rc = resolve_config(opts);
  ResourcePack pack = rc.load_resources();
  std::cout << "embeddings    " << pack.embeddings.size() << " vectors, dimension "
            << pack.embeddings.dimension() << "\n"
            << "synonyms      " << pack.synonyms.size() << " rows\n"
            << "stopwords     " << pack.stopwords.size() << " words\n"
            << "type triggers " << pack.type_triggers.size() << " nouns\n"
            << "annotator     loaded\n"
            << "ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rule-based extractive question answering"};
  app.require_subcommand(1);

  CommonOpts ask_opts, eval_opts, repl_opts, res_opts;

  auto* ask = app.add_subcommand("ask", "answer one question over a context");
  add_common(ask, ask_opts);
  std::string ask_context, ask_question;
  bool ask_trace = false;
  ask->add_option("--context", ask_context, "context file ('-' or empty reads stdin)");
  ask->add_option("--question", ask_question, "question text")->required();
  ask->add_flag("--trace", ask_trace, "include the decision trace");

  auto* eval = app.add_subcommand("eval", "evaluate over a SQuAD v2.0 dataset");
  add_common(eval, eval_opts);
  std::string eval_dataset, eval_report, eval_replay, eval_recall;
  long eval_limit = std::numeric_limits<long>::max();
  unsigned eval_seed = 0;
  int eval_jobs = 0;
  eval->add_option("--dataset", eval_dataset, "SQuAD v2.0 JSON file");
  eval->add_option("--limit", eval_limit, "number of questions to sample");
  eval->add_option("--seed", eval_seed, "sampler seed (0 = first N in file order)");
  eval->add_option("--report", eval_report, "write the report JSON here");
  eval->add_option("--jobs", eval_jobs, "worker threads (0 = number of processors)");
  eval->add_option("--replay", eval_replay, "recompute metrics from a saved report");
  eval->add_option("--recall", eval_recall, "paper30 | paper1000 (feeds f1)");

  auto* repl = app.add_subcommand("repl", "interactive loop over a loaded context");
  add_common(repl, repl_opts);
  std::string repl_context;
  bool repl_trace = false;
  repl->add_option("--context", repl_context, "context file")->required();
  repl->add_flag("--trace", repl_trace, "print the decision trace per answer");

  auto* resources = app.add_subcommand("resources", "resource management");
  auto* check = resources->add_subcommand("check", "validate all resource files");
  resources->require_subcommand(1);
  add_common(check, res_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*ask) return run_ask(ask_opts, ask_context, ask_question, ask_trace);
    if (*eval) {
      if (eval_limit <= 0) {
        std::cerr << "error: --limit must be a positive integer\n";
        return 1;
      }
      if (eval_replay.empty() && eval_dataset.empty()) {
        std::cerr << "error: eval needs --dataset (or --replay)\n";
        return 1;
      }
      return run_eval(eval_opts, eval_dataset, eval_limit, eval_seed, eval_report, eval_jobs,
                      eval_replay, eval_recall);
    }
    if (*repl) return run_repl(repl_opts, repl_context, repl_trace);
    if (*check) return run_resources_check(res_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
