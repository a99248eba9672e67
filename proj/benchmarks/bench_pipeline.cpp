#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "ruleqa/config.hpp"

namespace {

using namespace ruleqa;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string s = buf.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

const ResourcePack& pack() {
  static const ResourcePack p = [] {
    RunConfig rc;
    rc.use_resource_dir(RULEQA_RESOURCE_DIR);
    return rc.load_resources();
  }();
  return p;
}

const std::string& context() {
  static const std::string c = slurp(std::string(RULEQA_TEST_DATA) + "/ctx1.txt");
  return c;
}

void BM_Tokenize(benchmark::State& state) {
  const std::string& text = context();
  for (auto _ : state) {
    auto doc = tokenize_and_split(text);
    benchmark::DoNotOptimize(doc.tokens.size());
  }
}
BENCHMARK(BM_Tokenize);

void BM_Annotate(benchmark::State& state) {
  const std::string& text = context();
  for (auto _ : state) {
    auto doc = tokenize_and_split(text);
    pack().annotator.annotate(doc);
    benchmark::DoNotOptimize(doc.tokens.size());
  }
}
BENCHMARK(BM_Annotate);

void BM_Cosine(benchmark::State& state) {
  auto a = pack().embeddings.lookup("song");
  auto b = pack().embeddings.lookup("melody");
  for (auto _ : state) benchmark::DoNotOptimize(cosine(a, b));
}
BENCHMARK(BM_Cosine);

void BM_AnalyzeQuestion(benchmark::State& state) {
  for (auto _ : state) {
    auto qa = analyze_question("Who managed the Destiny's Child group?", pack());
    benchmark::DoNotOptimize(qa.keywords.size());
  }
}
BENCHMARK(BM_AnalyzeQuestion);

void BM_AnswerQuestion(benchmark::State& state) {
  const std::string& text = context();
  ScoringConfig cfg;
  for (auto _ : state) {
    auto r = answer_question("Who managed the Destiny's Child group?", text, pack(), cfg);
    benchmark::DoNotOptimize(r.score);
  }
}
BENCHMARK(BM_AnswerQuestion);

}  // namespace

BENCHMARK_MAIN();
