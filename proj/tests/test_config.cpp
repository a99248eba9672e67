#include <doctest.h>

#include <fstream>

#include "ruleqa/config.hpp"
#include "ruleqa/errors.hpp"
#include "test_util.hpp"

using namespace ruleqa;

TEST_CASE("use_resource_dir points at the standard layout") {
  RunConfig rc;
  rc.use_resource_dir(testutil::resource_dir());
  CHECK_NOTHROW(rc.validate_paths());
  CHECK(rc.embeddings.filename() == "embeddings.txt");
  CHECK(rc.synonyms.filename() == "synonyms.tsv");
  CHECK(rc.stopwords.filename() == "stopwords.txt");
  CHECK(rc.type_triggers.filename() == "type_triggers.tsv");
  CHECK(rc.annotator_dir.filename() == "annotator");
}

TEST_CASE("missing paths are named in the error") {
  RunConfig rc;
  rc.use_resource_dir(testutil::resource_dir());
  rc.embeddings = "/nonexistent/embeddings.txt";
  try {
    rc.validate_paths();
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("embeddings") != std::string::npos);
  }
}

TEST_CASE("config file: relative paths resolve against the config directory") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("ruleqa_cfg_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  fs::path link_free_resources = testutil::resource_dir();

  nlohmann::json j = {
      {"embeddings", (link_free_resources / "embeddings.txt").string()},
      {"synonyms", (link_free_resources / "synonyms.tsv").string()},
      {"stopwords", "stopwords_local.txt"},  // relative: resolves next to the file
      {"annotator", (link_free_resources / "annotator").string()},
      {"type_triggers", (link_free_resources / "type_triggers.tsv").string()},
      {"w_exact", 0.9},
      {"w_synonym", 0.65},
      {"window", 4},
      {"top_k", 2},
      {"max_paraphrases", 5},
      {"eval_mode", "strict-v2"},
      {"recall_variant", "paper30"},
  };
  {
    std::ofstream(dir / "stopwords_local.txt") << "the\nof\n";
    std::ofstream(dir / "cfg.json") << j.dump(2);
  }

  auto rc = RunConfig::load(dir / "cfg.json");
  CHECK(rc.stopwords == dir / "stopwords_local.txt");
  CHECK(rc.scoring.w_synonym == 0.65);
  CHECK(rc.scoring.window == 4);
  CHECK(rc.scoring.top_k == 2);
  CHECK(rc.max_paraphrases == 5);
  CHECK(rc.eval_mode == EvalMode::StrictV2);
  CHECK(rc.recall_variant == RecallVariant::Paper30);
  CHECK_NOTHROW(rc.validate_paths());
  auto pack = rc.load_resources();
  CHECK(pack.stopwords.size() == 2);

  fs::remove_all(dir);
}

TEST_CASE("config file errors") {
  CHECK_THROWS_AS(RunConfig::load("/nonexistent/cfg.json"), ConfigError);
  testutil::TempFile bad("{broken", ".json");
  CHECK_THROWS_AS(RunConfig::load(bad.path), ConfigError);
}

TEST_CASE("mode and recall parsing") {
  CHECK(eval_mode_from_string("paper") == EvalMode::Paper);
  CHECK(eval_mode_from_string("strict-v2") == EvalMode::StrictV2);
  CHECK_THROWS_AS(eval_mode_from_string("loose"), ConfigError);
  CHECK(recall_variant_from_string("paper30") == RecallVariant::Paper30);
  CHECK(recall_variant_from_string("paper1000") == RecallVariant::Paper1000);
  CHECK_THROWS_AS(recall_variant_from_string("other"), ConfigError);
}

TEST_CASE("defaults survive a minimal config") {
  RunConfig rc = RunConfig::from_json(nlohmann::json::object(), ".");
  CHECK(rc.scoring.w_exact == 0.9);
  CHECK(rc.scoring.w_synonym == 0.7);
  CHECK(rc.scoring.w_embedding == 0.6);
  CHECK(rc.scoring.cosine_threshold == 0.6);
  CHECK(rc.scoring.window == 5);
  CHECK(rc.scoring.top_k == 3);
  CHECK(rc.max_paraphrases == 10);
  CHECK(rc.eval_mode == EvalMode::Paper);
  CHECK(rc.recall_variant == RecallVariant::Paper1000);
}
