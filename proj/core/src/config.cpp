#include "ruleqa/config.hpp"
#include "ruleqa/errors.hpp"

#include <fstream>

namespace ruleqa {

EvalMode eval_mode_from_string(std::string_view s) {
  if (s == "paper") return EvalMode::Paper;
  if (s == "strict-v2") return EvalMode::StrictV2;
  throw ConfigError("eval_mode must be 'paper' or 'strict-v2', got '" + std::string(s) + "'");
}

RecallVariant recall_variant_from_string(std::string_view s) {
  if (s == "paper30") return RecallVariant::Paper30;
  if (s == "paper1000") return RecallVariant::Paper1000;
  throw ConfigError("recall_variant must be 'paper30' or 'paper1000', got '" + std::string(s) + "'");
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed config JSON in " + path.string() + ": " + e.what());
  }
  return from_json(j, path.parent_path());
}

RunConfig RunConfig::from_json(const nlohmann::json& j, const std::filesystem::path& base) {
  RunConfig cfg;
  auto path_of = [&](const char* key) -> std::filesystem::path {
    if (!j.contains(key)) return {};
    std::filesystem::path p = j.at(key).get<std::string>();
    return p.is_absolute() ? p : base / p;
  };
  cfg.embeddings = path_of("embeddings");
  cfg.synonyms = path_of("synonyms");
  cfg.stopwords = path_of("stopwords");
  cfg.annotator_dir = path_of("annotator");
  cfg.type_triggers = path_of("type_triggers");

  cfg.scoring.w_exact = j.value("w_exact", cfg.scoring.w_exact);
  cfg.scoring.w_synonym = j.value("w_synonym", cfg.scoring.w_synonym);
  cfg.scoring.w_embedding = j.value("w_embedding", cfg.scoring.w_embedding);
  cfg.scoring.cosine_threshold = j.value("cosine_threshold", cfg.scoring.cosine_threshold);
  cfg.scoring.window = j.value("window", cfg.scoring.window);
  cfg.scoring.top_k = j.value("top_k", cfg.scoring.top_k);
  cfg.scoring.allow_window_override = j.value("allow_window_override", false);
  cfg.max_paraphrases = j.value("max_paraphrases", cfg.max_paraphrases);
  if (j.contains("eval_mode")) cfg.eval_mode = eval_mode_from_string(j.at("eval_mode").get<std::string>());
  if (j.contains("recall_variant")) {
    cfg.recall_variant = recall_variant_from_string(j.at("recall_variant").get<std::string>());
  }
  cfg.scoring.validate();
  return cfg;
}

void RunConfig::use_resource_dir(const std::filesystem::path& dir) {
  embeddings = dir / "embeddings.txt";
  synonyms = dir / "synonyms.tsv";
  stopwords = dir / "stopwords.txt";
  annotator_dir = dir / "annotator";
  type_triggers = dir / "type_triggers.tsv";
}

void RunConfig::validate_paths() const {
  const std::pair<const char*, const std::filesystem::path*> paths[] = {
      {"embeddings", &embeddings},
      {"synonyms", &synonyms},
      {"stopwords", &stopwords},
      {"annotator", &annotator_dir},
      {"type_triggers", &type_triggers}};
  for (const auto& [name, p] : paths) {
    if (p->empty()) throw ConfigError(std::string("resource path not set: ") + name);
    if (!std::filesystem::exists(*p)) {
      throw ConfigError(std::string(name) + " path does not exist: " + p->string());
    }
  }
}

ResourcePack RunConfig::load_resources() const {
  validate_paths();
  ResourcePack pack;
  pack.stopwords = StopwordList::load(stopwords);
  pack.synonyms = SynonymLexicon::load(synonyms);
  pack.embeddings = EmbeddingStore::load(embeddings);
  pack.annotator = Annotator(AnnotatorLexicons::load(annotator_dir));
  pack.type_triggers = TypeTriggerLexicon::load(type_triggers);
  return pack;
}

}  // namespace ruleqa
