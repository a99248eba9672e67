#ifndef RULEQA_CONFIG_HPP
#define RULEQA_CONFIG_HPP

#include <filesystem>

#include <json.hpp>

#include "ruleqa/squad_eval.hpp"

namespace ruleqa {

EvalMode eval_mode_from_string(std::string_view s);
RecallVariant recall_variant_from_string(std::string_view s);

/// Resource paths plus every tunable; JSON config file, CLI flags override.
struct RunConfig {
  std::filesystem::path embeddings;
  std::filesystem::path synonyms;
  std::filesystem::path stopwords;
  std::filesystem::path annotator_dir;
  std::filesystem::path type_triggers;

  ScoringConfig scoring;
  std::size_t max_paraphrases = 10;
  EvalMode eval_mode = EvalMode::Paper;
  RecallVariant recall_variant = RecallVariant::Paper1000;

  /// Relative paths in the file resolve against the config file's directory.
  static RunConfig load(const std::filesystem::path& path);
  static RunConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);

  /// Points every resource path at a pack directory with the standard layout
  /// (stopwords.txt, synonyms.tsv, embeddings.txt, type_triggers.tsv,
  /// annotator/).
  void use_resource_dir(const std::filesystem::path& dir);

  /// Throws ConfigError naming the first missing path.
  void validate_paths() const;

  ResourcePack load_resources() const;
};

}  // namespace ruleqa

#endif
