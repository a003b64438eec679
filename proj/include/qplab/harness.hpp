#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qplab/corpus.hpp"

namespace qplab {

struct CampaignOptions {
  /// Theorem selectors; "all" selects every entry.
  std::vector<std::string> tags;
  /// Restrict to these entry ids when nonempty.
  std::vector<std::string> ids;
  FieldConfig field;
  uint64_t seed = 7;
  int samples = 3;
  int workers = 1;
  /// Recompute every entry at a second characteristic and compare invariants.
  bool confirm = true;
  /// Directory for cached entry results; empty disables the entry cache.
  std::string cache_dir;
};

struct CampaignResult {
  nlohmann::json report;
  bool passed = false;
};

CampaignResult run_campaign(const std::vector<CorpusEntry>& corpus, const CampaignOptions& opt);

/// The report without its "timing" object, for reproducibility comparisons.
nlohmann::json without_timing(const nlohmann::json& report);

/// Characteristic used for the confirmation pass of a campaign over `field`.
std::optional<FieldConfig> confirmation_field(const FieldConfig& field);

/// Evaluates a named closed-form oracle for one invariant of an entry.
nlohmann::json evaluate_oracle(const std::string& name, const std::string& key, const CorpusEntry& e);

/// Rewrites every `oracle:` expectation in the corpus text with the value the
/// oracle produces. `changes` receives one line per rewritten value.
std::string regen_oracles(const std::string& corpus_text, std::vector<std::string>* changes = nullptr);

}  // namespace qplab
