#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qplab/variety.hpp"

namespace qplab {

/// Expected value of one invariant with where it comes from: "published",
/// "trivial" or "oracle:<name>".
struct Expectation {
  std::string key;
  nlohmann::json value;
  std::string source;
  int line = 0;  // 1-based line in the corpus file
};

struct CorpusEntry {
  std::string id;
  std::string family;
  std::vector<int> params;
  bool on_scroll = false;
  /// genus-3 base points: "", "rational:0,1", "generic:4".
  std::string points;
  /// "none", "self", "constructed", "extract", or "<family>:<params>".
  std::string container = "none";
  uint64_t seed = 1;
  std::vector<std::string> tags;
  std::vector<Expectation> expect;

  bool has_tag(const std::string& t) const;
  /// Canonical one-line description used for cache keys and reports.
  std::string signature() const;
};

/// Parses the restricted TOML subset used by the corpus: `[[entry]]` tables
/// with `key = value` lines (integers, booleans, strings, arrays) and
/// `expect.<name> = [value, "source"]`.
std::vector<CorpusEntry> parse_corpus(const std::string& text);

/// Names recognized in theorem selectors.
const std::vector<std::string>& known_tags();

template <class F>
struct BuiltEntry {
  Variety<F> X;
  std::optional<Variety<F>> container;
  bool extract_container = false;
};

template <class F>
BuiltEntry<F> build_entry(const CorpusEntry& e, const F& field, uint64_t seed);

/// Builds a variety from a family name and integer parameters, for the CLI.
template <class F>
Variety<F> build_family(const std::string& family, const std::vector<int>& params, bool on_scroll,
                        const std::string& points, const F& field, uint64_t seed,
                        std::optional<Variety<F>>* container = nullptr);

}  // namespace qplab
