#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "slogan/annotate.hpp"
#include "slogan/jsonl.hpp"

namespace slogan::corpus {

enum class Split { train, valid, test };

std::string_view to_string(Split split);
Split parse_split(std::string_view name);

struct CompanyRecord {
  std::string id;  // from the input row when present, else "rec-<line>"
  std::string company_name;
  std::string url;
  std::optional<std::string> industry;
  std::string raw_title;
  std::string raw_description;
};

struct SloganPair {
  std::string id;
  std::string company_name;
  std::string description;
  std::string slogan;
  Split split = Split::train;
  std::optional<std::string> industry;
};

struct CleaningConfig {
  std::vector<std::string> blocked_phrases = default_blocked_phrases();
  std::vector<std::string> structural_affixes = default_structural_affixes();
  std::string separator_chars = "|<>-/";
  std::size_t min_desc_words = 10;
  std::size_t min_slogan_words = 3;
  std::size_t max_slogan_words = 12;
  std::size_t max_slogan_punct = 3;
  std::size_t min_punct_free_run = 3;
  double max_gpe_ratio = 0.30;

  static std::vector<std::string> default_blocked_phrases();
  static std::vector<std::string> default_structural_affixes();

  // Throws ValidationError when a count is zero or the ratio is outside (0,1].
  void validate() const;
};

// Rejection reasons, each tied to the cleaning step that raises it.
enum class Rejection {
  InvalidRecord,  // 1: no company name
  Empty,          // 2: nothing left of the title
  Blocked,        // 3
  NameInMiddle,   // 5
  NoChunk,        // 5
  Duplicate,      // 6
  Length,         // 7
  NonEnglish,     // 8
  Punctuation,    // 9
  GpeRatio,       // 10
};

int step_of(Rejection reason);
std::string_view to_string(Rejection reason);

struct RejectionEntry {
  std::string id;
  Rejection reason;
};

// Steps 2-5 on an already delexicalised title. `company_name` is used to
// re-check the chosen chunk until no further prefix of the name is found.
std::variant<std::string, Rejection> extract_title_slogan(
    std::string_view company_name, std::string_view delexicalised_title,
    const CleaningConfig& config);

// Convenience overload that applies step 1 to the record's title itself.
std::variant<std::string, Rejection> extract_title_slogan(
    const CompanyRecord& record, const CleaningConfig& config);

// Step 9 predicates, exposed for tests.
std::size_t punctuation_count(std::string_view slogan);
std::size_t longest_punct_free_run(std::string_view slogan);
// Step 10: share of the slogan's bytes covered by GPE spans.
double gpe_ratio(std::string_view slogan, const annotate::EntityTagger& tagger);

struct CleanResult {
  std::vector<SloganPair> pairs;
  std::vector<RejectionEntry> rejections;
};

CleanResult clean_pipeline(const std::vector<CompanyRecord>& records,
                           const CleaningConfig& config,
                           const annotate::EntityTagger& tagger,
                           const annotate::LanguageDetector& language);

struct Partition {
  std::vector<SloganPair> train;
  std::vector<SloganPair> valid;
  std::vector<SloganPair> test;
};

// Seeded shuffle, then the first round(n*valid) go to valid and the next
// round(n*test) to test. Each part keeps input order. Throws
// ValidationError("too-small") under 3 pairs.
Partition split_dataset(std::vector<SloganPair> pairs, double valid_fraction = 0.02,
                        double test_fraction = 0.02, std::uint64_t seed = 0);

struct EntityRow {
  double pct_desc = 0.0;
  double pct_slogan = 0.0;
  double pct_slogan_minus_desc = 0.0;
};

struct CorpusStats {
  std::size_t size = 0;
  double pct_slogan_in_desc = 0.0;
  double pct_unigram_overlap = 0.0;
  double pct_desc_with_company = 0.0;
  std::map<std::string, EntityRow> entity_type_table;
  std::map<std::string, std::size_t> industry_histogram;
  std::map<std::size_t, std::size_t> slogan_length_histogram;
  std::map<std::size_t, std::size_t> description_length_histogram;
};

// Share of slogan words (with repeats) that occur among the description's
// words, both lowercased.
double unigram_overlap(std::string_view slogan, std::string_view description);

// Throws ValidationError on an empty corpus.
CorpusStats compute_corpus_stats(const std::vector<SloganPair>& pairs,
                                 const annotate::EntityTagger& tagger);

CompanyRecord record_from_json(const io::Json& row, std::size_t line_index);
SloganPair pair_from_json(const io::Json& row);
io::Json to_json(const SloganPair& pair);
io::Json to_json(const RejectionEntry& entry);
io::Json to_json(const CorpusStats& stats);

// Overrides fields present in `json` (keys mirror the field names).
CleaningConfig cleaning_config_from_json(const io::Json& json);

}  // namespace slogan::corpus
