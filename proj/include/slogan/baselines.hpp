#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slogan/annotate.hpp"
#include "slogan/rng.hpp"

namespace slogan::baselines {

using annotate::PosTag;
using annotate::PosTagger;

// Text up to and including the first '.', '!' or '?' that is followed by
// whitespace or the end, skipping known abbreviations and initials.
std::string first_sentence(std::string_view description);

// First k whitespace tokens, cut from the original text.
std::string first_k_words(std::string_view description, std::size_t k = 11);

struct ReferencePair {
  std::string description;
  std::string slogan;
};

struct KPoint {
  std::size_t k = 0;
  double rouge1 = 0.0;  // mean F1
  double rouge2 = 0.0;
  double rougeL = 0.0;
};

struct SweepResult {
  std::size_t best_k = 0;
  std::vector<KPoint> curve;
};

// Argmax of mean ROUGE-1 F1 over k in [k_min, k_max]; ties go to the
// smaller k. Throws ValidationError for empty pairs or an empty range.
SweepResult sweep_k(std::span<const ReferencePair> pairs, std::size_t k_min, std::size_t k_max);

struct Skeleton {
  std::vector<PosTag> pos_sequence;
  std::size_t frequency = 0;
  std::string example;

  std::string key() const;  // tags joined by spaces
};

// Tag sequences of slogans with 3-12 tokens, most frequent first (ties by
// key). The first slogan seen for a sequence is kept as its example.
std::vector<Skeleton> mine_skeletons(std::span<const std::string> slogans, const PosTagger& tagger);

struct Keyword {
  std::string word;  // surface of the first occurrence
  PosTag tag;
  std::size_t count = 0;
  std::size_t first_position = 0;  // token index
};

// Nouns, verbs and adjectives that are not stop words, ranked by frequency
// and then by first position.
std::vector<Keyword> extract_keywords(std::string_view description, const PosTagger& tagger);

// Copies the case pattern of `model` onto `word` (upper, title or lower
// first letter).
std::string match_case(std::string_view word, std::string_view model);

// Swaps a[i] and b[j]; each incoming word takes the case of the word it
// replaces.
std::pair<std::vector<std::string>, std::vector<std::string>> crossover(
    std::vector<std::string> a, std::vector<std::string> b, std::size_t i, std::size_t j);

// Replaces words[index] with `replacement` in the case of the old word.
std::vector<std::string> mutate(std::vector<std::string> words, std::size_t index,
                                std::string_view replacement);

// Joins tokens, attaching closing punctuation to the previous token and
// opening brackets to the next.
std::string detokenize(std::span<const std::string> tokens);

struct ScoringWeights {
  double keyword_coverage = 0.4;
  double length_prior = 0.1;
  double skeleton_prior = 0.2;
  double repetition_penalty = 0.3;
};

struct GaConfig {
  std::size_t population_size = 50;
  std::size_t generations = 30;
  double mutation_rate = 0.3;
  double crossover_rate = 0.6;
  double elite_fraction = 0.1;
  std::uint64_t seed = 0;
  std::size_t num_candidates = 10;
  ScoringWeights scoring_weights;

  // Throws ValidationError on rates outside [0,1] or population < 2.
  void validate() const;
};

struct GaCandidate {
  std::vector<std::string> tokens;
  std::size_t skeleton = 0;  // index into the skeleton list
  double score = 0.0;

  std::string text() const { return detokenize(tokens); }
};

// Fills random compatible skeletons with keywords and evolves them. A
// skeleton is compatible when at least one slot can take a keyword (any
// skeleton when the description has none). Throws
// ValidationError("no-skeleton") when nothing is compatible. Returns up to
// num_candidates distinct candidates, best first.
std::vector<GaCandidate> generate_skeleton_slogans(std::string_view description,
                                                   std::span<const Skeleton> skeletons,
                                                   const GaConfig& config,
                                                   const PosTagger& tagger);

}  // namespace slogan::baselines
