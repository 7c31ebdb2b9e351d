#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slogan/annotate.hpp"
#include "slogan/jsonl.hpp"

namespace slogan::metrics {

using annotate::ControlCode;

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Lowercased whitespace tokens with edge punctuation stripped.
std::vector<std::string> rouge_tokens(std::string_view text);

// Clipped n-gram overlap. Empty inputs (or fewer than n tokens) score 0.
// Throws ValidationError for n == 0.
RougeScore rouge_n(std::string_view reference, std::string_view hypothesis, std::size_t n);
RougeScore rouge_l(std::string_view reference, std::string_view hypothesis);

struct Candidate {
  std::string slogan;
  ControlCode code = ControlCode::NN;  // code requested at generation time
};

struct CandidateSet {
  std::string pair_id;
  std::string description;
  std::vector<Candidate> candidates;
};

// Per requested code: share of candidates whose derived code matches.
std::map<ControlCode, double> ctrl_accuracy(std::span<const CandidateSet> sets,
                                            const annotate::PosTagger& tagger);

// Mean over sets of unique / total lowercased lexical tokens.
double diversity_score(std::span<const CandidateSet> sets);

// Mean over all candidates of the share of their lowercased lexical tokens
// absent from the description.
double abstractiveness(std::span<const CandidateSet> sets);

// Throws ValidationError on empty input or a length mismatch.
double cohen_kappa(std::span<const std::string> labels_a, std::span<const std::string> labels_b);

enum class SignificanceTest { t_test, wilcoxon };

std::string_view to_string(SignificanceTest test);

// Two-sided p-values on the differences b - a. All-zero differences give 1.
// Throws ValidationError when lengths differ or are below 2.
double paired_t_test(std::span<const double> a, std::span<const double> b);
// Exact null distribution up to 25 non-zero differences, otherwise the
// normal approximation with continuity and tie corrections.
double wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b);
double paired_significance(std::span<const double> a, std::span<const double> b,
                           SignificanceTest method);

// Pluggable truthfulness scorer (entailment, FactCC-style classifiers).
// No implementation ships with the toolkit.
class TruthfulnessScorer {
 public:
  virtual ~TruthfulnessScorer() = default;
  virtual std::string name() const = 0;
  virtual double score(std::string_view description, std::string_view slogan) const = 0;
};

struct EvalReport {
  std::string system;
  std::size_t num_pairs = 0;
  std::map<std::string, RougeScore> rouge;  // rouge1, rouge2, rougeL
  double diversity = 0.0;
  double abstractiveness = 0.0;
  std::map<ControlCode, double> ctrl_accuracy;
  std::map<std::string, double> significance;
  std::map<std::string, double> truthfulness;
};

io::Json to_json(const RougeScore& score);
io::Json to_json(const EvalReport& report);

// Fixed-width table: one row per system, ROUGE-1/-2/-L F1 as percentages,
// then diversity and abstractiveness.
std::string format_results_table(std::span<const EvalReport> reports);

}  // namespace slogan::metrics
