#include <unordered_set>

#include "slogan/error.hpp"
#include "slogan/metrics.hpp"
#include "slogan/text.hpp"

namespace slogan::metrics {

namespace {

std::vector<std::string> lower_tokens(std::string_view s) {
  std::vector<std::string> out = text::lexical_tokens(s);
  for (std::string& t : out) t = text::to_lower(t);
  return out;
}

}  // namespace

std::map<ControlCode, double> ctrl_accuracy(std::span<const CandidateSet> sets,
                                            const annotate::PosTagger& tagger) {
  std::map<ControlCode, std::pair<std::size_t, std::size_t>> tally;  // hits, total
  for (const CandidateSet& set : sets) {
    for (const Candidate& c : set.candidates) {
      auto& [hits, total] = tally[c.code];
      ++total;
      if (text::trim(c.slogan).empty()) continue;
      if (annotate::derive_control_code(c.slogan, tagger) == c.code) ++hits;
    }
  }
  std::map<ControlCode, double> out;
  for (const auto& [code, counts] : tally) {
    out[code] = static_cast<double>(counts.first) / static_cast<double>(counts.second);
  }
  return out;
}

double diversity_score(std::span<const CandidateSet> sets) {
  if (sets.empty()) return 0.0;
  double sum = 0.0;
  for (const CandidateSet& set : sets) {
    std::unordered_set<std::string> unique;
    std::size_t total = 0;
    for (const Candidate& c : set.candidates) {
      for (std::string& t : lower_tokens(c.slogan)) {
        unique.insert(std::move(t));
        ++total;
      }
    }
    if (total > 0) sum += static_cast<double>(unique.size()) / static_cast<double>(total);
  }
  return sum / static_cast<double>(sets.size());
}

double abstractiveness(std::span<const CandidateSet> sets) {
  double sum = 0.0;
  std::size_t counted = 0;
  for (const CandidateSet& set : sets) {
    const std::vector<std::string> desc = lower_tokens(set.description);
    const std::unordered_set<std::string> vocab(desc.begin(), desc.end());
    for (const Candidate& c : set.candidates) {
      const std::vector<std::string> tokens = lower_tokens(c.slogan);
      if (tokens.empty()) continue;
      std::size_t novel = 0;
      for (const std::string& t : tokens) novel += vocab.count(t) == 0 ? 1 : 0;
      sum += static_cast<double>(novel) / static_cast<double>(tokens.size());
      ++counted;
    }
  }
  return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
}

}  // namespace slogan::metrics
