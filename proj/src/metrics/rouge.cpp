#include <algorithm>
#include <map>

#include "slogan/error.hpp"
#include "slogan/metrics.hpp"
#include "slogan/text.hpp"

namespace slogan::metrics {

namespace {

RougeScore make_score(double overlap, double hyp_total, double ref_total) {
  RougeScore s;
  if (hyp_total == 0.0 || ref_total == 0.0) return s;
  s.precision = overlap / hyp_total;
  s.recall = overlap / ref_total;
  if (s.precision + s.recall > 0.0) {
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  }
  return s;
}

std::map<std::vector<std::string>, std::size_t> ngram_counts(const std::vector<std::string>& tokens,
                                                             std::size_t n) {
  std::map<std::vector<std::string>, std::size_t> counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

}  // namespace

std::vector<std::string> rouge_tokens(std::string_view s) {
  std::vector<std::string> out = text::words(s);
  for (std::string& w : out) w = text::to_lower(w);
  return out;
}

RougeScore rouge_n(std::string_view reference, std::string_view hypothesis, std::size_t n) {
  if (n == 0) throw ValidationError("rouge_n: n must be positive");
  const auto ref = ngram_counts(rouge_tokens(reference), n);
  const auto hyp = ngram_counts(rouge_tokens(hypothesis), n);
  std::size_t overlap = 0;
  std::size_t hyp_total = 0;
  std::size_t ref_total = 0;
  for (const auto& [gram, count] : hyp) {
    hyp_total += count;
    if (const auto it = ref.find(gram); it != ref.end()) overlap += std::min(count, it->second);
  }
  for (const auto& [gram, count] : ref) ref_total += count;
  return make_score(static_cast<double>(overlap), static_cast<double>(hyp_total),
                    static_cast<double>(ref_total));
}

RougeScore rouge_l(std::string_view reference, std::string_view hypothesis) {
  const std::vector<std::string> ref = rouge_tokens(reference);
  const std::vector<std::string> hyp = rouge_tokens(hypothesis);
  std::vector<std::size_t> prev(hyp.size() + 1, 0);
  std::vector<std::size_t> row(hyp.size() + 1, 0);
  for (std::size_t i = 1; i <= ref.size(); ++i) {
    for (std::size_t j = 1; j <= hyp.size(); ++j) {
      row[j] = ref[i - 1] == hyp[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], row[j - 1]);
    }
    std::swap(prev, row);
  }
  return make_score(static_cast<double>(prev[hyp.size()]), static_cast<double>(hyp.size()),
                    static_cast<double>(ref.size()));
}

}  // namespace slogan::metrics
