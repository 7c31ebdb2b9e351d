#include <array>

#include "slogan/baselines.hpp"
#include "slogan/error.hpp"
#include "slogan/metrics.hpp"
#include "slogan/text.hpp"

namespace slogan::baselines {

namespace {

constexpr std::array<std::string_view, 24> kAbbreviations = {
    "mr.",   "mrs.",  "ms.",  "dr.",  "prof.", "sr.",  "jr.",  "st.",
    "inc.",  "ltd.",  "co.",  "corp.", "llc.", "plc.", "vs.",  "etc.",
    "e.g.",  "i.e.",  "no.",  "u.s.", "u.k.", "approx.", "est.", "dept."};

bool is_abbreviation(std::string_view token) {
  while (!token.empty() && !text::is_alnum(static_cast<unsigned char>(token.front()))) {
    token.remove_prefix(1);
  }
  const std::string lower = text::to_lower(token);
  for (std::string_view a : kAbbreviations) {
    if (lower == a) return true;
  }
  // Single-letter initials such as "J."
  return lower.size() == 2 && lower[1] == '.' && lower[0] >= 'a' && lower[0] <= 'z';
}

}  // namespace

std::string first_sentence(std::string_view description) {
  const std::string_view s = text::trim(description);
  for (std::string_view token : text::split_whitespace(s)) {
    // Closing quotes or brackets may follow the terminator.
    std::size_t end = token.size();
    while (end > 0 && (token[end - 1] == '"' || token[end - 1] == '\'' || token[end - 1] == ')')) {
      --end;
    }
    if (end == 0) continue;
    const char last = token[end - 1];
    if (last != '.' && last != '!' && last != '?') continue;
    if (last == '.' && is_abbreviation(token.substr(0, end))) continue;
    const auto stop = static_cast<std::size_t>(token.data() + token.size() - s.data());
    return std::string(s.substr(0, stop));
  }
  return std::string(s);
}

std::string first_k_words(std::string_view description, std::size_t k) {
  const std::vector<std::string_view> tokens = text::split_whitespace(description);
  if (tokens.empty() || k == 0) return {};
  const std::size_t take = std::min(k, tokens.size());
  const char* begin = tokens.front().data();
  const char* end = tokens[take - 1].data() + tokens[take - 1].size();
  return std::string(begin, static_cast<std::size_t>(end - begin));
}

SweepResult sweep_k(std::span<const ReferencePair> pairs, std::size_t k_min, std::size_t k_max) {
  if (pairs.empty()) throw ValidationError("sweep_k: no pairs");
  if (k_min == 0 || k_min > k_max) throw ValidationError("sweep_k: empty k range");
  SweepResult result;
  double best = -1.0;
  const auto n = static_cast<double>(pairs.size());
  for (std::size_t k = k_min; k <= k_max; ++k) {
    KPoint point{k, 0.0, 0.0, 0.0};
    for (const ReferencePair& p : pairs) {
      const std::string hyp = first_k_words(p.description, k);
      point.rouge1 += metrics::rouge_n(p.slogan, hyp, 1).f1;
      point.rouge2 += metrics::rouge_n(p.slogan, hyp, 2).f1;
      point.rougeL += metrics::rouge_l(p.slogan, hyp).f1;
    }
    point.rouge1 /= n;
    point.rouge2 /= n;
    point.rougeL /= n;
    if (point.rouge1 > best) {
      best = point.rouge1;
      result.best_k = k;
    }
    result.curve.push_back(point);
  }
  return result;
}

}  // namespace slogan::baselines
