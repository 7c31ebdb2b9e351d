#include <string>
#include <unordered_set>

#include "slogan/annotate.hpp"
#include "slogan/text.hpp"

namespace slogan::annotate {

namespace {

const std::unordered_set<std::string>& stopwords() {
  static const std::unordered_set<std::string> set = [] {
    std::unordered_set<std::string> s;
    constexpr const char* kList =
        "i me my myself we our ours ourselves you you're you've you'll you'd "
        "your yours yourself yourselves he him his himself she she's her hers "
        "herself it it's its itself they them their theirs themselves what "
        "which who whom this that that'll these those am is are was were be "
        "been being have has had having do does did doing a an the and but if "
        "or because as until while of at by for with about against between "
        "into through during before after above below to from up down in out "
        "on off over under again further then once here there when where why "
        "how all any both each few more most other some such no nor not only "
        "own same so than too very s t can will just don don't should "
        "should've now d ll m o re ve y ain aren aren't couldn couldn't didn "
        "didn't doesn doesn't hadn hadn't hasn hasn't haven haven't isn isn't "
        "ma mightn mightn't mustn mustn't needn needn't shan shan't shouldn "
        "shouldn't wasn wasn't weren weren't won won't wouldn wouldn't we're "
        "we've we'll i'm";
    for (std::string_view w : text::split_whitespace(kList)) s.emplace(w);
    return s;
  }();
  return set;
}

}  // namespace

bool is_english_stopword(std::string_view lowercase_word) {
  return stopwords().count(std::string(lowercase_word)) > 0;
}

double StopwordLanguageDetector::stopword_ratio(std::string_view s) const {
  const std::vector<std::string> ws = text::words(s);
  if (ws.empty()) return 0.0;
  std::size_t hits = 0;
  for (const std::string& w : ws) {
    std::string lower = text::to_lower(w);
    // Curly apostrophes are common in crawled text.
    lower = text::replace_all(lower, "\xE2\x80\x99", "'");
    if (is_english_stopword(lower)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(ws.size());
}

bool StopwordLanguageDetector::is_english(std::string_view s) const {
  return stopword_ratio(s) >= threshold_;
}

}  // namespace slogan::annotate
