#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

#include "slogan/baselines.hpp"
#include "slogan/text.hpp"

namespace slogan::baselines {

namespace {

bool is_content_tag(const PosTag& tag) {
  const std::string& t = tag.str();
  return t.starts_with("NN") || t.starts_with("VB") || t.starts_with("JJ");
}

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }

bool attaches_left(std::string_view tok) {
  static constexpr std::string_view kClosers[] = {",", ".", "!", "?", ":", ";", ")", "]",
                                                  "}", "...", "%", "'s", "…"};
  return std::find(std::begin(kClosers), std::end(kClosers), tok) != std::end(kClosers) ||
         (!tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) {
           return c == '.' || c == '!' || c == '?';
         }));
}

bool attaches_right(std::string_view tok) {
  return tok == "(" || tok == "[" || tok == "{" || tok == "$" || tok == "#";
}

}  // namespace

std::string Skeleton::key() const {
  std::string out;
  for (const PosTag& t : pos_sequence) {
    if (!out.empty()) out += ' ';
    out += t.str();
  }
  return out;
}

std::vector<Skeleton> mine_skeletons(std::span<const std::string> slogans, const PosTagger& tagger) {
  std::map<std::string, std::size_t> index;
  std::vector<Skeleton> out;
  for (const std::string& slogan : slogans) {
    const std::vector<annotate::TaggedToken> tokens = tagger.tag(slogan);
    if (tokens.size() < 3 || tokens.size() > 12) continue;
    Skeleton sk;
    for (const auto& t : tokens) sk.pos_sequence.push_back(t.tag);
    const std::string key = sk.key();
    if (const auto it = index.find(key); it != index.end()) {
      ++out[it->second].frequency;
      continue;
    }
    sk.frequency = 1;
    sk.example = slogan;
    index.emplace(key, out.size());
    out.push_back(std::move(sk));
  }
  std::stable_sort(out.begin(), out.end(), [](const Skeleton& a, const Skeleton& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.key() < b.key();
  });
  return out;
}

std::vector<Keyword> extract_keywords(std::string_view description, const PosTagger& tagger) {
  std::vector<Keyword> out;
  std::unordered_map<std::string, std::size_t> index;
  const std::vector<annotate::TaggedToken> tokens = tagger.tag(description);
  for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
    const annotate::TaggedToken& t = tokens[pos];
    if (!is_content_tag(t.tag) || t.text.size() < 2) continue;
    if (!std::all_of(t.text.begin(), t.text.end(), [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '\'' ||
                 static_cast<unsigned char>(c) >= 0x80;
        })) {
      continue;
    }
    const std::string lower = text::to_lower(t.text);
    if (annotate::is_english_stopword(lower)) continue;
    if (const auto it = index.find(lower); it != index.end()) {
      ++out[it->second].count;
      continue;
    }
    index.emplace(lower, out.size());
    out.push_back({t.text, t.tag, 1, pos});
  }
  std::stable_sort(out.begin(), out.end(), [](const Keyword& a, const Keyword& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.first_position < b.first_position;
  });
  return out;
}

std::string match_case(std::string_view word, std::string_view model) {
  std::string out(word);
  if (out.empty() || model.empty()) return out;
  const bool all_upper = model.size() > 1 &&
                         std::none_of(model.begin(), model.end(), is_lower) &&
                         std::any_of(model.begin(), model.end(), is_upper);
  if (all_upper) {
    for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  } else if (is_upper(model.front())) {
    out.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(out.front())));
  } else if (is_lower(model.front())) {
    out.front() = static_cast<char>(std::tolower(static_cast<unsigned char>(out.front())));
  }
  return out;
}

std::pair<std::vector<std::string>, std::vector<std::string>> crossover(
    std::vector<std::string> a, std::vector<std::string> b, std::size_t i, std::size_t j) {
  std::string from_a = match_case(a.at(i), b.at(j));
  std::string from_b = match_case(b[j], a[i]);
  a[i] = std::move(from_b);
  b[j] = std::move(from_a);
  return {std::move(a), std::move(b)};
}

std::vector<std::string> mutate(std::vector<std::string> words, std::size_t index,
                                std::string_view replacement) {
  words.at(index) = match_case(replacement, words[index]);
  return words;
}

std::string detokenize(std::span<const std::string> tokens) {
  std::string out;
  bool glue_next = false;
  for (const std::string& tok : tokens) {
    if (!out.empty() && !glue_next && !attaches_left(tok)) out += ' ';
    out += tok;
    glue_next = attaches_right(tok);
  }
  return out;
}

}  // namespace slogan::baselines
