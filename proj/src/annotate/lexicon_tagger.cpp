#include <algorithm>
#include <array>

#include "lexicon_data.hpp"
#include "slogan/annotate.hpp"
#include "slogan/entmask.hpp"
#include "slogan/text.hpp"

namespace slogan::annotate {

namespace {

bool all_punct(std::string_view s) {
  for (std::size_t pos = 0; pos < s.size();) {
    const text::CodePoint cp = text::decode_at(s, pos);
    if (!text::is_punct(cp.value)) return false;
    pos += cp.length;
  }
  return !s.empty();
}

std::string punct_tag(std::string_view p) {
  const char c = p.front();
  if (p == "&") return "CC";
  if (c == ',') return ",";
  if (c == '.' && p.size() >= 3) return ":";
  if (c == '.' || c == '!' || c == '?') return ".";
  if (c == '(' || c == '[' || c == '{') return "-LRB-";
  if (c == ')' || c == ']' || c == '}') return "-RRB-";
  if (c == '"' || c == '\'' || c == '`') return "''";
  if (c == '$') return "$";
  if (c == '#') return "#";
  if (c == ':' || c == ';' || c == '-' || c == '|' || c == '/') return ":";
  if (p == "\xE2\x80\x93" || p == "\xE2\x80\x94" || p == "\xE2\x80\xA6") return ":";
  if (p == "\xE2\x80\x9C" || p == "\xE2\x80\x9D" || p == "\xE2\x80\x98" ||
      p == "\xE2\x80\x99") {
    return "''";
  }
  return "SYM";
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_upper_ascii(char c) { return c >= 'A' && c <= 'Z'; }

}  // namespace

std::vector<std::pair<std::string, std::size_t>> pos_tokens(std::string_view text) {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (std::string_view chunk : text::split_whitespace(text)) {
    std::size_t base = static_cast<std::size_t>(chunk.data() - text.data());
    if (entmask::starts_with_mask_token(chunk)) {
      const std::size_t close = chunk.find(']');
      out.emplace_back(std::string(chunk.substr(0, close + 1)), base);
      chunk = chunk.substr(close + 1);
      base += close + 1;
      if (chunk.empty()) continue;
    } else if (chunk.starts_with("<company>")) {
      out.emplace_back("<company>", base);
      chunk = chunk.substr(9);
      base += 9;
      if (chunk.empty()) continue;
    }
    std::size_t begin = 0;
    while (begin < chunk.size()) {
      const text::CodePoint cp = text::decode_at(chunk, begin);
      if (!text::is_punct(cp.value)) break;
      std::size_t run = begin + cp.length;
      while (run < chunk.size() && text::decode_at(chunk, run).value == cp.value) {
        run += cp.length;
      }
      out.emplace_back(std::string(chunk.substr(begin, run - begin)), base + begin);
      begin = run;
    }
    if (begin == chunk.size()) continue;
    std::vector<std::pair<std::string, std::size_t>> trailing;
    std::size_t end = chunk.size();
    while (end > begin) {
      const text::CodePoint cp = text::decode_before(chunk, end);
      if (!text::is_punct(cp.value)) break;
      std::size_t run = end - cp.length;
      while (run > begin && text::decode_before(chunk, run).value == cp.value) {
        run -= cp.length;
      }
      trailing.emplace_back(std::string(chunk.substr(run, end - run)), base + run);
      end = run;
    }
    out.emplace_back(std::string(chunk.substr(begin, end - begin)), base + begin);
    out.insert(out.end(), trailing.rbegin(), trailing.rend());
  }
  return out;
}

LexiconPosTagger::LexiconPosTagger() {
  for (std::size_t b = 0; b < data::kLexiconBlocks; ++b) {
    const data::LexiconBlock& block = data::kLexicon[b];
    for (std::string_view word : text::split_whitespace(block.words)) {
      const auto [it, inserted] = lexicon_.emplace(std::string(word), block.tag);
      // Noun/verb homographs ("design", "care") read as nouns.
      const std::string_view tag(block.tag);
      if (!inserted && it->second.starts_with("VB") && tag.starts_with("NN")) it->second = block.tag;
    }
  }
  // Only words that tag back to their own entry can fill a slot.
  for (const auto& [word, tag] : lexicon_) {
    if (tag_word(word).str() == tag) by_tag_[tag].push_back(word);
  }
  for (auto& [tag, words] : by_tag_) std::sort(words.begin(), words.end());
}

PosTag LexiconPosTagger::tag_word(std::string_view word) const {
  if (word.empty()) return PosTag("NN");
  if (entmask::starts_with_mask_token(word) || word == "<company>") {
    return PosTag("NNP");
  }
  if (all_punct(word)) return PosTag(punct_tag(word));

  const std::string lw = text::to_lower(word);
  const bool has_digit = std::any_of(lw.begin(), lw.end(),
                                     [](char c) { return c >= '0' && c <= '9'; });
  if (has_digit) {
    const bool has_alpha = std::any_of(lw.begin(), lw.end(),
                                       [](char c) { return c >= 'a' && c <= 'z'; });
    if (!has_alpha) return PosTag("CD");
    if (ends_with(lw, "st") || ends_with(lw, "nd") || ends_with(lw, "rd") ||
        ends_with(lw, "th")) {
      const std::string_view stem(lw.data(), lw.size() - 2);
      if (std::all_of(stem.begin(), stem.end(),
                      [](char c) { return c >= '0' && c <= '9'; })) {
        return PosTag("JJ");
      }
    }
    return PosTag(is_upper_ascii(word.front()) ? "NNP" : "NN");
  }

  if (const auto it = lexicon_.find(lw); it != lexicon_.end()) {
    return PosTag(it->second);
  }
  for (std::string_view poss : {std::string_view("'s"), std::string_view("\xE2\x80\x99s")}) {
    if (ends_with(word, poss) && word.size() > poss.size()) {
      return tag_word(word.substr(0, word.size() - poss.size()));
    }
  }

  const auto known_as = [&](const std::string& stem, std::string_view prefix) {
    const auto it = lexicon_.find(stem);
    return it != lexicon_.end() && it->second.starts_with(prefix);
  };
  if (lw.size() > 4 && ends_with(lw, "ly")) return PosTag("RB");
  if (lw.size() > 5 && ends_with(lw, "ing")) return PosTag("VBG");
  if (lw.size() > 4 && ends_with(lw, "ed")) return PosTag("VBN");
  if (lw.size() > 3 && ends_with(lw, "s") && !ends_with(lw, "ss")) {
    std::vector<std::string> stems{lw.substr(0, lw.size() - 1)};
    if (ends_with(lw, "ies")) stems.push_back(lw.substr(0, lw.size() - 3) + "y");
    if (ends_with(lw, "es")) stems.push_back(lw.substr(0, lw.size() - 2));
    for (const std::string& stem : stems) {
      if (known_as(stem, "NN")) return PosTag(is_upper_ascii(word.front()) ? "NNPS" : "NNS");
      if (known_as(stem, "VB")) return PosTag("VBZ");
    }
  }
  if (is_upper_ascii(word.front())) return PosTag("NNP");

  static constexpr std::array<std::string_view, 10> kAdjSuffixes = {
      "ful", "ous", "ive", "able", "ible", "al", "ic", "less", "ish", "ary"};
  static constexpr std::array<std::string_view, 14> kNounSuffixes = {
      "tion", "sion", "ment", "ness", "ity", "ship", "ism", "ist", "er",
      "or", "ance", "ence", "ware", "age"};
  static constexpr std::array<std::string_view, 4> kVerbSuffixes = {
      "ize", "ise", "ify", "izes"};
  if (lw.size() > 5) {
    for (std::string_view s : kAdjSuffixes) if (ends_with(lw, s)) return PosTag("JJ");
  }
  for (std::string_view s : kNounSuffixes) if (ends_with(lw, s)) return PosTag("NN");
  for (std::string_view s : kVerbSuffixes) if (ends_with(lw, s)) return PosTag("VB");
  if (ends_with(lw, "s") && !ends_with(lw, "ss")) return PosTag("NNS");
  return PosTag("NN");
}

std::vector<TaggedToken> LexiconPosTagger::tag(std::string_view text) const {
  std::vector<TaggedToken> out;
  for (auto& [token, offset] : pos_tokens(text)) {
    PosTag tag = tag_word(token);
    out.push_back({std::move(token), std::move(tag), offset});
  }
  return out;
}

std::vector<std::string> LexiconPosTagger::vocabulary(const PosTag& tag) const {
  const auto it = by_tag_.find(tag.str());
  return it == by_tag_.end() ? std::vector<std::string>{} : it->second;
}

}  // namespace slogan::annotate
