#include "slogan/entmask.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "slogan/error.hpp"
#include "slogan/text.hpp"

namespace slogan::entmask {

namespace {

constexpr std::array<std::string_view, 6> kWords = {
    "country", "date", "number", "location", "person", "national"};

bool is_ascii_alnum(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

// End of the alphanumeric run that follows the '[' at `open`.
std::size_t bracket_word_end(std::string_view s, std::size_t open) {
  std::size_t j = open + 1;
  while (j < s.size() && is_ascii_alnum(s[j])) ++j;
  return j;
}

}  // namespace

std::string_view to_string(EntityType type) {
  switch (type) {
    case EntityType::GPE: return "GPE";
    case EntityType::DATE: return "DATE";
    case EntityType::CARDINAL: return "CARDINAL";
    case EntityType::LOCATION: return "LOCATION";
    case EntityType::PERSON: return "PERSON";
    case EntityType::NORP: return "NORP";
  }
  return "GPE";
}

std::string_view mask_word(EntityType type) {
  return kWords[static_cast<std::size_t>(type)];
}

std::optional<EntityType> type_from_label(std::string_view label) {
  const std::string l = text::to_lower(label);
  if (l == "gpe") return EntityType::GPE;
  if (l == "date") return EntityType::DATE;
  if (l == "cardinal") return EntityType::CARDINAL;
  if (l == "loc" || l == "location") return EntityType::LOCATION;
  if (l == "person" || l == "per") return EntityType::PERSON;
  if (l == "norp") return EntityType::NORP;
  return std::nullopt;
}

std::string EntityIdAssigner::assign(const EntitySpan& span) {
  for (const Seen& prior : seen_) {
    if (prior.type != span.type) continue;
    if (text::contains_ci(prior.surface, span.surface) ||
        text::contains_ci(span.surface, prior.surface)) {
      seen_.push_back({span.surface, span.type, prior.token});
      map_.forward.emplace(span.surface, prior.token);
      return prior.token;
    }
  }
  int& counter = map_.counters[span.type];
  std::string token = "[" + std::string(mask_word(span.type));
  if (counter > 0) token += std::to_string(counter);
  token += "]";
  ++counter;
  seen_.push_back({span.surface, span.type, token});
  map_.forward.emplace(span.surface, token);
  map_.reverse.emplace(token, span.surface);
  return token;
}

MaskMap assign_entity_ids(std::span<const EntitySpan> spans) {
  EntityIdAssigner assigner;
  for (const EntitySpan& span : spans) assigner.assign(span);
  return std::move(assigner).release();
}

namespace {

void validate_spans(std::string_view text, std::vector<EntitySpan>& spans) {
  std::sort(spans.begin(), spans.end(),
            [](const EntitySpan& a, const EntitySpan& b) { return a.start < b.start; });
  std::size_t prev_end = 0;
  bool first = true;
  for (EntitySpan& span : spans) {
    if (span.start >= span.end || span.end > text.size()) {
      throw ValidationError("entity span out of range");
    }
    if (!first && span.start < prev_end) throw ValidationError("overlap");
    const std::string_view slice = text.substr(span.start, span.end - span.start);
    if (span.surface.empty()) {
      span.surface = std::string(slice);
    } else if (span.surface != slice) {
      throw ValidationError("entity surface does not match text slice");
    }
    prev_end = span.end;
    first = false;
  }
}

std::string substitute(std::string_view text, const std::vector<EntitySpan>& spans,
                       const std::vector<std::string>& tokens) {
  std::string out;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    out.append(text.substr(pos, spans[i].start - pos));
    out.append(tokens[i]);
    pos = spans[i].end;
  }
  out.append(text.substr(pos));
  return out;
}

}  // namespace

MaskedPair mask_pair(std::string_view description, std::string_view slogan,
                     std::vector<EntitySpan> description_spans,
                     std::vector<EntitySpan> slogan_spans) {
  validate_spans(description, description_spans);
  validate_spans(slogan, slogan_spans);

  EntityIdAssigner assigner;
  std::vector<std::string> desc_tokens;
  for (const EntitySpan& span : description_spans) {
    desc_tokens.push_back(assigner.assign(span));
  }
  std::vector<std::string> slogan_tokens;
  for (const EntitySpan& span : slogan_spans) {
    slogan_tokens.push_back(assigner.assign(span));
  }
  return {substitute(description, description_spans, desc_tokens),
          substitute(slogan, slogan_spans, slogan_tokens),
          std::move(assigner).release()};
}

std::vector<EntitySpan> masked_entity_spans(std::string_view text,
                                            const annotate::EntityTagger& tagger) {
  std::vector<annotate::NamedEntity> found = tagger.entities(text);
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) { return a.start < b.start; });
  std::vector<EntitySpan> spans;
  std::size_t prev_end = 0;
  for (const annotate::NamedEntity& e : found) {
    const auto type = type_from_label(e.label);
    if (!type || e.start >= e.end || e.end > text.size()) continue;
    if (!spans.empty() && e.start < prev_end) continue;
    spans.push_back({e.start, e.end, std::string(text.substr(e.start, e.end - e.start)),
                     *type});
    prev_end = e.end;
  }
  return spans;
}

bool is_legal_mask_token(std::string_view token) {
  if (token.size() < 3 || token.front() != '[' || token.back() != ']') return false;
  const std::string_view inner = token.substr(1, token.size() - 2);
  for (std::string_view word : kWords) {
    if (!inner.starts_with(word)) continue;
    const std::string_view suffix = inner.substr(word.size());
    if (suffix.empty()) return true;
    if (suffix.front() == '0') return false;
    return std::all_of(suffix.begin(), suffix.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  }
  return false;
}

bool starts_with_mask_token(std::string_view text) {
  if (text.empty() || text.front() != '[') return false;
  const std::size_t end = bracket_word_end(text, 0);
  return end < text.size() && text[end] == ']' &&
         is_legal_mask_token(text.substr(0, end + 1));
}

std::set<std::string> mask_tokens_in(std::string_view text) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '[') continue;
    const std::size_t end = bracket_word_end(text, i);
    if (end < text.size() && text[end] == ']') {
      const std::string_view token = text.substr(i, end - i + 1);
      if (is_legal_mask_token(token)) out.emplace(token);
    }
  }
  return out;
}

bool is_repair_stopword(std::string_view w) {
  static constexpr std::array<std::string_view, 22> kStop = {
      "a",    "an",     "the",  "of",     "for",    "in",   "from", "at",
      "by",   "with",   "to",   "on",     "into",   "onto", "near", "around",
      "across", "within", "throughout", "over", "under", "about"};
  return std::find(kStop.begin(), kStop.end(), w) != kStop.end();
}

namespace {

void drop_trailing_stopwords(std::string& out) {
  while (true) {
    std::size_t end = out.size();
    while (end > 0 && (out[end - 1] == ' ' || out[end - 1] == '\t')) --end;
    std::size_t begin = end;
    while (begin > 0 && out[begin - 1] != ' ' && out[begin - 1] != '\t') --begin;
    if (begin == end) {
      out.resize(end);
      return;
    }
    if (!is_repair_stopword(text::to_lower(std::string_view(out).substr(begin, end - begin)))) {
      out.resize(end);
      return;
    }
    out.resize(begin);
  }
}

}  // namespace

std::string repair_mask_tokens(std::string_view text, const MaskMap& map) {
  std::string closed;
  closed.reserve(text.size() + 4);
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '[') {
      closed.push_back(text[i++]);
      continue;
    }
    const std::size_t end = bracket_word_end(text, i);
    closed.append(text.substr(i, end - i));
    closed.push_back(']');
    i = (end < text.size() && text[end] == ']') ? end + 1 : end;
  }

  std::string out;
  out.reserve(closed.size());
  for (std::size_t i = 0; i < closed.size(); ++i) {
    if (closed[i] != '[') {
      out.push_back(closed[i]);
      continue;
    }
    const std::size_t end = bracket_word_end(closed, i);  // closed[end] == ']'
    const std::string_view token = std::string_view(closed).substr(i, end - i + 1);
    if (is_legal_mask_token(token) && map.has_token(token)) {
      out.append(token);
    } else {
      drop_trailing_stopwords(out);
    }
    i = end;
  }
  return text::collapse_whitespace(out);
}

std::string unmask_slogan(std::string_view text, const MaskMap& map) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '[') {
      out.push_back(text[i]);
      continue;
    }
    const std::size_t end = bracket_word_end(text, i);
    if (end >= text.size() || text[end] != ']') {
      throw std::logic_error("malformed mask token survived repair");
    }
    const std::string token(text.substr(i, end - i + 1));
    const auto it = map.reverse.find(token);
    if (it == map.reverse.end()) {
      throw std::logic_error("unknown mask token survived repair: " + token);
    }
    out.append(it->second);
    i = end;
  }
  return out;
}

std::vector<MaskedRecord> filter_hallucination_pairs(std::vector<MaskedRecord> rows) {
  std::vector<MaskedRecord> kept;
  kept.reserve(rows.size());
  for (MaskedRecord& row : rows) {
    if (row.split == "train") {
      const std::set<std::string> desc = mask_tokens_in(row.masked_description);
      const std::set<std::string> slogan = mask_tokens_in(row.masked_slogan);
      if (!std::includes(desc.begin(), desc.end(), slogan.begin(), slogan.end())) {
        continue;
      }
    }
    kept.push_back(std::move(row));
  }
  return kept;
}

}  // namespace slogan::entmask
