#include "slogan/text.hpp"

#include <algorithm>

namespace slogan::text {

CodePoint decode_at(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return {};
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {0xFFFD, 1};
  }
  if (pos + len > s.size()) return {0xFFFD, 1};
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return {0xFFFD, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len};
}

CodePoint decode_before(std::string_view s, std::size_t pos) {
  if (pos == 0 || pos > s.size()) return {};
  std::size_t start = pos - 1;
  while (start > 0 && pos - start < 4 &&
         (static_cast<unsigned char>(s[start]) & 0xC0) == 0x80) {
    --start;
  }
  CodePoint cp = decode_at(s, start);
  if (start + cp.length != pos) return {0xFFFD, 1};
  return cp;
}

bool is_space(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
         cp == '\v' || cp == 0xA0 || cp == 0x2028 || cp == 0x2029 ||
         cp == 0x3000 || (cp >= 0x2000 && cp <= 0x200B);
}

bool is_punct(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  return (cp >= 0xA1 && cp <= 0xBF && cp != 0xAA && cp != 0xB5 &&
          cp != 0xBA) ||
         cp == 0xD7 || cp == 0xF7 || (cp >= 0x2010 && cp <= 0x205E) ||
         (cp >= 0x20A0 && cp <= 0x20CF) || (cp >= 0x2190 && cp <= 0x23FF) ||
         (cp >= 0x25A0 && cp <= 0x27BF) || (cp >= 0x3001 && cp <= 0x303F) ||
         cp == 0xFFFD;
}

bool is_alnum(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
           (cp >= 'A' && cp <= 'Z');
  }
  return !is_space(cp) && !is_punct(cp);
}

char to_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = to_lower(c);
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (to_lower(a[i]) != to_lower(b[i])) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  std::size_t begin = 0;
  while (begin < s.size()) {
    const CodePoint cp = decode_at(s, begin);
    if (!is_space(cp.value)) break;
    begin += cp.length;
  }
  std::size_t end = s.size();
  while (end > begin) {
    const CodePoint cp = decode_before(s, end);
    if (!is_space(cp.value)) break;
    end -= cp.length;
  }
  return s.substr(begin, end - begin);
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  std::size_t start = std::string_view::npos;
  while (pos < s.size()) {
    const CodePoint cp = decode_at(s, pos);
    if (is_space(cp.value)) {
      if (start != std::string_view::npos) {
        out.push_back(s.substr(start, pos - start));
        start = std::string_view::npos;
      }
    } else if (start == std::string_view::npos) {
      start = pos;
    }
    pos += cp.length;
  }
  if (start != std::string_view::npos) out.push_back(s.substr(start));
  return out;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  for (std::string_view part : split_whitespace(s)) {
    if (!out.empty()) out.push_back(' ');
    out.append(part);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

namespace {

template <typename Pred>
std::string_view strip_edges(std::string_view s, Pred drop) {
  std::size_t begin = 0;
  while (begin < s.size()) {
    const CodePoint cp = decode_at(s, begin);
    if (!drop(cp.value)) break;
    begin += cp.length;
  }
  std::size_t end = s.size();
  while (end > begin) {
    const CodePoint cp = decode_before(s, end);
    if (!drop(cp.value)) break;
    end -= cp.length;
  }
  return s.substr(begin, end - begin);
}

bool is_intra_word_joiner(char32_t cp) {
  return cp == '\'' || cp == '-' || cp == 0x2019 || cp == 0x2010;
}

}  // namespace

std::string_view strip_non_alnum(std::string_view s) {
  return strip_edges(s, [](char32_t cp) { return !is_alnum(cp); });
}

std::string_view strip_edge_punct(std::string_view s) {
  return strip_edges(s, [](char32_t cp) { return is_punct(cp); });
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  for (std::string_view token : split_whitespace(s)) {
    std::string_view core = strip_edge_punct(token);
    if (!core.empty()) out.emplace_back(core);
  }
  return out;
}

std::size_t word_count(std::string_view s) { return words(s).size(); }

std::vector<std::string> lexical_tokens(std::string_view s) {
  std::vector<std::string> out;
  for (std::string_view chunk : split_whitespace(s)) {
    // Peel leading punctuation, grouping runs of the same character.
    std::size_t begin = 0;
    while (begin < chunk.size()) {
      const CodePoint cp = decode_at(chunk, begin);
      if (!is_punct(cp.value)) break;
      std::size_t run = begin + cp.length;
      while (run < chunk.size() && decode_at(chunk, run).value == cp.value) {
        run += cp.length;
      }
      out.emplace_back(chunk.substr(begin, run - begin));
      begin = run;
    }
    if (begin == chunk.size()) continue;
    std::vector<std::string> trailing;
    std::size_t end = chunk.size();
    while (end > begin) {
      const CodePoint cp = decode_before(chunk, end);
      if (!is_punct(cp.value)) break;
      std::size_t run = end - cp.length;
      while (run > begin && decode_before(chunk, run).value == cp.value) {
        run -= cp.length;
      }
      trailing.emplace_back(chunk.substr(run, end - run));
      end = run;
    }
    // Interior punctuation other than apostrophes/hyphens splits the word.
    std::size_t piece = begin;
    std::size_t pos = begin;
    while (pos < end) {
      const CodePoint cp = decode_at(chunk, pos);
      if (is_punct(cp.value) && !is_intra_word_joiner(cp.value)) {
        if (pos > piece) out.emplace_back(chunk.substr(piece, pos - piece));
        out.emplace_back(chunk.substr(pos, cp.length));
        piece = pos + cp.length;
      }
      pos += cp.length;
    }
    if (end > piece) out.emplace_back(chunk.substr(piece, end - piece));
    out.insert(out.end(), trailing.rbegin(), trailing.rend());
  }
  return out;
}

namespace {

bool matches_ci_at(std::string_view hay, std::size_t pos,
                   std::string_view needle) {
  if (pos + needle.size() > hay.size()) return false;
  for (std::size_t i = 0; i < needle.size(); ++i) {
    if (to_lower(hay[pos + i]) != to_lower(needle[i])) return false;
  }
  return true;
}

}  // namespace

std::size_t find_word_ci(std::string_view haystack, std::string_view needle,
                         std::size_t from) {
  if (needle.empty()) return std::string_view::npos;
  const bool alnum_head = is_alnum(decode_at(needle, 0).value);
  const bool alnum_tail = is_alnum(decode_before(needle, needle.size()).value);
  for (std::size_t pos = from; pos + needle.size() <= haystack.size(); ++pos) {
    if (!matches_ci_at(haystack, pos, needle)) continue;
    if (alnum_head && pos > 0 && is_alnum(decode_before(haystack, pos).value)) {
      continue;
    }
    const std::size_t end = pos + needle.size();
    if (alnum_tail && end < haystack.size() &&
        is_alnum(decode_at(haystack, end).value)) {
      continue;
    }
    return pos;
  }
  return std::string_view::npos;
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) return true;
  for (std::size_t pos = 0; pos + needle.size() <= haystack.size(); ++pos) {
    if (matches_ci_at(haystack, pos, needle)) return true;
  }
  return false;
}

std::string replace_all(std::string_view s, std::string_view from,
                        std::string_view to) {
  if (from.empty()) return std::string(s);
  std::string out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = s.find(from, pos);
    if (hit == std::string_view::npos) break;
    out.append(s.substr(pos, hit - pos));
    out.append(to);
    pos = hit + from.size();
  }
  out.append(s.substr(pos));
  return out;
}

}  // namespace slogan::text
