#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Byte-oriented UTF-8 text helpers shared by every module. Case folding is
// ASCII-only; non-ASCII letters compare byte-for-byte.
namespace slogan::text {

struct CodePoint {
  char32_t value = 0;
  std::size_t length = 0;  // bytes consumed; 0 only at end of input
};

// Decodes the code point starting at `pos`. Malformed bytes decode as
// U+FFFD with length 1.
CodePoint decode_at(std::string_view s, std::size_t pos);
// Code point ending right before `pos` (value 0 when pos == 0).
CodePoint decode_before(std::string_view s, std::size_t pos);

bool is_space(char32_t cp);
bool is_punct(char32_t cp);
bool is_alnum(char32_t cp);

char to_lower(char c);
std::string to_lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b);

std::string_view trim(std::string_view s);
std::string collapse_whitespace(std::string_view s);
std::vector<std::string_view> split_whitespace(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Removes every leading and trailing code point that is not alphanumeric.
std::string_view strip_non_alnum(std::string_view s);
// Removes leading and trailing punctuation (whitespace is left alone).
std::string_view strip_edge_punct(std::string_view s);

// Whitespace-delimited tokens with edge punctuation stripped; tokens that
// are pure punctuation are dropped. This is the unit of every length rule.
std::vector<std::string> words(std::string_view s);
std::size_t word_count(std::string_view s);

// Tokens for diversity/abstractiveness: whitespace split, sentence
// punctuation detached into its own tokens, intra-word apostrophes and
// hyphens kept. Not lowercased.
std::vector<std::string> lexical_tokens(std::string_view s);

// Case-insensitive search that only accepts matches whose alphanumeric
// edges sit on word boundaries. Returns npos when absent.
std::size_t find_word_ci(std::string_view haystack, std::string_view needle,
                         std::size_t from = 0);
bool contains_ci(std::string_view haystack, std::string_view needle);

// Plain substring replacement of every occurrence.
std::string replace_all(std::string_view s, std::string_view from,
                        std::string_view to);

}  // namespace slogan::text
